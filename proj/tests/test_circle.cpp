#include "doctest.h"
#include "support/gen.hpp"
#include "support/oracles.hpp"

#include "mdtds/circle.hpp"
#include "mdtds/engine.hpp"

using namespace mdt;

namespace {

Word w(char const *text, int rank = 2) { return parse_word(text, rank); }
Rational R(long p, long q = 1)
{
  Rational r(p, q);
  r.canonicalize();
  return r;
}
using Kind = CircleSetVerdict::Kind;

CircleParams<Rational> const half_third({R(1, 2), R(1, 3)});

} // namespace

TEST_CASE("circle evaluation")
{
  CHECK(circle_evaluate(half_third, Word{}, R(2, 5)) == R(2, 5));
  CHECK(circle_evaluate(half_third, w("s1 s2"), R(0)) == R(5, 6));
  CHECK(circle_evaluate(half_third, w("s2^-2"), R(1, 4)) == R(7, 12));
  CHECK(evaluate(circle_family(half_third), w("s2^-2"), R(1, 4)) == R(7, 12));
  CHECK_THROWS_AS((void)circle_evaluate(half_third, Word{}, R(1)), InvalidArgument);
  CHECK_THROWS_AS(CircleParams<Rational>({R(0)}), InvalidArgument);
  CHECK_THROWS_AS(CircleParams<Rational>({}), InvalidArgument);
}

TEST_CASE("rotation number of a word")
{
  CHECK(q_of_word(half_third, Word{}) == 0);
  CHECK(q_of_word(half_third, w("s1^2 s2^-3")) == 0);
  CHECK(q_of_word(half_third, w("s1")) == R(1, 2));
  CHECK_THROWS_AS((void)q_of_word(half_third, w("s3", 3)), InvalidArgument);
}

TEST_CASE("property: rotations commute and match the mod-1 oracle")
{
  gen::Source src(3);
  CircleParams<Rational> const p({R(2, 7), R(5, 3), R(1, 11)});
  for (int i = 0; i < 500; ++i) {
    Word const a = src.word(3, 8);
    Word const b = src.word(3, 8);
    Rational const x = src.unit_rational();
    if (x == 1) { continue; }
    CHECK(circle_evaluate(p, a * b, x) == circle_evaluate(p, b * a, x));
    Rational q = 0;
    for (auto const &[g, s] : oracle::expand(a)) { q += Rational(s) * p.theta[static_cast<std::size_t>(g - 1)]; }
    CHECK(circle_evaluate(p, a, x) == oracle::mod1(x + q));
  }
}

TEST_CASE("fixed set")
{
  CHECK(circle_fixed_set(CircleParams<Rational>({R(1), R(2)})).kind == Kind::full_circle);
  auto const e = circle_fixed_set(CircleParams<Rational>({R(1, 2), R(1)}));
  CHECK(e.kind == Kind::empty);
  CHECK(*e.witness == w("s1"));
  CHECK(circle_fixed_set(CircleParams<Rational>({R(2), R(3), R(5)})).kind == Kind::full_circle);
  CHECK(circle_fixed_set(CircleParams<double>({1.0, 2.0})).kind == Kind::undecided);
  CHECK(circle_fixed_set(CircleParams<double>({0.5, 2.0})).kind == Kind::empty);
}

TEST_CASE("periodic set")
{
  CHECK(circle_periodic_set(half_third, SubgroupSpec::cyclic(2, w("s1^2")), 4).kind == Kind::full_circle);
  auto const e = circle_periodic_set(half_third, SubgroupSpec::cyclic(2, w("s1")), 4);
  CHECK(e.kind == Kind::empty);
  CHECK(*e.witness == w("s1"));
  CHECK(circle_periodic_set(half_third, SubgroupSpec::balanced_all(2), 4).kind == Kind::full_circle);

  auto const one = circle_periodic_set(half_third, SubgroupSpec::balanced_one(2, 1), 4);
  CHECK(one.kind == Kind::empty);
  CHECK(*one.witness == w("s2"));
  CHECK(circle_periodic_set(half_third, SubgroupSpec::even(2, {1, 2}), 4).kind == Kind::empty);
  CHECK(circle_periodic_set(CircleParams<Rational>({R(1, 2), R(1)}), SubgroupSpec::even(2, {1}), 4).kind ==
        Kind::full_circle);

  auto const inter = circle_periodic_set(
    half_third, SubgroupSpec::intersection(2, {SubgroupSpec::balanced_all(2), SubgroupSpec::even(2, {1})}), 3);
  CHECK(inter.kind == Kind::undecided);
  CHECK(circle_periodic_set(CircleParams<double>({0.5, 1.0 / 3.0}), SubgroupSpec::cyclic(2, w("s1^2")), 4).kind ==
        Kind::undecided);
  CHECK_THROWS_AS((void)circle_periodic_set(half_third, SubgroupSpec::full(3), 2), InvalidArgument);
}

TEST_CASE("property: set verdicts agree with brute-force integrality on the subgroup ball")
{
  std::vector<SubgroupSpec> const specs{SubgroupSpec::full(2),           SubgroupSpec::cyclic(2, w("s1^2")),
                                        SubgroupSpec::cyclic(2, w("s1 s2")), SubgroupSpec::balanced_all(2),
                                        SubgroupSpec::balanced_one(2, 2),    SubgroupSpec::even(2, {1}),
                                        SubgroupSpec::even(2, {2}),          SubgroupSpec::kernel(2, {1, 2})};
  std::vector<CircleParams<Rational>> const ps{half_third, CircleParams<Rational>({R(1, 2), R(1)}),
                                               CircleParams<Rational>({R(3), R(1, 4)}),
                                               CircleParams<Rational>({R(1), R(2)})};
  for (auto const &p : ps) {
    for (auto const &H : specs) {
      auto const v = circle_periodic_set(p, H, 4);
      bool all_integral = true;
      for (Word const &t : subgroup_ball(H, 4)) { all_integral = all_integral && is_integer(q_of_word(p, t)); }
      CHECK(v.kind != Kind::undecided);
      CHECK((v.kind == Kind::full_circle) == all_integral);
    }
  }
}

TEST_CASE("period subgroup from a rational angle")
{
  CHECK(rational_period_subgroup(half_third, 1) == SubgroupSpec::cyclic(2, w("s1^2")));
  CHECK(rational_period_subgroup(CircleParams<Rational>({R(1), R(3, 7)}), 2) == SubgroupSpec::cyclic(2, w("s2^7")));
  CHECK(rational_period_subgroup(CircleParams<Rational>({R(2), R(3, 7)}), 1) == SubgroupSpec::cyclic(2, w("s1")));
  CHECK_THROWS_AS((void)rational_period_subgroup(half_third, 3), InvalidArgument);

  auto const H = rational_period_subgroup(half_third, 1);
  CHECK(circle_periodic_set(half_third, H, 4).kind == Kind::full_circle);
  CHECK(verified(is_H_periodic(circle_family(half_third), H, R(1, 7), 3, 4)));
}

TEST_CASE("property: bounded fixed and periodic verdicts coincide")
{
  auto const fam = circle_family(half_third);
  std::vector<SubgroupSpec> const specs{SubgroupSpec::cyclic(2, w("s1^2")), SubgroupSpec::cyclic(2, w("s1")),
                                        SubgroupSpec::balanced_all(2), SubgroupSpec::even(2, {1, 2}),
                                        SubgroupSpec::cyclic(2, w("s1^2 s2^3"))};
  gen::Source src(77);
  for (auto const &H : specs) {
    for (int i = 0; i < 10; ++i) {
      Rational x = src.unit_rational(50);
      if (x == 1) { x = 0; }
      CHECK(verified(is_H_fixed(fam, H, x, 4)) == verified(is_H_periodic(fam, H, x, 4, 4)));
    }
  }
}

TEST_CASE("orbit density")
{
  auto const dense = density_check(CircleParams<double>({0.4142135623730951}), 1, 0.0, 10000, 0.01);
  CHECK(dense.dense);
  CHECK(dense.max_gap < 0.01);

  auto const half = density_check(CircleParams<Rational>({R(1, 2)}), 1, R(0), 50, R(1, 100));
  CHECK_FALSE(half.dense);
  CHECK(half.max_gap == R(1, 2));
  CHECK(density_check(CircleParams<Rational>({R(1, 3)}), 1, R(0), 50, R(1, 100)).max_gap == R(1, 3));
  CHECK(density_check(CircleParams<Rational>({R(1, 2)}), 1, R(0), 2, R(1, 100)).max_gap == R(1, 2));

  CHECK_THROWS_AS((void)density_check(half_third, 1, R(0), 0, R(1, 2)), InvalidArgument);
  CHECK_THROWS_AS((void)density_check(half_third, 1, R(0), 5, R(2)), InvalidArgument);
  CHECK_THROWS_AS((void)density_check(half_third, 3, R(0), 5, R(1, 2)), InvalidArgument);
}
