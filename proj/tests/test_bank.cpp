#include "doctest.h"
#include "support/gen.hpp"
#include "support/oracles.hpp"

#include "mdtds/bank.hpp"
#include "mdtds/engine.hpp"

using namespace mdt;

namespace {

Word w(char const *text) { return parse_word(text, 2); }
Rational R(long p, long q = 1)
{
  Rational r(p, q);
  r.canonicalize();
  return r;
}
using Kind = BankPeriodicity::Kind;
using TK = Trichotomy::Kind;

Rational multiplier_of_letters(std::vector<Rational> const &q, oracle::Letters const &t)
{
  Rational m = 1;
  for (auto const &[g, s] : t) {
    m = s > 0 ? Rational(m * q[static_cast<std::size_t>(g - 1)]) : Rational(m / q[static_cast<std::size_t>(g - 1)]);
  }
  return m;
}

Rational multiplier_by_letters(std::vector<Rational> const &q, Word const &t)
{
  return multiplier_of_letters(q, oracle::expand(t));
}

} // namespace

TEST_CASE("bank parameters")
{
  CHECK(BankParams::from_percentages({R(50), R(100)}).q == std::vector<Rational>{R(3, 2), R(2)});
  CHECK_THROWS_AS(BankParams({R(1)}), InvalidArgument);
  CHECK_THROWS_AS(BankParams({R(2), R(1, 2)}), InvalidArgument);
  CHECK_THROWS_AS(BankParams({}), InvalidArgument);
  CHECK_THROWS_AS(BankParams::from_percentages({R(0)}), InvalidArgument);
}

TEST_CASE("bank evaluation and multipliers")
{
  BankParams const p({2, 3});
  CHECK(bank_evaluate(p, Word{}, R(5)) == 5);
  CHECK(bank_evaluate(p, w("s1^2 s2^-1"), R(1)) == R(4, 3));
  CHECK(bank_evaluate(p, w("s1 s2 s1^-1"), R(1)) == 3);
  CHECK(bank_word_multiplier(p, Word{}) == 1);
  CHECK(bank_word_multiplier(p, w("s1 s2 s1^-1 s2^-1")) == 1);
  CHECK(bank_word_multiplier(p, w("s1")) == 2);
  CHECK_THROWS_AS((void)bank_evaluate(p, w("s1"), R(0)), DomainViolation);
}

TEST_CASE("property: bank evaluation is a homomorphism into the multiplicative group")
{
  BankParams const p({R(2), R(7, 4), R(11, 10)});
  auto const fam = bank_family(p);
  gen::Source src(23);
  for (int i = 0; i < 500; ++i) {
    Word const a = src.word(3, 9);
    Word const b = src.word(3, 9);
    Rational const x = src.rational(1, 100, 9);
    CHECK(bank_word_multiplier(p, a * b) == bank_word_multiplier(p, a) * bank_word_multiplier(p, b));
    CHECK(bank_word_multiplier(p, a) == multiplier_by_letters(p.q, a));
    CHECK(bank_evaluate(p, a, x) == evaluate(fam, a, x));
    CHECK(bank_evaluate(p, a, x) == x * bank_word_multiplier(p, a));
  }
}

TEST_CASE("periodicity classification")
{
  BankParams const p({2, 3});
  auto const all = bank_classify_periodicity(p, SubgroupSpec::balanced_all(2), 4);
  CHECK(all.kind == Kind::all_positive_reals);

  auto const cyc = bank_classify_periodicity(p, SubgroupSpec::cyclic(2, w("s1")), 4);
  CHECK(cyc.kind == Kind::empty);
  REQUIRE(cyc.witness.has_value());
  CHECK(*cyc.witness == w("s1"));
  CHECK(cyc.witness_multiplier == 2);

  auto const even = bank_classify_periodicity(p, SubgroupSpec::even(2, {1, 2}), 3);
  CHECK(even.kind == Kind::empty);
  REQUIRE(even.witness.has_value());
  CHECK(member(SubgroupSpec::even(2, {1, 2}), *even.witness));
  CHECK(even.witness->length() <= 3);
  CHECK(bank_word_multiplier(p, *even.witness) != 1);

  BankParams const same({R(2), R(2)});
  auto const diff = bank_classify_periodicity(same, SubgroupSpec::cyclic(2, w("s1 s2^-1")), 4);
  CHECK(diff.kind == Kind::all_positive_reals);

  auto const one = bank_classify_periodicity(p, SubgroupSpec::balanced_one(2, 1), 4);
  CHECK(one.kind == Kind::empty);
  CHECK(*one.witness == w("s2"));

  auto const inter = bank_classify_periodicity(
    p, SubgroupSpec::intersection(2, {SubgroupSpec::balanced_all(2), SubgroupSpec::even(2, {1})}), 3);
  CHECK(inter.kind == Kind::all_positive_reals);
}

TEST_CASE("property: emptiness witnesses break periodicity at every sampled point")
{
  BankParams const p({R(2), R(3)});
  auto const fam = bank_family(p);
  std::vector<SubgroupSpec> const specs{SubgroupSpec::cyclic(2, w("s1")), SubgroupSpec::even(2, {1, 2}),
                                        SubgroupSpec::even(2, {1}), SubgroupSpec::balanced_one(2, 2),
                                        SubgroupSpec::cyclic(2, w("s1 s2^-1")), SubgroupSpec::full(2)};
  gen::Source src(61);
  for (auto const &H : specs) {
    auto const v = bank_classify_periodicity(p, H, 3);
    REQUIRE(v.kind == Kind::empty);
    REQUIRE(v.witness.has_value());
    CHECK(member(H, *v.witness));
    for (int i = 0; i < 20; ++i) {
      Rational const x = src.rational(1, 50, 7);
      CHECK(evaluate(fam, *v.witness, x) != x);
    }
  }
}

TEST_CASE("property: balanced subgroup multipliers are all one")
{
  BankParams const p({R(2), R(3)});
  for (Word const &y : subgroup_ball(SubgroupSpec::balanced_all(2), 5)) { CHECK(bank_word_multiplier(p, y) == 1); }
}

TEST_CASE("ball sums: product formula and free-group enumeration")
{
  BankParams const p({2, 3});
  CHECK(bank_ball_sum_product(p, R(5), 0) == 5);
  CHECK(bank_ball_sum_product(p, R(1), 1) == R(91, 6));
  CHECK(bank_ball_sum_brute(p, R(1), 0) == 1);
  CHECK(bank_ball_sum_brute(p, R(1), 1) == R(41, 6));
}

TEST_CASE("property: product formula equals the box sum")
{
  for (auto const &q : {std::vector<Rational>{2, 3}, std::vector<Rational>{R(3, 2), R(5, 4)},
                        std::vector<Rational>{R(2), R(3, 2), R(7, 3)}}) {
    BankParams const p(q);
    for (long n = 0; n <= (q.size() == 3 ? 5 : 6); ++n) {
      for (Rational const &x : {R(1), R(2, 7)}) { CHECK(bank_ball_sum_product(p, x, n) == oracle::box_sum(q, x, n)); }
    }
  }
}

TEST_CASE("property: free-group sum matches the breadth-first ball and stays below the box sum")
{
  BankParams const p({R(2), R(3)});
  for (long n = 1; n <= 5; ++n) {
    Rational brute = 0;
    for (auto const &t : oracle::ball(2, n)) { brute += multiplier_of_letters(p.q, t); }
    CHECK(bank_ball_sum_brute(p, R(1), n) == brute);
    CHECK(bank_ball_sum_brute(p, R(1), n) < bank_ball_sum_product(p, R(1), n));
  }
}

TEST_CASE("Cesaro trichotomy")
{
  auto const fin = bank_cesaro_limit(BankParams({R(3, 2), R(2)}));
  CHECK(fin.kind == TK::finite);
  CHECK(fin.coefficient == 3);
  CHECK(bank_cesaro_limit(BankParams({R(11, 10), R(11, 10)})).kind == TK::zero);
  CHECK(bank_cesaro_limit(BankParams({R(2), R(3)})).kind == TK::infinite);
}
