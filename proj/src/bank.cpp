#include "mdtds/bank.hpp"

namespace mdt {

BankParams::BankParams(std::vector<Rational> rates) : q(std::move(rates))
{
  if (q.empty()) { throw InvalidArgument("bank model needs at least one bank"); }
  for (auto const &r : q) {
    if (r <= 1) { throw InvalidArgument("bank rate q_i = " + to_string(r) + " must exceed 1"); }
  }
}

BankParams BankParams::from_percentages(std::vector<Rational> const &p)
{
  std::vector<Rational> rates;
  for (auto const &pi : p) { rates.emplace_back(Rational(1) + pi / 100); }
  return BankParams(std::move(rates));
}

MapFamily<Rational> bank_family(BankParams const &params)
{
  std::vector<Map<Rational>> ms;
  for (auto const &r : params.q) { ms.emplace_back(maps::Affine<Rational>{r, Rational(0)}); }
  return MapFamily<Rational>(std::move(ms), Interval<Rational>::positive_reals());
}

Rational bank_word_multiplier(BankParams const &params, Word const &y)
{
  if (max_generator(y) > params.rank()) { throw InvalidArgument("word uses a bank that does not exist"); }
  Rational m = 1;
  for (Run const &r : y.runs()) { m *= pow(params.q[static_cast<std::size_t>(r.gen.index - 1)], r.exp); }
  return m;
}

Rational bank_evaluate(BankParams const &params, Word const &t, Rational const &x)
{
  if (x <= 0) { throw DomainViolation("deposit " + to_string(x) + " is outside (0, +inf)", "e"); }
  return bank_word_multiplier(params, t) * x;
}

namespace {

// Every element of H has multiplier 1, by an argument on the spec alone.
bool multipliers_trivial(BankParams const &params, SubgroupSpec const &spec)
{
  if (spec.is_balanced_all()) { return true; }
  if (auto const *c = std::get_if<subgroup::Cyclic>(&spec.variant())) { return bank_word_multiplier(params, c->u) == 1; }
  if (auto const *k = std::get_if<subgroup::Kernel>(&spec.variant())) {
    return static_cast<int>(k->gens.size()) == spec.rank(); // K_S = {e}
  }
  if (auto const *i = std::get_if<subgroup::Intersection>(&spec.variant())) {
    for (auto const &p : i->parts) {
      if (multipliers_trivial(params, p)) { return true; }
    }
  }
  return false;
}

} // namespace

BankPeriodicity bank_classify_periodicity(BankParams const &params, SubgroupSpec const &spec, long search_depth,
                                          std::uint64_t cap)
{
  if (search_depth < 1) { throw InvalidArgument("search depth must be >= 1"); }
  if (spec.rank() != params.rank()) { throw InvalidArgument("subgroup and bank model have different |S|"); }
  using K = BankPeriodicity::Kind;

  if (auto const g = meta(spec).generator_in_S) {
    Word const y = Word::generator(g->index);
    return {K::empty, y, bank_word_multiplier(params, y), 0,
            "generator s" + std::to_string(g->index) + " lies in H and q_" + std::to_string(g->index) + " > 1"};
  }
  if (multipliers_trivial(params, spec)) {
    return {K::all_positive_reals, std::nullopt, Rational(1), 0, "every element of H has multiplier 1"};
  }
  if (auto const *c = std::get_if<subgroup::Cyclic>(&spec.variant())) {
    return {K::empty, c->u, bank_word_multiplier(params, c->u), 0, "the generator of H has multiplier != 1"};
  }
  for (Word const &y : subgroup_ball(spec, search_depth, cap)) {
    Rational const m = bank_word_multiplier(params, y);
    if (m != 1) { return {K::empty, y, m, search_depth, "found y in H with multiplier != 1"}; }
  }
  return {K::undecided, std::nullopt, Rational(1), search_depth, "no element of H ∩ V_n with multiplier != 1"};
}

Rational bank_ball_sum_product(BankParams const &params, Rational const &x, long n)
{
  if (n < 0) { throw InvalidArgument("n must be >= 0"); }
  Rational out = x;
  for (auto const &qi : params.q) { out *= (pow(qi, n + 1) - pow(qi, -n)) / (qi - 1); }
  return out;
}

Rational bank_ball_sum_brute(BankParams const &params, Rational const &x, long n, std::uint64_t cap)
{
  Rational sum = 0;
  for_each_in_ball(params.rank(), n, [&](Word const &t, long) { sum += bank_evaluate(params, t, x); }, cap);
  return sum;
}

Trichotomy bank_cesaro_limit(BankParams const &params)
{
  if (params.rank() < 2) { throw InvalidArgument("the Cesàro trichotomy needs |S| > 1"); }
  Rational Q = 1;
  Rational shrink = 1;
  for (auto const &qi : params.q) {
    Q *= qi;
    shrink *= Rational(1) - Rational(1) / qi;
  }
  Rational const qm1 = 2 * params.rank() - 1;
  if (Q < qm1) { return {Trichotomy::Kind::zero, 0}; }
  if (Q > qm1) { return {Trichotomy::Kind::infinite, 0}; }
  Rational const q = 2 * params.rank();
  return {Trichotomy::Kind::finite, Rational((q - 2) / (q * shrink))};
}

std::string to_string(Trichotomy const &t)
{
  switch (t.kind) {
  case Trichotomy::Kind::zero: return "zero";
  case Trichotomy::Kind::finite: return "finite(" + to_string(t.coefficient) + "*x)";
  case Trichotomy::Kind::infinite: return "infinite";
  }
  return "?";
}

std::string to_string(BankPeriodicity::Kind k)
{
  switch (k) {
  case BankPeriodicity::Kind::all_positive_reals: return "all_positive_reals";
  case BankPeriodicity::Kind::empty: return "empty";
  case BankPeriodicity::Kind::undecided: return "undecided";
  }
  return "?";
}

} // namespace mdt
