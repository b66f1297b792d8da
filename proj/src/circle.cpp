#include "mdtds/circle.hpp"

namespace mdt {

std::string to_string(CircleSetVerdict::Kind k)
{
  switch (k) {
  case CircleSetVerdict::Kind::full_circle: return "full_circle";
  case CircleSetVerdict::Kind::empty: return "empty";
  case CircleSetVerdict::Kind::undecided: return "undecided";
  }
  return "?";
}

namespace {

std::vector<Word> outside(std::set<int> const &gens, int rank)
{
  std::vector<Word> out;
  for (int j = 1; j <= rank; ++j) {
    if (!gens.contains(j)) { out.push_back(Word::generator(j)); }
  }
  return out;
}

} // namespace

std::optional<std::vector<Word>> abelian_image_generators(SubgroupSpec const &spec)
{
  int const rank = spec.rank();
  auto const &v  = spec.variant();
  if (std::holds_alternative<subgroup::FullGroup>(v)) { return outside({}, rank); }
  if (auto const *c = std::get_if<subgroup::Cyclic>(&v)) { return std::vector<Word>{c->u}; }
  // Both H_A^(=) and K_A contain s_j for j ∉ A and force zero exponent sums on A.
  if (auto const *b = std::get_if<subgroup::Balanced>(&v)) { return outside(b->gens, rank); }
  if (auto const *k = std::get_if<subgroup::Kernel>(&v)) { return outside(k->gens, rank); }
  if (auto const *e = std::get_if<subgroup::EvenCount>(&v)) {
    // {σ : Σ_{i∈A} σ_i even} is spanned by e_j (j ∉ A), 2e_a and e_a + e_i.
    auto out = outside(e->gens, rank);
    int const a = *e->gens.begin();
    out.push_back(Word::generator(a, 2));
    for (int i : e->gens) {
      if (i != a) { out.push_back(Word::generator(a) * Word::generator(i)); }
    }
    return out;
  }
  return std::nullopt;
}

SubgroupSpec rational_period_subgroup(CircleParams<Rational> const &p, int i0)
{
  if (i0 < 1 || i0 > p.rank()) { throw InvalidArgument("angle index out of range"); }
  Rational const &theta = p.theta[static_cast<std::size_t>(i0 - 1)];
  long const m = theta.get_den().get_si();
  return SubgroupSpec::cyclic(p.rank(), Word::generator(i0, m));
}

} // namespace mdt
