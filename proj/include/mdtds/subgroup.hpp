#pragma once

#include "mdtds/ball.hpp"
#include "mdtds/word.hpp"

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace mdt {

class SubgroupSpec;

namespace subgroup {

struct FullGroup
{
  friend bool operator==(FullGroup const &, FullGroup const &) = default;
};
// H_u = {u^n : n ∈ ℤ}, u != e.
struct Cyclic
{
  Word u;
  friend bool operator==(Cyclic const &, Cyclic const &) = default;
};
// ∩_{i∈A} H_i^(=): exponent sum of every generator in A is zero.
// BalancedOne(i) is A = {i}; BalancedAll is A = all generators.
struct Balanced
{
  std::set<int> gens;
  friend bool operator==(Balanced const &, Balanced const &) = default;
};
// H_A: Σ_{i∈A} (n_t(s_i) + n_t(s_i^-1)) is even. A nonempty.
struct EvenCount
{
  std::set<int> gens;
  friend bool operator==(EvenCount const &, EvenCount const &) = default;
};
// K_M = ker f_M, where f_M erases every generator outside M. |M| > 1.
struct Kernel
{
  std::set<int> gens;
  friend bool operator==(Kernel const &, Kernel const &) = default;
};
struct Intersection
{
  std::vector<SubgroupSpec> parts;
  friend bool operator==(Intersection const &, Intersection const &);
};

} // namespace subgroup

/// Symbolic description of a subgroup of the free group of a fixed rank,
/// with an exact membership test.
class SubgroupSpec
{
public:
  using Variant = std::variant<subgroup::FullGroup, subgroup::Cyclic, subgroup::Balanced, subgroup::EvenCount,
                               subgroup::Kernel, subgroup::Intersection>;

  // Validates the invariants of the variant against the rank.
  SubgroupSpec(int rank, Variant v);

  static SubgroupSpec full(int rank) { return {rank, subgroup::FullGroup{}}; }
  static SubgroupSpec cyclic(int rank, Word u) { return {rank, subgroup::Cyclic{std::move(u)}}; }
  static SubgroupSpec balanced(int rank, std::set<int> gens) { return {rank, subgroup::Balanced{std::move(gens)}}; }
  static SubgroupSpec balanced_one(int rank, int i) { return balanced(rank, {i}); }
  static SubgroupSpec balanced_all(int rank);
  static SubgroupSpec even(int rank, std::set<int> gens) { return {rank, subgroup::EvenCount{std::move(gens)}}; }
  static SubgroupSpec kernel(int rank, std::set<int> gens) { return {rank, subgroup::Kernel{std::move(gens)}}; }
  static SubgroupSpec intersection(int rank, std::vector<SubgroupSpec> parts);

  int            rank() const { return rank_; }
  Variant const &variant() const { return v_; }

  bool is_balanced_all() const;

  friend bool operator==(SubgroupSpec const &, SubgroupSpec const &) = default;

private:
  int     rank_;
  Variant v_;
};

bool member(SubgroupSpec const &spec, Word const &t);

struct SubgroupIndex
{
  enum class Kind { finite, infinite, unknown } kind = Kind::unknown;
  Integer value = 0; // meaningful when kind == finite
};

struct SubgroupMeta
{
  SubgroupIndex index;
  // A generator s_i ∈ H ∩ S, if there is one. Deciding this is exact: it is
  // membership of the |S| single letters.
  std::optional<GeneratorId> generator_in_S;
};

SubgroupMeta meta(SubgroupSpec const &spec);

// H ∩ V_n in ball traversal order.
std::vector<Word> subgroup_ball(SubgroupSpec const &spec, long n, std::uint64_t cap = kDefaultNodeCap);

// `full`, `cyclic:<word>`, `bal:<i,j,...>` (empty = all), `even:<i,...>`,
// `ker:<i,...>`, `and(<spec>;<spec>;...)`.
SubgroupSpec parse_subgroup(std::string_view text, int rank);
std::string  to_string(SubgroupSpec const &spec);

// u = w c w^-1 with c cyclically reduced (first and last letters not mutually inverse).
struct CyclicDecomposition
{
  Word conjugator;
  Word core;
};
CyclicDecomposition cyclic_decomposition(Word const &u);

} // namespace mdt
