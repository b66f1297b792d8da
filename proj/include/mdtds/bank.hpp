#pragma once

#include "mdtds/engine.hpp"
#include "mdtds/rational.hpp"
#include "mdtds/subgroup.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mdt {

/// Deposit model: bank i multiplies a deposit by q_i = 1 + p_i/100 > 1 per
/// unit of time. f_i(x) = q_i x on (0, ∞), everything exact.
struct BankParams
{
  std::vector<Rational> q;

  explicit BankParams(std::vector<Rational> rates);
  static BankParams from_percentages(std::vector<Rational> const &p);

  int rank() const { return static_cast<int>(q.size()); }
};

MapFamily<Rational> bank_family(BankParams const &params);

// D_t(x) = x Π q_i^{ε}; the product is commutative.
Rational bank_evaluate(BankParams const &params, Word const &t, Rational const &x);

// Π over the letters of y of q_j^{δ}: x is H-periodic iff this is 1 for
// every y ∈ H.
Rational bank_word_multiplier(BankParams const &params, Word const &y);

struct BankPeriodicity
{
  enum class Kind { all_positive_reals, empty, undecided } kind = Kind::undecided;
  std::optional<Word> witness;            // y ∈ H with multiplier != 1
  Rational            witness_multiplier; // multiplier of the witness
  long                depth = 0;          // search depth when undecided
  std::string         reason;
};

/// Set-level answer for Per_H (it does not depend on x):
///  1. a generator s_i ∈ H has multiplier q_i > 1, so Per_H is empty;
///  2. if every element of H provably has multiplier 1 (H inside the
///     balanced subgroup, K_M with M = all, or a cyclic group whose
///     generator has multiplier 1), Per_H = (0, ∞);
///  3. otherwise H ∩ V_depth is searched for an element with multiplier != 1.
BankPeriodicity bank_classify_periodicity(BankParams const &params, SubgroupSpec const &spec, long search_depth,
                                          std::uint64_t cap = kDefaultNodeCap);

// x Π_i (q_i^{n+1} - q_i^{-n}) / (q_i - 1): the product over the box
// {-n..n}^|S| of exponent vectors, which is what the Cesàro-limit derivation
// for this model sums. It is not the sum over the free-group ball.
Rational bank_ball_sum_product(BankParams const &params, Rational const &x, long n);

// Σ_{t∈V_n} D_t(x) by enumeration of the free-group ball.
Rational bank_ball_sum_brute(BankParams const &params, Rational const &x, long n, std::uint64_t cap = kDefaultNodeCap);

struct Trichotomy
{
  enum class Kind { zero, finite, infinite } kind = Kind::zero;
  Rational coefficient; // limit = coefficient * x when finite
};

/// Limit of C_n(x) derived from the box-sum formula, decided by comparing
/// Q = Π q_i with q - 1 exactly. Finite branch: (q-2) / (q Π (1 - q_i^-1)).
Trichotomy bank_cesaro_limit(BankParams const &params);

std::string to_string(Trichotomy const &t);
std::string to_string(BankPeriodicity::Kind k);

} // namespace mdt
