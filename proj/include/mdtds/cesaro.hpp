#pragma once

#include "mdtds/engine.hpp"

#include <atomic>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace mdt {

template <typename Scalar>
struct CesaroRecord
{
  long    n = 0;
  Integer ball_size;
  Scalar  ball_sum;
  Scalar  mean; // C_n = ball_sum / ball_size
};

template <typename Scalar>
struct CesaroReport
{
  std::vector<CesaroRecord<Scalar>> records;
  std::vector<Scalar>               sphere_sums; // Σ_{t ∈ W_k} D_t(x)

  // Last C_n with n even / odd, as crude estimates of the two subsequence limits.
  std::optional<Scalar> even_tail() const { return tail(0); }
  std::optional<Scalar> odd_tail() const { return tail(1); }

private:
  std::optional<Scalar> tail(long parity) const
  {
    for (auto it = records.rbegin(); it != records.rend(); ++it) {
      if (it->n % 2 == parity) { return it->mean; }
    }
    return std::nullopt;
  }
};

namespace detail {

template <typename Scalar>
Scalar divide(Scalar const &sum, Integer const &count)
{
  if constexpr (is_exact_v<Scalar>) {
    return Rational(sum / Rational(count));
  } else {
    return sum / count.get_d();
  }
}

} // namespace detail

/// Cesàro means C_n(x) = Σ_{t∈V_n} D_t(x) / |V_n| for n = 0..n_max from one
/// traversal of V_{n_max}.
///
/// Summation order is fixed independently of `threads`: each top-level
/// subtree (one per first letter) is summed per sphere in traversal order,
/// and the subtree partials are combined in letter order after the root.
/// Floating results are therefore bit-identical for any thread count.
template <typename Scalar>
CesaroReport<Scalar> cesaro_scan(MapFamily<Scalar> const &family, Scalar const &x, long n_max, unsigned threads = 1,
                                 std::uint64_t cap = kDefaultNodeCap)
{
  if (n_max < 0) { throw InvalidArgument("cesaro_scan needs n_max >= 0"); }
  check_node_cap(n_max, family.rank(), cap);
  if (!family.domain().contains(x)) {
    throw DomainViolation("start point " + ScalarTraits<Scalar>::str(x) + " is outside X", "e");
  }
  int const  q = 2 * family.rank();
  auto const levels = static_cast<std::size_t>(n_max + 1);
  std::vector<std::vector<Scalar>> partial(static_cast<std::size_t>(q),
                                           std::vector<Scalar>(levels, ScalarTraits<Scalar>::zero()));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(q));

  auto run_subtree = [&](int code) {
    try {
      auto &acc = partial[static_cast<std::size_t>(code)];
      BallCursor cursor(family.rank(), n_max, SignedLetter::from_code(code), cap);
      walk_orbit(family, x, cursor, [&](Word const &, long depth, Scalar const &v) {
        acc[static_cast<std::size_t>(depth)] += v;
      });
    } catch (...) {
      errors[static_cast<std::size_t>(code)] = std::current_exception();
    }
  };

  unsigned const workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(q)));
  if (workers == 1) {
    for (int code = 0; code < q; ++code) { run_subtree(code); }
  } else {
    std::atomic<int>          next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int code = next++; code < q; code = next++) { run_subtree(code); }
      });
    }
  }
  for (auto const &e : errors) {
    if (e) { std::rethrow_exception(e); }
  }

  CesaroReport<Scalar> report;
  report.sphere_sums.assign(levels, ScalarTraits<Scalar>::zero());
  report.sphere_sums[0] = x;
  for (int code = 0; code < q; ++code) {
    for (std::size_t k = 1; k < levels; ++k) { report.sphere_sums[k] += partial[static_cast<std::size_t>(code)][k]; }
  }
  Scalar running = ScalarTraits<Scalar>::zero();
  for (long n = 0; n <= n_max; ++n) {
    running += report.sphere_sums[static_cast<std::size_t>(n)];
    Integer const size = ball_size(n, family.rank());
    report.records.push_back({n, size, running, detail::divide(running, size)});
  }
  return report;
}

// Columns n, ball_size, ball_sum, C_n; rationals as "p/q".
template <typename Scalar>
std::string to_csv(CesaroReport<Scalar> const &report)
{
  using T = ScalarTraits<Scalar>;
  std::string out = "n,ball_size,ball_sum,C_n\n";
  for (auto const &r : report.records) {
    out += std::to_string(r.n) + "," + to_string(r.ball_size) + "," + T::str(r.ball_sum) + "," + T::str(r.mean) + "\n";
  }
  return out;
}

/// f_i(x) = -x for every generator; D_t(1) = (-1)^{|t|}.
template <typename Scalar>
MapFamily<Scalar> sign_family(int rank)
{
  return MapFamily<Scalar>(std::vector<Map<Scalar>>(static_cast<std::size_t>(rank), maps::Affine<Scalar>{Scalar(-1), Scalar(0)}),
                           Interval<Scalar>::real_line(), is_exact_v<Scalar> ? Scalar(0) : Scalar(kDefaultTolerance));
}

// Σ_{t∈V_n} (-1)^{|t|} = (-1)^n (q-1)^n, q = 2|S| >= 4 even.
Integer  sign_ball_sum(long n, int q);
Rational sign_cesaro(long n, int q);
// Limits of the even and odd subsequences: ±(q-2)/q.
Rational sign_cesaro_even_limit(int q);
Rational sign_cesaro_odd_limit(int q);

/// Σ_{k=1}^n k x^k in closed form; x = 1 gives n(n+1)/2.
template <typename Scalar>
Scalar geometric_k_sum(Scalar const &x, long n)
{
  if (n < 0) { throw InvalidArgument("geometric_k_sum needs n >= 0"); }
  if (x == Scalar(1)) { return Scalar(n) * Scalar(n + 1) / Scalar(2); }
  Scalar const one(1);
  Scalar const xn = detail::scalar_pow(x, n);
  Scalar const d  = one - x;
  return Scalar(x * (one - xn) / (d * d) - Scalar(n) * xn * x / d);
}

/// Per-generator constants of the growth condition: the averages of forward
/// and backward iterates behave like α_j + a_j(x)^n and β_j + b_j(x)^n with
/// 0 < a_j(x) <= a_j, 0 < b_j(x) <= b_j.
template <typename Scalar>
struct BoundParams
{
  std::vector<Scalar> alpha;
  std::vector<Scalar> beta;
  std::vector<Scalar> a;
  std::vector<Scalar> b;

  int rank() const { return static_cast<int>(alpha.size()); }
};

template <typename Scalar>
struct CesaroBounds
{
  Scalar lower;
  Scalar upper;
};

/// Bounds on lim C_n(x) for |S| > 1:
///   lower = (q-1)A / (q(q-2)),  A = Σ (α_j + β_j),
///   upper = lower + (q-2) Σ (a_j/(q-a_j-1)^2 + b_j/(q-b_j-1)^2).
/// Requires 0 < a_j, b_j < q - 1.
template <typename Scalar>
CesaroBounds<Scalar> cesaro_bounds(BoundParams<Scalar> const &p)
{
  int const s = p.rank();
  if (s < 2) { throw InvalidArgument("cesaro_bounds needs |S| > 1"); }
  if (p.beta.size() != p.alpha.size() || p.a.size() != p.alpha.size() || p.b.size() != p.alpha.size()) {
    throw InvalidArgument("cesaro_bounds: parameter vectors differ in length");
  }
  Scalar const q(2 * s);
  Scalar A = ScalarTraits<Scalar>::zero();
  Scalar gap = ScalarTraits<Scalar>::zero();
  for (std::size_t j = 0; j < p.alpha.size(); ++j) {
    for (Scalar const *c : {&p.a[j], &p.b[j]}) {
      if (!(*c > Scalar(0) && *c < q - Scalar(1))) {
        throw InvalidArgument("growth constants must satisfy 0 < a_j, b_j < 2|S| - 1");
      }
      Scalar const den = q - *c - Scalar(1);
      gap += *c / (den * den);
    }
    A += p.alpha[j] + p.beta[j];
  }
  Scalar const lower = (q - Scalar(1)) * A / (q * (q - Scalar(2)));
  return {lower, Scalar(lower + (q - Scalar(2)) * gap)};
}

} // namespace mdt
