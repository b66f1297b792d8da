#pragma once

#include "mdtds/engine.hpp"
#include "mdtds/subgroup.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace mdt {

/// Rotations f_i(x) = x + θ_i mod 1 on [0, 1). Scalar = Rational is the exact
/// mode; Scalar = double is the approximate mode for irrational angles, in
/// which integrality is only tested up to the tolerance.
template <typename Scalar>
struct CircleParams
{
  std::vector<Scalar> theta;
  Scalar              tolerance = is_exact_v<Scalar> ? Scalar(0) : Scalar(kDefaultTolerance);

  explicit CircleParams(std::vector<Scalar> angles) : theta(std::move(angles))
  {
    if (theta.empty()) { throw InvalidArgument("circle model needs at least one angle"); }
    for (auto const &t : theta) {
      if (!(t > Scalar(0))) { throw InvalidArgument("rotation angles must be positive"); }
    }
  }

  int rank() const { return static_cast<int>(theta.size()); }
};

template <typename Scalar>
MapFamily<Scalar> circle_family(CircleParams<Scalar> const &p)
{
  std::vector<Map<Scalar>> ms;
  for (auto const &t : p.theta) { ms.emplace_back(maps::Rotation<Scalar>{t}); }
  return MapFamily<Scalar>(std::move(ms), Interval<Scalar>::half_open(Scalar(0), Scalar(1)), p.tolerance);
}

/// q(t) = Σ ε_j θ_{i_j}: a homomorphism from G to (ℝ, +).
template <typename Scalar>
Scalar q_of_word(CircleParams<Scalar> const &p, Word const &t)
{
  if (max_generator(t) > p.rank()) { throw InvalidArgument("word uses a generator with no angle"); }
  Scalar q = ScalarTraits<Scalar>::zero();
  for (Run const &r : t.runs()) { q += Scalar(r.exp) * p.theta[static_cast<std::size_t>(r.gen.index - 1)]; }
  return q;
}

/// D_t(x) = (x + q(t)) mod 1.
template <typename Scalar>
Scalar circle_evaluate(CircleParams<Scalar> const &p, Word const &t, Scalar const &x)
{
  if (x < Scalar(0) || !(x < Scalar(1))) { throw InvalidArgument("circle point must lie in [0, 1)"); }
  return ScalarTraits<Scalar>::frac(Scalar(x + q_of_word(p, t)));
}

struct CircleSetVerdict
{
  enum class Kind { full_circle, empty, undecided } kind = Kind::undecided;
  std::optional<Word> witness; // element of H (or generator) with q ∉ ℤ
  long                depth = 0;
  std::string         note;
};

std::string to_string(CircleSetVerdict::Kind k);

/// Fix(D^G) is all of [0, 1) when every θ_i is an integer and empty
/// otherwise. In approximate mode a non-integer angle still certifies
/// emptiness, but all-integer angles only give an undecided answer.
template <typename Scalar>
CircleSetVerdict circle_fixed_set(CircleParams<Scalar> const &p)
{
  using K = CircleSetVerdict::Kind;
  for (int i = 1; i <= p.rank(); ++i) {
    if (!ScalarTraits<Scalar>::is_integer(p.theta[static_cast<std::size_t>(i - 1)], p.tolerance)) {
      return {K::empty, Word::generator(i), 0, "theta_" + std::to_string(i) + " is not an integer"};
    }
  }
  if constexpr (is_exact_v<Scalar>) {
    return {K::full_circle, std::nullopt, 0, "all angles are integers"};
  } else {
    return {K::undecided, std::nullopt, 0, "angles are integers only up to the tolerance"};
  }
}

/// Words whose exponent-sum vectors generate the image of H in ℤ^|S|, for
/// the specs where that image is known in closed form. Since q only depends
/// on exponent sums, q(H) ⊂ ℤ iff q is integral on these words. Empty
/// optional for intersections, whose image is not determined by the parts.
std::optional<std::vector<Word>> abelian_image_generators(SubgroupSpec const &spec);

/// Per_H = Fix(D^H) is all of [0, 1) if q(t) ∈ ℤ for every t ∈ H and empty
/// otherwise. Decided exactly through abelian_image_generators when
/// possible; for intersections H ∩ V_depth is searched for a witness.
template <typename Scalar>
CircleSetVerdict circle_periodic_set(CircleParams<Scalar> const &p, SubgroupSpec const &spec, long search_depth,
                                     std::uint64_t cap = kDefaultNodeCap)
{
  using K = CircleSetVerdict::Kind;
  using T = ScalarTraits<Scalar>;
  if (search_depth < 1) { throw InvalidArgument("search depth must be >= 1"); }
  if (spec.rank() != p.rank()) { throw InvalidArgument("subgroup and circle model have different |S|"); }

  auto certify_full = [&](std::string why, long depth) -> CircleSetVerdict {
    if constexpr (is_exact_v<Scalar>) {
      return {K::full_circle, std::nullopt, depth, std::move(why)};
    } else {
      return {K::undecided, std::nullopt, depth, why + "; integrality holds only up to the tolerance"};
    }
  };

  if (auto gens = abelian_image_generators(spec)) {
    for (Word const &w : *gens) {
      if (!T::is_integer(q_of_word(p, w), p.tolerance)) {
        return {K::empty, w, 0, "q(" + to_string(w) + ") = " + T::str(q_of_word(p, w)) + " is not an integer"};
      }
    }
    return certify_full("q is integral on generators of the image of H", 0);
  }
  for (Word const &t : subgroup_ball(spec, search_depth, cap)) {
    if (!T::is_integer(q_of_word(p, t), p.tolerance)) {
      return {K::empty, t, search_depth, "q(" + to_string(t) + ") = " + T::str(q_of_word(p, t)) + " is not an integer"};
    }
  }
  return {K::undecided, std::nullopt, search_depth, "q is integral on H ∩ V_n"};
}

/// For θ_{i0} = p/m in lowest terms, H = <s_{i0}^m> makes every point periodic.
SubgroupSpec rational_period_subgroup(CircleParams<Rational> const &p, int i0);

template <typename Scalar>
struct DensityResult
{
  bool   dense = false; // max_gap < eps
  Scalar max_gap;
};

/// Largest circular gap between the points x + nθ_i mod 1, 0 <= n < N.
template <typename Scalar>
DensityResult<Scalar> density_check(CircleParams<Scalar> const &p, int i, Scalar const &x, long N, Scalar const &eps)
{
  if (N < 1) { throw InvalidArgument("density_check needs N >= 1"); }
  if (!(eps > Scalar(0) && eps < Scalar(1))) { throw InvalidArgument("density_check needs 0 < eps < 1"); }
  if (i < 1 || i > p.rank()) { throw InvalidArgument("angle index out of range"); }
  using T = ScalarTraits<Scalar>;
  Scalar const theta = p.theta[static_cast<std::size_t>(i - 1)];
  std::vector<Scalar> pts;
  pts.reserve(static_cast<std::size_t>(N));
  Scalar v = T::frac(x);
  for (long n = 0; n < N; ++n) {
    pts.push_back(v);
    v = T::frac(Scalar(v + theta));
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  Scalar gap = Scalar(pts.front() + Scalar(1) - pts.back());
  for (std::size_t k = 1; k < pts.size(); ++k) {
    Scalar const g = pts[k] - pts[k - 1];
    if (g > gap) { gap = g; }
  }
  return {gap < eps, gap};
}

} // namespace mdt
