#pragma once

#include "mdtds/error.hpp"
#include "mdtds/rational.hpp"

#include <cmath>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace mdt {

/// Interval X ⊂ ℝ; a missing bound is infinite.
template <typename Scalar>
struct Interval
{
  std::optional<Scalar> lo;
  std::optional<Scalar> hi;
  bool                  lo_closed = true;
  bool                  hi_closed = true;

  static Interval closed(Scalar a, Scalar b) { return {std::move(a), std::move(b), true, true}; }
  static Interval half_open(Scalar a, Scalar b) { return {std::move(a), std::move(b), true, false}; }
  static Interval positive_reals() { return {Scalar(0), std::nullopt, false, false}; }
  static Interval real_line() { return {std::nullopt, std::nullopt, false, false}; }

  bool contains(Scalar const &x) const
  {
    if (lo && (lo_closed ? x < *lo : x <= *lo)) { return false; }
    if (hi && (hi_closed ? x > *hi : x >= *hi)) { return false; }
    return true;
  }

  std::string str() const
  {
    using T = ScalarTraits<Scalar>;
    return std::string(lo_closed && lo ? "[" : "(") + (lo ? T::str(*lo) : "-inf") + ", " +
           (hi ? T::str(*hi) : "+inf") + (hi_closed && hi ? "]" : ")");
  }
};

namespace maps {

// x -> a x + b with a != 0.
template <typename Scalar>
struct Affine
{
  Scalar a;
  Scalar b;
};

// x -> x^m on x >= 0, m >= 1. The inverse is the m-th root, which in exact
// mode exists only at perfect powers.
template <typename Scalar>
struct Power
{
  unsigned long m;
};

// x -> (x + θ) mod 1.
template <typename Scalar>
struct Rotation
{
  Scalar theta;
};

} // namespace maps

template <typename Scalar>
using Map = std::variant<maps::Affine<Scalar>, maps::Power<Scalar>, maps::Rotation<Scalar>>;

namespace detail {

template <typename Scalar>
Scalar scalar_pow(Scalar const &b, long k)
{
  if constexpr (is_exact_v<Scalar>) {
    return pow(b, k);
  } else {
    return std::pow(b, static_cast<double>(k));
  }
}

template <typename Scalar>
Scalar apply_one(maps::Affine<Scalar> const &f, Scalar const &x, long k)
{
  if (f.a == Scalar(1)) { return Scalar(x + Scalar(k) * f.b); }
  // f^k(x) = a^k x + b (a^k - 1)/(a - 1), valid for every k ∈ ℤ.
  Scalar const ak = scalar_pow(f.a, k);
  return Scalar(ak * x + f.b * (ak - Scalar(1)) / (f.a - Scalar(1)));
}

template <typename Scalar>
Scalar apply_one(maps::Power<Scalar> const &f, Scalar const &x, long k)
{
  if (x < Scalar(0)) { throw NotRepresentable("x^" + std::to_string(f.m) + " is only invertible on x >= 0"); }
  Scalar v = x;
  if (k >= 0) {
    for (long j = 0; j < k; ++j) {
      if constexpr (is_exact_v<Scalar>) {
        v = pow(v, static_cast<long>(f.m));
      } else {
        v = std::pow(v, static_cast<double>(f.m));
      }
    }
    return v;
  }
  for (long j = 0; j < -k; ++j) {
    if constexpr (is_exact_v<Scalar>) {
      auto r = exact_root(v, f.m);
      if (!r) { throw NotRepresentable(std::to_string(f.m) + "-th root of " + to_string(v) + " is irrational"); }
      v = *r;
    } else {
      v = std::pow(v, 1.0 / static_cast<double>(f.m));
    }
  }
  return v;
}

template <typename Scalar>
Scalar apply_one(maps::Rotation<Scalar> const &f, Scalar const &x, long k)
{
  return ScalarTraits<Scalar>::frac(Scalar(x + Scalar(k) * f.theta));
}

} // namespace detail

/// f^k(x) for any k ∈ ℤ.
template <typename Scalar>
Scalar apply(Map<Scalar> const &f, Scalar const &x, long k)
{
  if (k == 0) { return x; }
  return std::visit([&](auto const &m) { return detail::apply_one(m, x, k); }, f);
}

template <typename Scalar>
std::string describe(Map<Scalar> const &f)
{
  using T = ScalarTraits<Scalar>;
  struct V
  {
    std::string operator()(maps::Affine<Scalar> const &m) const { return T::str(m.a) + "*x + " + T::str(m.b); }
    std::string operator()(maps::Power<Scalar> const &m) const { return "x^" + std::to_string(m.m); }
    std::string operator()(maps::Rotation<Scalar> const &m) const { return "x + " + T::str(m.theta) + " mod 1"; }
  };
  return std::visit(V{}, f);
}

/// Indexed family of invertible self-maps f_1..f_|S| of an interval X.
/// Generator i (1-based) acts by maps()[i-1].
template <typename Scalar>
class MapFamily
{
public:
  MapFamily(std::vector<Map<Scalar>> maps, Interval<Scalar> domain, Scalar tolerance = ScalarTraits<Scalar>::zero())
    : maps_(std::move(maps)), domain_(std::move(domain)), tolerance_(std::move(tolerance))
  {
    if (maps_.empty()) { throw InvalidArgument("a map family needs at least one map"); }
    for (auto const &m : maps_) {
      if (auto const *a = std::get_if<maps::Affine<Scalar>>(&m); a && a->a == Scalar(0)) {
        throw InvalidArgument("affine map with zero slope is not invertible");
      }
      if (auto const *p = std::get_if<maps::Power<Scalar>>(&m); p && p->m == 0) {
        throw InvalidArgument("x^0 is not invertible");
      }
    }
  }

  int                           rank() const { return static_cast<int>(maps_.size()); }
  std::vector<Map<Scalar>> const &maps() const { return maps_; }
  Interval<Scalar> const        &domain() const { return domain_; }
  // Comparison tolerance τ; zero in exact mode.
  Scalar const                  &tolerance() const { return tolerance_; }

  Scalar apply(int gen, Scalar const &x, long k) const { return mdt::apply(maps_.at(static_cast<std::size_t>(gen - 1)), x, k); }

  std::string describe() const
  {
    std::string out;
    for (std::size_t i = 0; i < maps_.size(); ++i) {
      if (i > 0) { out += "; "; }
      out += "f" + std::to_string(i + 1) + "(x) = " + mdt::describe(maps_[i]);
    }
    return out + " on " + domain_.str();
  }

private:
  std::vector<Map<Scalar>> maps_;
  Interval<Scalar>         domain_;
  Scalar                   tolerance_;
};

// Families used throughout: the identity family, and f1 = 3/4 x + 1/4,
// f2 = x^2 on [0, 1].
template <typename Scalar>
MapFamily<Scalar> identity_family(int rank)
{
  return MapFamily<Scalar>(std::vector<Map<Scalar>>(static_cast<std::size_t>(rank), maps::Affine<Scalar>{Scalar(1), Scalar(0)}),
                           Interval<Scalar>::real_line(), is_exact_v<Scalar> ? Scalar(0) : Scalar(kDefaultTolerance));
}

template <typename Scalar>
MapFamily<Scalar> affine_square_family()
{
  using T = ScalarTraits<Scalar>;
  return MapFamily<Scalar>({maps::Affine<Scalar>{T::from_rational(Rational(3, 4)), T::from_rational(Rational(1, 4))},
                            maps::Power<Scalar>{2}},
                           Interval<Scalar>::closed(Scalar(0), Scalar(1)),
                           is_exact_v<Scalar> ? Scalar(0) : Scalar(kDefaultTolerance));
}

} // namespace mdt
