#pragma once

#include <gmpxx.h>

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

namespace mdt {

using Integer  = mpz_class;
// Default comparison tolerance of the floating mode.
inline constexpr double kDefaultTolerance = 1e-9;

using Rational = mpq_class;

// Accepts "p/q", integers and finite decimals ("1.05", "-2.5e-1" is not
// accepted); decimals convert exactly.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(Rational const &r);
std::string to_string(Integer const &z);

// Shortest decimal that round-trips.
std::string to_string(double v);

Integer  floor(Rational const &r);
Rational frac(Rational const &r);  // r - floor(r), in [0, 1)
Rational pow(Rational const &base, long exponent);
bool     is_integer(Rational const &r);

// Exact m-th root of a nonnegative rational, if it is rational.
std::optional<Rational> exact_root(Rational const &r, unsigned long m);

/// Scalar traits: the two arithmetic modes the library supports. Exact mode
/// compares by equality; floating mode compares within a tolerance that the
/// caller carries alongside the values.
template <typename Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational>
{
  static constexpr bool exact = true;
  static Rational from_rational(Rational const &r) { return r; }
  static Rational parse(std::string_view s) { return parse_rational(s); }
  static std::string str(Rational const &r) { return to_string(r); }
  static double to_double(Rational const &r) { return r.get_d(); }
  static Rational abs(Rational const &r) { return ::abs(r); }
  static bool close(Rational const &a, Rational const &b, Rational const &) { return a == b; }
  static Rational zero() { return 0; }
  static Rational frac(Rational const &r) { return mdt::frac(r); }
  static bool is_integer(Rational const &r, Rational const &) { return mdt::is_integer(r); }
};

template <>
struct ScalarTraits<double>
{
  static constexpr bool exact = false;
  static double from_rational(Rational const &r) { return r.get_d(); }
  static double parse(std::string_view s);
  static std::string str(double v) { return to_string(v); }
  static double to_double(double v) { return v; }
  static double abs(double v) { return std::fabs(v); }
  static bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol; }
  static double zero() { return 0.0; }
  // Values within `kWrap` of 1 are folded to 0 so that the result stays in [0, 1).
  static double frac(double v)
  {
    double f = v - std::floor(v);
    if (f >= 1.0 - kWrap) { f = 0.0; }
    return f;
  }
  static bool is_integer(double v, double tol) { return std::fabs(v - std::round(v)) <= tol; }

  static constexpr double kWrap = kDefaultTolerance;
};

template <typename Scalar>
constexpr bool is_exact_v = ScalarTraits<Scalar>::exact;

} // namespace mdt
