#include "mdtds/rational.hpp"

#include "mdtds/error.hpp"

#include <array>
#include <cctype>
#include <charconv>

namespace mdt {

namespace {

bool all_digits(std::string_view s)
{
  if (s.empty()) { return false; }
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) { return false; }
  }
  return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational r;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    Integer const d{std::string(den), 10};
    if (d == 0) { throw ParseError("zero denominator in '" + std::string(text) + "'"); }
    r = Rational(Integer{std::string(num), 10}, d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto fraction = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(fraction)) {
      throw ParseError("malformed decimal '" + std::string(text) + "'");
    }
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fraction.size());
    Integer const digits{std::string(whole.empty() ? "0" : whole) + std::string(fraction), 10};
    r = Rational(digits, scale);
  } else {
    if (!all_digits(s)) { throw ParseError("malformed number '" + std::string(text) + "'"); }
    r = Rational(Integer{std::string(s), 10});
  }
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

std::string to_string(Rational const &r)
{
  if (r.get_den() == 1) { return r.get_num().get_str(); }
  return r.get_str();
}

std::string to_string(Integer const &z) { return z.get_str(); }

std::string to_string(double v)
{
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

Integer floor(Rational const &r)
{
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Rational frac(Rational const &r) { return r - Rational(floor(r)); }

Rational pow(Rational const &base, long exponent)
{
  if (exponent == 0) { return 1; }
  if (base == 0 && exponent < 0) { throw InvalidArgument("zero to a negative power"); }
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  Rational out = exponent > 0 ? Rational(num, den) : Rational(den, num);
  out.canonicalize();
  return out;
}

bool is_integer(Rational const &r) { return r.get_den() == 1; }

std::optional<Rational> exact_root(Rational const &r, unsigned long m)
{
  if (m == 0 || r < 0) { return std::nullopt; }
  if (m == 1) { return r; }
  Integer num, den;
  bool const num_exact = mpz_root(num.get_mpz_t(), r.get_num_mpz_t(), m) != 0;
  bool const den_exact = mpz_root(den.get_mpz_t(), r.get_den_mpz_t(), m) != 0;
  if (!num_exact || !den_exact) { return std::nullopt; }
  return Rational(num, den);
}

double ScalarTraits<double>::parse(std::string_view s)
{
  double v{};
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size()) {
    throw ParseError("malformed floating value '" + std::string(s) + "'");
  }
  return v;
}

} // namespace mdt
