#include "mdtds/cesaro.hpp"

namespace mdt {

namespace {

void check_q(int q)
{
  if (q < 2 || q % 2 != 0) { throw InvalidArgument("q = 2|S| must be even and >= 2"); }
}

} // namespace

Integer sign_ball_sum(long n, int q)
{
  check_q(q);
  if (n < 0) { throw InvalidArgument("sign_ball_sum needs n >= 0"); }
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(q - 1), static_cast<unsigned long>(n));
  return n % 2 == 0 ? p : Integer(-p);
}

Rational sign_cesaro(long n, int q)
{
  Rational r(sign_ball_sum(n, q), ball_size(n, q / 2));
  r.canonicalize();
  return r;
}

Rational sign_cesaro_even_limit(int q)
{
  check_q(q);
  Rational r(q - 2, q);
  r.canonicalize();
  return r;
}

Rational sign_cesaro_odd_limit(int q) { return Rational(-sign_cesaro_even_limit(q)); }

} // namespace mdt
