#include "akz/rational.hpp"

#include <stdexcept>

namespace akz {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0)
    throw std::invalid_argument("malformed rational: '" + s + "'");
  q.canonicalize();
  return q;
}

mpz_class factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return c;
}

Rational int_pow(long n, long e) {
  mpz_class p;
  mpz_pow_ui(p.get_mpz_t(), mpz_class(n).get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return Rational(p);
  Rational q(1, p);
  q.canonicalize();
  return q;
}

}  // namespace akz
