#include "akz/pbn.hpp"

#include <sstream>
#include <stdexcept>

#include "akz/series.hpp"

namespace akz {

void DirichletPolynomial::add(long base, const Rational& q) {
  if (base < 1) throw std::invalid_argument("Dirichlet polynomial base must be >= 1");
  if (q == 0) return;
  auto [it, inserted] = terms_.try_emplace(base, q);
  if (!inserted) {
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational DirichletPolynomial::at(long s) const {
  Rational acc = 0;
  for (const auto& [j, q] : terms_) acc += q * int_pow(j, -s);
  return acc;
}

std::string DirichletPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [j, q] : terms_) {
    if (!first) os << " + ";
    os << akz::to_string(q) << '*' << j << "^-s";
    first = false;
  }
  return os.str();
}

std::vector<Rational> multi_poly_bernoulli_row(std::span<const int> exponents, PbKind kind, int nmax) {
  if (nmax < 0) throw std::invalid_argument("nmax must be >= 0");
  const int cap = nmax + 1;
  TruncatedSeries li = mpl_coeffs(exponents, cap);
  TruncatedSeries num = compose_one_minus_exp(li, -1, cap);
  TruncatedSeries den = kind == PbKind::B
                            ? TruncatedSeries::constant(1, cap) - TruncatedSeries::exp(-1, cap)
                            : TruncatedSeries::exp(1, cap) - TruncatedSeries::constant(1, cap);
  TruncatedSeries q = divide_normalized(num, den);
  std::vector<Rational> out(static_cast<std::size_t>(nmax) + 1);
  for (int n = 0; n <= nmax; ++n)
    out[static_cast<std::size_t>(n)] = q[n] * Rational(factorial(static_cast<unsigned>(n)));
  return out;
}

Rational multi_poly_bernoulli(int n, std::span<const int> exponents, PbKind kind) {
  return multi_poly_bernoulli_row(exponents, kind, n).back();
}

Rational multi_poly_bernoulli(int n, const Index& k, PbKind kind) {
  return multi_poly_bernoulli(n, k.parts(), kind);
}

Rational multi_poly_bernoulli(int n, const SignedIndex& k, PbKind kind) {
  const std::vector<int> e = k.exponents();
  return multi_poly_bernoulli(n, e, kind);
}

Rational poly_bernoulli_B(int n, int k) {
  const int e[] = {k};
  return multi_poly_bernoulli(n, e, PbKind::B);
}

Rational poly_bernoulli_C(int n, int k) {
  const int e[] = {k};
  return multi_poly_bernoulli(n, e, PbKind::C);
}

namespace {

Rational signed_factorial_term(int n, int m) {
  Rational t(factorial(static_cast<unsigned>(m)));
  if ((n + m) % 2) t = -t;
  return t;
}

}  // namespace

Rational poly_bernoulli_B_closed(int n, int k) {
  Rational acc = 0;
  for (int m = 0; m <= n; ++m)
    acc += signed_factorial_term(n, m) * Rational(stirling2(n, m)) * int_pow(m + 1, -k);
  return acc;
}

Rational poly_bernoulli_C_closed(int n, int k) {
  Rational acc = 0;
  for (int m = 0; m <= n; ++m)
    acc += signed_factorial_term(n, m) * Rational(stirling2(n + 1, m + 1)) * int_pow(m + 1, -k);
  return acc;
}

DirichletPolynomial B_symbolic(int n) {
  DirichletPolynomial d;
  for (int m = 0; m <= n; ++m) d.add(m + 1, signed_factorial_term(n, m) * Rational(stirling2(n, m)));
  return d;
}

DirichletPolynomial C_symbolic(int n) {
  DirichletPolynomial d;
  for (int m = 0; m <= n; ++m)
    d.add(m + 1, signed_factorial_term(n, m) * Rational(stirling2(n + 1, m + 1)));
  return d;
}

std::vector<VerificationReport> duality_check_B(int max) {
  std::vector<std::vector<Rational>> rows;
  for (int k = 0; k <= max; ++k) {
    const int e[] = {-k};
    rows.push_back(multi_poly_bernoulli_row(e, PbKind::B, max));
  }
  std::vector<VerificationReport> out;
  for (int n = 0; n <= max; ++n)
    for (int k = n; k <= max; ++k)
      out.push_back(exact_report("pbn.duality.B", {{"n", std::to_string(n)}, {"k", std::to_string(k)}},
                                 rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)],
                                 rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]));
  return out;
}

std::vector<VerificationReport> duality_check_C(int max) {
  std::vector<std::vector<Rational>> rows;
  for (int k = 0; k <= max; ++k) {
    const int e[] = {-k - 1};
    rows.push_back(multi_poly_bernoulli_row(e, PbKind::C, max));
  }
  std::vector<VerificationReport> out;
  for (int n = 0; n <= max; ++n)
    for (int k = n; k <= max; ++k)
      out.push_back(exact_report("pbn.duality.C", {{"n", std::to_string(n)}, {"k", std::to_string(k)}},
                                 rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)],
                                 rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]));
  return out;
}

std::optional<long> rational_mod_p(const Rational& q, long p) {
  mpz_class P = p;
  mpz_class den = q.get_den() % P;
  if (den == 0) return std::nullopt;
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), P.get_mpz_t());
  mpz_class r = (q.get_num() * inv) % P;
  if (r < 0) r += P;
  return r.get_si();
}

long finite_mzv_mod_p(const Index& k, long p) {
  if (p <= k.depth()) throw std::invalid_argument("finite_mzv_mod_p: need p > depth");
  // level[m] = nested sum ending at m, modulo p, with m < p.
  auto inv_pow = [p](long m, int e) {
    mpz_class base = m, inv, out;
    mpz_class P = p;
    mpz_invert(inv.get_mpz_t(), base.get_mpz_t(), P.get_mpz_t());
    mpz_powm_ui(out.get_mpz_t(), inv.get_mpz_t(), static_cast<unsigned long>(e), P.get_mpz_t());
    return out.get_si();
  };
  std::vector<long> level(static_cast<std::size_t>(p), 0);
  for (long m = 1; m < p; ++m) level[static_cast<std::size_t>(m)] = inv_pow(m, k[0]);
  for (int j = 1; j < k.depth(); ++j) {
    std::vector<long> next(level.size(), 0);
    long prefix = 0;
    for (long m = 1; m < p; ++m) {
      next[static_cast<std::size_t>(m)] = prefix * inv_pow(m, k[static_cast<std::size_t>(j)]) % p;
      prefix = (prefix + level[static_cast<std::size_t>(m)]) % p;
    }
    level = std::move(next);
  }
  long total = 0;
  for (long m = 1; m < p; ++m) total = (total + level[static_cast<std::size_t>(m)]) % p;
  return total;
}

VerificationReport congruence_check(const Index& k, long p) {
  Params params{{"index", k.to_string()}, {"p", std::to_string(p)}};
  std::vector<int> e = k.vec();
  --e.back();
  const Rational c = multi_poly_bernoulli(static_cast<int>(p) - 2, e, PbKind::C);
  const auto rhs = rational_mod_p(-c, p);
  if (!rhs)
    return status_report("pbn.congruence", std::move(params), Status::skipped_bad_prime,
                         "p divides the denominator of " + to_string(c));
  const long lhs = finite_mzv_mod_p(k, p);
  VerificationReport r = exact_report("pbn.congruence", std::move(params), Rational(lhs), Rational(*rhs));
  r.note = "C_{p-2} = " + to_string(c);
  return r;
}

VerificationReport bivariate_identity_check(int deg) {
  // Right side as a bivariate series: row a holds the coefficient of x^a, a
  // series in t.
  const int cap = deg;
  const TruncatedSeries u = TruncatedSeries::constant(1, cap) - TruncatedSeries::exp(1, cap);
  std::vector<TruncatedSeries> num, den;
  for (int a = 0; a <= deg; ++a) {
    const Rational inv_fact(1, factorial(static_cast<unsigned>(a)));
    num.push_back(u * inv_fact);
    den.push_back(u * Rational(-inv_fact));
  }
  den[0][0] += 1;
  std::vector<TruncatedSeries> quot;
  for (int a = 0; a <= deg; ++a) {
    TruncatedSeries acc = num[static_cast<std::size_t>(a)];
    for (int j = 1; j <= a; ++j) acc -= den[static_cast<std::size_t>(j)] * quot[static_cast<std::size_t>(a - j)];
    quot.push_back(divide(acc, den[0]));
  }
  Params params{{"bidegree", std::to_string(deg) + "," + std::to_string(deg)}};
  for (int k = 0; k <= deg; ++k) {
    const int e[] = {-k};
    const TruncatedSeries lhs = compose_one_minus_exp(mpl_coeffs(e, cap), 1, cap);
    const TruncatedSeries rhs = quot[static_cast<std::size_t>(k)] * Rational(factorial(static_cast<unsigned>(k)));
    for (int n = 0; n <= cap; ++n)
      if (lhs[n] != rhs[n]) {
        VerificationReport r = exact_report("pbn.bivariate", params, lhs[n], rhs[n]);
        r.note = "mismatch at x^" + std::to_string(k) + " t^" + std::to_string(n);
        return r;
      }
  }
  VerificationReport r = exact_report("pbn.bivariate", std::move(params), 0, 0);
  r.lhs = r.rhs = "all coefficients equal";
  return r;
}

}  // namespace akz
