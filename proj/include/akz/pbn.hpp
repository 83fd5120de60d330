#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "akz/index.hpp"
#include "akz/rational.hpp"
#include "akz/report.hpp"

namespace akz {

/// Finite Dirichlet series sum_j q_j j^{-s} with rational q_j; zero
/// coefficients are never stored.
class DirichletPolynomial {
 public:
  DirichletPolynomial() = default;

  void add(long base, const Rational& q);
  const std::map<long, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// Value at the integer point s (exact; s may be negative).
  Rational at(long s) const;

  /// "q1*1^-s + q2*2^-s + ..." in increasing base order.
  std::string to_string() const;

  friend bool operator==(const DirichletPolynomial&, const DirichletPolynomial&) = default;

 private:
  std::map<long, Rational> terms_;
};

enum class PbKind { B, C };

/// B_n^{(k)} for n = 0..nmax, read off the generating function
/// Li_k(1-e^{-t})/(1-e^{-t}) (kind B) or Li_k(1-e^{-t})/(e^t-1) (kind C).
/// `exponents` are the polylogarithm exponents, so a nonpositive index
/// (-k_1, ..., -k_r) is passed as negative numbers.
std::vector<Rational> multi_poly_bernoulli_row(std::span<const int> exponents, PbKind kind, int nmax);

Rational multi_poly_bernoulli(int n, std::span<const int> exponents, PbKind kind);
Rational multi_poly_bernoulli(int n, const Index& k, PbKind kind);
Rational multi_poly_bernoulli(int n, const SignedIndex& k, PbKind kind);

Rational poly_bernoulli_B(int n, int k);
Rational poly_bernoulli_C(int n, int k);

/// Stirling closed forms:
///   B_n^{(k)} = sum_m (-1)^{n+m} m! S(n, m) (m+1)^{-k}
///   C_n^{(k)} = sum_m (-1)^{n+m} m! S(n+1, m+1) (m+1)^{-k}
Rational poly_bernoulli_B_closed(int n, int k);
Rational poly_bernoulli_C_closed(int n, int k);

/// B_n^{(s)} and C_n^{(s)} as Dirichlet polynomials in s.
DirichletPolynomial B_symbolic(int n);
DirichletPolynomial C_symbolic(int n);

/// B_n^{(-k)} = B_k^{(-n)} for 0 <= n, k <= max (one report per pair n <= k).
std::vector<VerificationReport> duality_check_B(int max);
/// C_n^{(-k-1)} = C_k^{(-n-1)} for 0 <= n, k <= max.
std::vector<VerificationReport> duality_check_C(int max);

/// num * den^{-1} mod p, or nullopt when p divides the denominator.
std::optional<long> rational_mod_p(const Rational& q, long p);

/// sum_{1 <= m_1 < ... < m_r < p} prod m_i^{-k_i} mod p.
long finite_mzv_mod_p(const Index& k, long p);

/// finite_mzv_mod_p(k, p) == -C_{p-2}^{(k_1,...,k_r - 1)} mod p, or a bad-prime
/// skip when p divides a denominator on the right.
VerificationReport congruence_check(const Index& k, long p);

/// sum_k Li_{-k}(1-e^t) x^k/k! = e^x(1-e^t)/(1-e^x(1-e^t)), coefficient by
/// coefficient up to x^deg t^deg.
VerificationReport bivariate_identity_check(int deg);

}  // namespace akz
