#pragma once

#include "akz/index.hpp"
#include "akz/real.hpp"
#include "akz/report.hpp"
#include "akz/series.hpp"

namespace akz {

/// Ath(k; z) = sum over m_1 < ... < m_r with m_i = i mod 2 of
/// z^{m_r} / (m_1^{k_1} ... m_r^{k_r}).
struct AthSeries {
  Index index;
  TruncatedSeries coefficients{0};
};

AthSeries ath_coeffs(const Index& k, int cap);

/// Exact series checks to order cap: Ath(1; tanh t) = t, the derivative rules
/// for every index of weight <= 4, and r! Ath(1^r) = Ath(1)^r for r <= 3.
VerificationReport ath_series_identities(int cap);

/// psi(1^{r-1}, k; m+1) = sum_{|a| = m} C(a_k + r, r) T(a_1+1, ..., a_{k-1}+1, a_k+r+1).
EvalResult psi_at_positive(int r, int k, int m);
/// The alternating-sum form of psi(1^{r-1}, k; s) at an integer s >= 1. T-values
/// at non-admissible arguments raise PoleError.
EvalResult psi_theorem_5_4(int r, int k, int s);

VerificationReport theorem_5_4_check(int r, int k, int m, double tol);
/// T(1^{r-1}, k+1) = T(1^{k-1}, r+1).
VerificationReport height_one_duality_check(int r, int k, double tol);
VerificationReport theorem_5_8_check(int m, int r, int k, double tol);
/// The k = 2, r = 1 case in zeta^o / zeta^oe form, with zeta^o taken as
/// (1 - 2^{-s}) zeta(s) on the right.
VerificationReport example_5_9_check(int m, double tol);
/// (2/Gamma(s)) int_0^inf t^{s-1} Ath(k; tanh(t/2)) / sinh t dt against
/// psi_at_positive(1, k, s-1).
VerificationReport psi_depth1_integral_check(int k, int s, double tol);
/// T_0(s) = (1 - 2^{-s}) zeta(s).
VerificationReport zeta_odd_check(int s, double tol);

}  // namespace akz
