#pragma once

#include <vector>

#include "akz/index.hpp"
#include "akz/pbn.hpp"
#include "akz/real.hpp"
#include "akz/report.hpp"

namespace akz {

// Positive arguments.

/// xi(k; m) = sum_{|j| = m-1} b(K; j) zeta(K + j), K = (k_+)^*.
EvalResult xi_at_positive(const Index& k, int m);
/// eta(k; m) = (-1)^{r-1} sum_{|j| = m-1} b(K; j) zeta*(K + j).
EvalResult eta_at_positive(const Index& k, int m);
/// Depth-one forms: sum over j_1..j_{k-1} >= 1, j_k >= 2, |j| = k+m of
/// (j_k - 1) zeta(j) (resp. zeta*(j)).
EvalResult xi_corollary(int k, int m);
EvalResult eta_corollary(int k, int m);

// Nonpositive arguments and indices.

/// xi(k; -m) = (-1)^m C_m^{(k)}.
Rational xi_nonpositive(const Index& k, int m);
/// eta(k; -m) = B_m^{(k)}.
Rational eta_nonpositive_value(const Index& k, int m);
Rational eta_nonpositive_value(const SignedIndex& k, int m);

/// eta(-k_1, ..., -k_r; s) as an exact Dirichlet polynomial.
DirichletPolynomial eta_closed_nonpositive(const SignedIndex& k);
/// xi~(-k_1, ..., -k_r; s); the all-zero index is rejected.
DirichletPolynomial xitilde_closed(const SignedIndex& k);

// Explicit multiple-zeta-function expressions. Terms at a pole raise
// PoleError.

/// xi(1^{r-1}, k; s).
EvalResult xi_ones_k(int r, int k, int s);
/// xi(2, 1; s) = 2 zeta(3; s) + s zeta(2; s+1) + zeta(2) s zeta(s+1) - 2 zeta(3) zeta(s).
EvalResult xi_two_one(int s);
/// xi(2, 1^r; s) for r >= 1.
EvalResult xi_two_ones(int r, int s);
/// The r = 2 case written out term by term.
EvalResult xi_example_3_9(int s);
bool has_explicit_formula(const Index& k);
/// Dispatches to the explicit family containing k; NotCovered otherwise.
EvalResult xi_explicit(const Index& k, int s);

// Checks.

/// Li_k(z/(z-1)) = (-1)^r sum_{k refines to k'} Li_{k'}(z) to order cap.
VerificationReport landen_check(const Index& k, int cap);
/// Pole order, degree, divisibility, integrality and Taylor agreement of
/// Li_{-k}(z) = P(z)/(1-z)^d.
VerificationReport lemma_4_1_check(const SignedIndex& k, int cap = 25);
/// eta(k; s) = (-1)^{r-1} sum xi(k'; s) and the mirrored relation at s = m.
/// When k has no proper refinement the two relations are one and the same
/// test, reported once.
std::vector<VerificationReport> etaxi_relation_check(const Index& k, int m, double tol);
/// eta_k(m) = eta_m(k).
VerificationReport eta_symmetry_check(int k, int m, double tol);

struct YamamotoSum {
  long double partial = 0;  // sum over c <= cutoff
  long double tail = 0;     // asymptotic estimate of the rest
  long double value() const { return partial + tail; }
};
/// eta_k(n) = sum_c h_{k-1}(1, ..., 1/c) h_{n-1}(1, ..., 1/c) / c^2, truncated
/// at the cutoff, plus an asymptotic tail estimate.
YamamotoSum yamamoto_eta(int k, int n, long cutoff = 1'000'000);
EvalResult eta_shingu(int k, int m);
EvalResult eta_kt(int k, int m);
/// Zeta-star sum against the binomial MZV sums and the truncated double sum
/// (the last at tolerance 1e-4). The second binomial sum is empty at m = 1 and
/// is reported as not covered there.
std::vector<VerificationReport> eta_value_formulas_check(int k, int m, double tol);

/// sum_{(k) refines to k'} xi(k'; n) symmetric in (k, n), with each xi taken
/// from an explicit family.
VerificationReport theorem_4_9_check(int k, int n, double tol);
/// The (k, n) = (3, 2) identity written out.
VerificationReport example_4_10_check(double tol);

/// Depth-one integral definition of xi_k(s) by quadrature against the
/// finite formula.
VerificationReport xi_depth1_integral_check(int k, int s, double tol);

/// eta(-k; s) equals B_k^{(s)} term by term.
VerificationReport eta_symbolic_check(int k);
/// The closed forms at s = -n reproduce B_n^{(-k)} and C_n^{(-k)}.
std::vector<VerificationReport> nonpositive_value_check(const SignedIndex& k, int n);
/// eta_{-k}(-n) = eta_{-n}(-k) and xi~_{-k-1}(-n) = xi~_{-n-1}(-k).
std::vector<VerificationReport> nonpositive_duality_check(int n, int k);

}  // namespace akz
