#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/mpfr.hpp>

#include "akz/index.hpp"
#include "akz/rational.hpp"

namespace akz {

/// Variable-precision binary float; the precision comes from the process-wide
/// numeric settings.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

/// Process-wide numeric configuration. Set once via configure() before any
/// evaluation; read-only afterwards.
struct NumericSettings {
  unsigned prec_bits = 256;
  double mzv_tol = 1e-20;
  double t_tol = 1e-10;
  /// Test-only: when set, mzv() of this index is multiplied by (1 + perturbation).
  std::optional<Index> perturbed_mzv;
  double perturbation = 1e-6;
};

void configure(const NumericSettings& s);
const NumericSettings& settings();

/// Working precision actually in force: max(prec_bits, 2 * bits(mzv_tol) + 32).
unsigned working_bits();

/// 2^{-working_bits()}, the unit roundoff bound used for rounding budgets.
const Real& unit_roundoff();

Real to_real(const Rational& q);
Real to_real(double x);

/// Fixed-notation decimal string with `digits` significant digits.
std::string to_decimal(const Real& x, int digits = 30);
/// Short scientific string for error bounds.
std::string to_sci(const Real& x);

/// A numeric value with a conservative absolute error bound.
struct EvalResult {
  Real value;
  Real error;
  std::string method;

  /// Exact value (zero error).
  static EvalResult exact(const Rational& q, std::string method = "exact");
};

EvalResult operator+(const EvalResult& a, const EvalResult& b);
EvalResult operator-(const EvalResult& a, const EvalResult& b);
EvalResult operator-(const EvalResult& a);
EvalResult operator*(const EvalResult& a, const EvalResult& b);
EvalResult operator*(const EvalResult& a, const Rational& s);
inline EvalResult operator*(const Rational& s, const EvalResult& a) { return a * s; }

/// Raised when a formula term sits on a pole (zeta(1), an MZV with last
/// exponent 1, and so on).
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// |a - b| <= tol + err(a) + err(b).
bool agrees(const EvalResult& a, const EvalResult& b, double tol);

}  // namespace akz
