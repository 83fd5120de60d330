#include "akz/polylog.hpp"

#include <cmath>
#include <stdexcept>

#include "akz/mzv.hpp"
#include "akz/series.hpp"

namespace akz {

namespace {

// zeta at an integer n <= 0, exactly: (-1)^{|n|} B_{1-n}/(1-n).
Rational zeta_nonpositive(int n) {
  const int m = -n;
  Rational v = bernoulli(m + 1) / Rational(m + 1);
  return m % 2 ? Rational(-v) : v;
}

}  // namespace

EvalResult polylog_exp_series(int k, const Real& u) {
  if (k < 1) throw std::invalid_argument("polylog_exp_series: k must be >= 1");
  if (!(u > 0)) throw std::invalid_argument("polylog_exp_series: u must be positive");
  const double ud = static_cast<double>(u);
  const double target = static_cast<double>(working_bits()) * std::log(2.0) + 2.0;
  // Terms are below e^{-nu}; the tail past M is at most e^{-(M+1)u}/(1-e^{-u}).
  const long M = static_cast<long>(std::ceil((target - std::log(-std::expm1(-ud))) / ud));
  if (M > 5'000'000) throw std::domain_error("polylog_exp_series: u too small");
  const Real x = exp(-u);
  Real xp = x, sum = 0;
  for (long n = 1; n <= M; ++n) {
    sum += xp / pow(Real(n), k);
    xp *= x;
  }
  Real err = xp / (Real(1) - x) + abs(sum) * unit_roundoff() * Real(4.0 * M + 16);
  return EvalResult{sum, err, "exp-series"};
}

EvalResult polylog_log_expansion(int k, const Real& u) {
  if (k < 1) throw std::invalid_argument("polylog_log_expansion: k must be >= 1");
  if (!(u > 0) || !(u < 6)) throw std::invalid_argument("polylog_log_expansion: need 0 < u < 6");
  const Real two_pi = 2 * boost::multiprecision::acos(Real(-1));
  const Real target = unit_roundoff();
  EvalResult sum = EvalResult::exact(0);
  Real power = 1;  // (-u)^j / j!
  for (int j = 0;; ++j) {
    if (j > 0) power *= -u / j;
    if (j == k - 1) {
      Rational h = 0;
      for (int i = 1; i < k; ++i) h += Rational(1, i);
      sum = sum + EvalResult{power * (to_real(h) - log(u)), abs(power) * unit_roundoff() * 8, ""};
      continue;
    }
    if (k - j >= 2) {
      sum = sum + zeta(k - j) * EvalResult{power, abs(power) * unit_roundoff() * Real(2 * j + 2), ""};
      continue;
    }
    // |zeta(-n)| <= 4 n!/(2 pi)^{n+1}, so each remaining term is at most
    // 4 u^j/(2 pi)^{j-k+1} and they shrink by u/(2 pi) at least.
    const Real bound = 4 * pow(u, j) / pow(two_pi, j - k + 1);
    if (bound < target) {
      sum.error += bound / (Real(1) - u / two_pi);
      break;
    }
    sum = sum + EvalResult::exact(zeta_nonpositive(k - j)) * EvalResult{power, abs(power) * unit_roundoff() * Real(2 * j + 2), ""};
    if (j > 2000) throw std::runtime_error("polylog_log_expansion did not converge");
  }
  sum.method = "log-expansion";
  return sum;
}

EvalResult polylog_near_one(int k, const Real& u) {
  return u < Real(kNearOneThreshold) ? polylog_log_expansion(k, u) : polylog_exp_series(k, u);
}

}  // namespace akz
