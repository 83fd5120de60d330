#include "akz/quadrature.hpp"

#include <cmath>

namespace akz {

QuadratureResult tanh_sinh(const std::function<Real(const Real&)>& f, const Real& a, const Real& b,
                           double tol, int max_level) {
  const Real pi = boost::multiprecision::acos(Real(-1));
  const Real width = b - a;
  // Beyond tau_max the weights fall below 2^{-bits}.
  const double tau_max =
      std::asinh((static_cast<double>(working_bits()) * std::log(2.0) + 10.0) / 3.14159265358979);

  auto node_sum = [&](double h, long stride, long offset) {
    Real acc = 0;
    for (long j = offset;; j += stride) {
      const double tau = j * h;
      if (tau > tau_max) break;
      for (int sign : {1, -1}) {
        if (j == 0 && sign < 0) continue;
        const Real t(sign * tau);
        const Real g = pi / 2 * sinh(t);
        const Real e = exp(-2 * g);
        const Real sigma = Real(1) / (Real(1) + e);
        const Real one_minus = e / (Real(1) + e);
        const Real w = width * pi * cosh(t) * sigma * one_minus;
        if (w == 0) continue;
        const Real x = sigma < Real(0.5) ? a + width * sigma : b - width * one_minus;
        acc += w * f(x);
      }
    }
    return acc;
  };

  QuadratureResult res;
  double h = 1.0;
  Real raw = node_sum(h, 1, 0);
  Real prev = raw * h;
  for (int level = 1; level <= max_level; ++level) {
    h /= 2;
    raw += node_sum(h, 2, 1);
    const Real cur = raw * h;
    res.value = cur;
    res.error = abs(cur - prev);
    res.levels = level;
    if (level >= 3 && res.error < Real(tol)) {
      res.converged = true;
      break;
    }
    prev = cur;
  }
  return res;
}

}  // namespace akz
