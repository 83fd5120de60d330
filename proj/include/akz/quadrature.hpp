#pragma once

#include <functional>

#include "akz/real.hpp"

namespace akz {

struct QuadratureResult {
  Real value;
  /// Difference between the last two levels; the scheme roughly squares its
  /// error per level, so this overestimates the final error once converged.
  Real error;
  int levels = 0;
  bool converged = false;
};

/// Tanh-sinh quadrature of f over [a, b], halving the step until two levels
/// agree to `tol` or `max_level` is reached. f may be singular (integrably)
/// at the endpoints; it is never evaluated there.
QuadratureResult tanh_sinh(const std::function<Real(const Real&)>& f, const Real& a, const Real& b,
                           double tol, int max_level = 9);

}  // namespace akz
