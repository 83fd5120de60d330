#pragma once

#include "akz/real.hpp"

namespace akz {

/// Below this u the logarithmic expansion is used, above it the plain series.
inline constexpr double kNearOneThreshold = 1.0;

/// Li_k(e^{-u}) for k >= 1 and u > 0, valid uniformly as u -> 0+.
EvalResult polylog_near_one(int k, const Real& u);

/// sum_n e^{-nu}/n^k; converges for every u > 0 but slowly for small u.
EvalResult polylog_exp_series(int k, const Real& u);

/// sum_{j != k-1} zeta(k-j)(-u)^j/j! + (-u)^{k-1}/(k-1)! (H_{k-1} - log u),
/// for 0 < u < 2 pi.
EvalResult polylog_log_expansion(int k, const Real& u);

}  // namespace akz
