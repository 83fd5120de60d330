#pragma once

#include <string>
#include <vector>

#include "akz/index.hpp"
#include "akz/real.hpp"

namespace akz {

/// Level one uses the forms dz/z and dz/(1-z); level two uses dz/z and
/// dz/(1-z^2), whose iterated integrals are the parity-restricted sums.
enum class Level { one, two };

/// Iterated-integral word, outermost letter first: false = dz/z, true = the
/// other form. Index (k_1, ..., k_r) maps to x0^{k_r-1} y ... x0^{k_1-1} y.
using Word = std::vector<bool>;

Word word_of(const Index& k);
/// Inverse of word_of; the word must be nonempty and end with the y letter.
Index index_of(const Word& w);

/// An evaluation point in (0, 1) with a stable cache key.
struct Point {
  Real value;
  std::string key;

  static Point rational(const Rational& q);
  /// sqrt(2) - 1, the fixed point of z -> (1-z)/(1+z).
  static Point silver();
};

/// Li_k(z) (level one) or Ath(k; z) (level two) by its power series, with
/// the geometric tail bound folded into the error.
EvalResult polylog_series(const Index& k, const Point& z, Level level);

/// Iterated integral over [0, 1] of word_of(k) for admissible k, split at c.
/// Level one pairs c with 1-c, level two with (1-c)/(1+c).
EvalResult value_at_one(const Index& k, Level level, const Point& c);

/// Riemann zeta by Euler-Maclaurin with exact Bernoulli numbers.
EvalResult zeta(int s);

/// Multiple zeta value via the convolution at 1/2. Non-admissible indices
/// raise PoleError.
EvalResult mzv(const Index& k);
/// Same value from a different split point (no caching of the final sum, no
/// perturbation hook); used as an independent cross-check.
EvalResult mzv_split(const Index& k, const Rational& c);
/// zeta-star as the sum of mzv over all coarsenings.
EvalResult mzsv(const Index& k);
/// The multiple zeta function zeta(k_1, ..., k_r; s) at an integer s; the
/// empty head gives zeta(s). PoleError when s <= 1.
EvalResult mzv_function(const std::vector<int>& head, int s);

EvalResult mpl_numeric(const Index& k, const Real& z);

/// T_0(k) = Ath(k; 1) via the level-two convolution at sqrt(2)-1.
EvalResult t0_value(const Index& k);
EvalResult t0_split(const Index& k, const Rational& c);
/// T(k) = 2^depth T_0(k).
EvalResult t_value(const Index& k);

/// Drops every cached polylog and MZV value.
void clear_numeric_caches();

}  // namespace akz
