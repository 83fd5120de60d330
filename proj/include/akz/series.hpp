#pragma once

#include <span>
#include <vector>

#include "akz/rational.hpp"

namespace akz {

/// Formal power series sum_{n=0}^{cap} c_n t^n over the rationals. Coefficients
/// are stored against t^n (no factorial normalization). Arithmetic between
/// two series truncates to the smaller cap.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int cap);
  TruncatedSeries(std::vector<Rational> coeffs, int cap);

  static TruncatedSeries constant(const Rational& c, int cap);
  /// t^n (zero series if n > cap).
  static TruncatedSeries monomial(int n, int cap);
  /// e^{a t}.
  static TruncatedSeries exp(const Rational& a, int cap);

  int cap() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int n) const { return c_[static_cast<std::size_t>(n)]; }
  Rational& operator[](int n) { return c_[static_cast<std::size_t>(n)]; }
  const std::vector<Rational>& coeffs() const { return c_; }

  /// Index of the first nonzero coefficient, or cap()+1 for the zero series.
  int valuation() const;
  bool is_zero() const { return valuation() > cap(); }

  /// Divides by t^j exactly; requires the first j coefficients to vanish.
  /// The cap drops by j.
  TruncatedSeries shifted_down(int j) const;
  TruncatedSeries truncated(int cap) const;
  TruncatedSeries derivative() const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const Rational& s);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s) { return a *= s; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Rational> c_;
};

enum class SeriesOp { add, mul, div };

/// a / b by long division; b must have a nonzero constant term.
TruncatedSeries divide(const TruncatedSeries& a, const TruncatedSeries& b);

/// a / b after removing the common factor t^v (v = valuation of b). Throws if a
/// does not vanish to that order. The result cap is min(caps) - v.
TruncatedSeries divide_normalized(const TruncatedSeries& a, const TruncatedSeries& b);

/// Coefficient-wise, Cauchy-product or long-division combination.
TruncatedSeries series_arith(const TruncatedSeries& a, const TruncatedSeries& b, SeriesOp op);

/// a(inner(t)); inner must have zero constant term. Result cap = inner's cap.
TruncatedSeries compose(const TruncatedSeries& a, const TruncatedSeries& inner);

/// a(1 - e^{sign * t}) truncated at t^cap. sign = -1 gives 1 - e^{-t}, sign =
/// +1 gives 1 - e^{t}. `a` must have zero constant term.
TruncatedSeries compose_one_minus_exp(const TruncatedSeries& a, int sign, int cap);

/// Taylor coefficients of Li_{e_1,...,e_r}(z) = sum_{m_1<...<m_r} z^{m_r} /
/// (m_1^{e_1} ... m_r^{e_r}) for arbitrary integer exponents (negative
/// exponents give the rational-function polylogarithms).
TruncatedSeries mpl_coeffs(std::span<const int> exponents, int cap);

/// Stirling number of the second kind S(n, m).
mpz_class stirling2(int n, int m);

/// Classical Bernoulli number with B_1 = -1/2 (from t/(e^t - 1)).
Rational bernoulli(int n);

}  // namespace akz
