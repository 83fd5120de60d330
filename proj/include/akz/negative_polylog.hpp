#pragma once

#include <vector>

#include "akz/index.hpp"
#include "akz/rational.hpp"
#include "akz/series.hpp"

namespace akz {

/// Dense polynomial with rational coefficients, lowest degree first; trailing
/// zeros are trimmed so degree() is exact.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const Rational& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  const std::vector<Rational>& coeffs() const { return c_; }
  /// Multiplicity of the root at 0 (number of vanishing low coefficients).
  int low_order() const;

  Polynomial derivative() const;
  Polynomial times_z() const;
  Rational eval(const Rational& x) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Rational& s);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// P(z) / (1 - z)^d.
struct RationalFunctionRep {
  Polynomial numerator;
  int pole_order = 0;

  /// Taylor coefficients around z = 0 up to z^cap.
  TruncatedSeries taylor(int cap) const;
};

/// Li_{-k_1,...,-k_r}(z) in closed form, built by L_j = theta^{k_j}[z/(1-z) L_{j-1}]
/// with theta = z d/dz and L_0 = 1. The pole order is k_1+...+k_r+r.
RationalFunctionRep negative_mpl(const SignedIndex& k);

}  // namespace akz
