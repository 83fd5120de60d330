#include "akz/negative_polylog.hpp"

#include <algorithm>

namespace akz {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int Polynomial::low_order() const {
  for (int i = 0; i <= degree(); ++i)
    if (c_[static_cast<std::size_t>(i)] != 0) return i;
  return 0;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::times_z() const {
  if (c_.empty()) return {};
  std::vector<Rational> v(c_.size() + 1);
  std::copy(c_.begin(), c_.end(), v.begin() + 1);
  return Polynomial(std::move(v));
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + b * Rational(-1); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(v));
}

Polynomial operator*(const Polynomial& a, const Rational& s) {
  std::vector<Rational> v = a.c_;
  for (auto& x : v) x *= s;
  return Polynomial(std::move(v));
}

TruncatedSeries RationalFunctionRep::taylor(int cap) const {
  // (1-z)^{-d} = sum_n binom(n+d-1, n) z^n
  TruncatedSeries geom(cap);
  for (int n = 0; n <= cap; ++n) geom[n] = Rational(binomial(n + pole_order - 1, n));
  if (pole_order == 0) geom = TruncatedSeries::constant(1, cap);
  TruncatedSeries p(numerator.coeffs(), cap);
  return p * geom;
}

RationalFunctionRep negative_mpl(const SignedIndex& k) {
  RationalFunctionRep f{Polynomial({Rational(1)}), 0};
  const Polynomial one_minus_z({Rational(1), Rational(-1)});
  for (int kj : k.parts()) {
    // multiply by z/(1-z)
    f.numerator = f.numerator.times_z();
    f.pole_order += 1;
    // theta(P (1-z)^{-d}) = [z P' (1-z) + d z P] (1-z)^{-d-1}
    for (int t = 0; t < kj; ++t) {
      const Polynomial& p = f.numerator;
      f.numerator = (p.derivative().times_z() * one_minus_z) + p.times_z() * Rational(f.pole_order);
      f.pole_order += 1;
    }
  }
  return f;
}

}  // namespace akz
