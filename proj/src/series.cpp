#include "akz/series.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace akz {

TruncatedSeries::TruncatedSeries(int cap) {
  if (cap < 0) throw std::invalid_argument("series cap must be >= 0");
  c_.assign(static_cast<std::size_t>(cap) + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs, int cap) : TruncatedSeries(cap) {
  const std::size_t n = std::min(coeffs.size(), c_.size());
  for (std::size_t i = 0; i < n; ++i) c_[i] = std::move(coeffs[i]);
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, int cap) {
  TruncatedSeries s(cap);
  s[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::monomial(int n, int cap) {
  TruncatedSeries s(cap);
  if (n >= 0 && n <= cap) s[n] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::exp(const Rational& a, int cap) {
  TruncatedSeries s(cap);
  Rational term = 1;
  for (int n = 0; n <= cap; ++n) {
    s[n] = term;
    term *= a;
    term /= n + 1;
  }
  return s;
}

int TruncatedSeries::valuation() const {
  for (int n = 0; n <= cap(); ++n)
    if (c_[static_cast<std::size_t>(n)] != 0) return n;
  return cap() + 1;
}

TruncatedSeries TruncatedSeries::shifted_down(int j) const {
  if (j < 0 || j > cap()) throw std::invalid_argument("shifted_down: shift out of range");
  for (int n = 0; n < j; ++n)
    if (c_[static_cast<std::size_t>(n)] != 0)
      throw std::domain_error("shifted_down: series is not divisible by t^j");
  return TruncatedSeries(std::vector<Rational>(c_.begin() + j, c_.end()), cap() - j);
}

TruncatedSeries TruncatedSeries::truncated(int new_cap) const {
  return TruncatedSeries(std::vector<Rational>(c_.begin(), c_.begin() + std::min<std::ptrdiff_t>(
                                                                          new_cap + 1, c_.size())),
                         new_cap);
}

TruncatedSeries TruncatedSeries::derivative() const {
  if (cap() == 0) return TruncatedSeries(0);
  TruncatedSeries d(cap() - 1);
  for (int n = 1; n <= cap(); ++n) d[n - 1] = c_[static_cast<std::size_t>(n)] * n;
  return d;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  if (o.cap() < cap()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  if (o.cap() < cap()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int cap = std::min(a.cap(), b.cap());
  TruncatedSeries r(cap);
  const int va = a.valuation();
  const int vb = b.valuation();
  for (int i = va; i <= cap; ++i) {
    if (a[i] == 0) continue;
    for (int j = vb; i + j <= cap; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

TruncatedSeries divide(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (b[0] == 0) throw std::domain_error("series division by a series with zero constant term");
  const int cap = std::min(a.cap(), b.cap());
  TruncatedSeries q(cap);
  const Rational inv = 1 / b[0];
  for (int n = 0; n <= cap; ++n) {
    Rational acc = a[n];
    for (int j = 1; j <= n; ++j)
      if (b[j] != 0) acc -= b[j] * q[n - j];
    q[n] = acc * inv;
  }
  return q;
}

TruncatedSeries divide_normalized(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int v = b.valuation();
  if (v > b.cap()) throw std::domain_error("series division by zero series");
  const int cap = std::min(a.cap(), b.cap());
  return divide(a.truncated(cap).shifted_down(v), b.truncated(cap).shifted_down(v));
}

TruncatedSeries series_arith(const TruncatedSeries& a, const TruncatedSeries& b, SeriesOp op) {
  switch (op) {
    case SeriesOp::add:
      return a + b;
    case SeriesOp::mul:
      return a * b;
    case SeriesOp::div:
      return divide(a, b);
  }
  throw std::invalid_argument("unknown series op");
}

TruncatedSeries compose(const TruncatedSeries& a, const TruncatedSeries& inner) {
  if (inner[0] != 0) throw std::domain_error("compose: inner series must vanish at 0");
  const int cap = inner.cap();
  // Horner: a_0 + u (a_1 + u (a_2 + ...)); u^n has valuation >= n so terms
  // beyond the cap contribute nothing.
  const int top = std::min(a.cap(), cap);
  TruncatedSeries acc = TruncatedSeries::constant(a[top], cap);
  for (int n = top - 1; n >= 0; --n) {
    acc = acc * inner;
    acc[0] += a[n];
  }
  return acc;
}

TruncatedSeries compose_one_minus_exp(const TruncatedSeries& a, int sign, int cap) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  if (a[0] != 0) throw std::domain_error("compose_one_minus_exp: nonzero constant term");
  TruncatedSeries u = TruncatedSeries::constant(1, cap) - TruncatedSeries::exp(sign, cap);
  return compose(a, u);
}

TruncatedSeries mpl_coeffs(std::span<const int> exponents, int cap) {
  if (exponents.empty()) throw std::invalid_argument("mpl_coeffs: empty index");
  TruncatedSeries s(cap);
  // level[n] holds the depth-j nested sum ending exactly at n.
  std::vector<Rational> level(static_cast<std::size_t>(cap) + 1, Rational(0));
  for (int n = 1; n <= cap; ++n) level[static_cast<std::size_t>(n)] = int_pow(n, -exponents[0]);
  for (std::size_t j = 1; j < exponents.size(); ++j) {
    std::vector<Rational> next(level.size(), Rational(0));
    Rational prefix = 0;
    for (int n = 1; n <= cap; ++n) {
      next[static_cast<std::size_t>(n)] = prefix * int_pow(n, -exponents[j]);
      prefix += level[static_cast<std::size_t>(n)];
    }
    level = std::move(next);
  }
  for (int n = 0; n <= cap; ++n) s[n] = level[static_cast<std::size_t>(n)];
  return s;
}

mpz_class stirling2(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("stirling2: negative argument");
  static std::mutex mu;
  static std::vector<std::vector<mpz_class>> table{{1}};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(table.size()) <= n) {
    const auto& prev = table.back();
    const std::size_t row = table.size();
    std::vector<mpz_class> cur(row + 1, 0);
    for (std::size_t k = 1; k <= row; ++k) {
      mpz_class v = k < prev.size() ? mpz_class(prev[k] * static_cast<unsigned long>(k)) : mpz_class(0);
      v += prev[k - 1];
      cur[k] = v;
    }
    table.push_back(std::move(cur));
  }
  if (m > n) return 0;
  return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
}

Rational bernoulli(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli: negative index");
  static std::mutex mu;
  static std::vector<Rational> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (static_cast<int>(cache.size()) <= n) {
    const int cap = std::max(n, 2 * static_cast<int>(cache.size()) + 16);
    // t / (e^t - 1) with both sides divided by t.
    TruncatedSeries num = TruncatedSeries::monomial(1, cap + 1);
    TruncatedSeries den = TruncatedSeries::exp(1, cap + 1) - TruncatedSeries::constant(1, cap + 1);
    TruncatedSeries q = divide_normalized(num, den);
    cache.resize(static_cast<std::size_t>(cap) + 1);
    for (int k = 0; k <= cap; ++k) cache[static_cast<std::size_t>(k)] = q[k] * Rational(factorial(static_cast<unsigned>(k)));
  }
  return cache[static_cast<std::size_t>(n)];
}

}  // namespace akz
