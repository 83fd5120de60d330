#include "oracles.hpp"

#include <cmath>
#include <functional>

namespace oracle {

namespace {

mpq_class power(long m, int e) {
  mpz_class p;
  mpz_pow_ui(p.get_mpz_t(), mpz_class(m).get_mpz_t(), static_cast<unsigned long>(std::abs(e)));
  return e >= 0 ? mpq_class(1, 1) / mpq_class(p) : mpq_class(p);
}

mpz_class fact(int n) {
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

mpq_class mpl_coefficient(const std::vector<int>& e, int M) {
  const int r = static_cast<int>(e.size());
  mpq_class total = 0;
  std::vector<long> m(static_cast<std::size_t>(r));
  m.back() = M;
  std::function<void(int, long)> rec = [&](int i, long below) {
    if (i < 0) {
      mpq_class term = 1;
      for (int j = 0; j < r; ++j) term *= power(m[static_cast<std::size_t>(j)], e[static_cast<std::size_t>(j)]);
      total += term;
      return;
    }
    for (long v = i + 1; v < below; ++v) {
      m[static_cast<std::size_t>(i)] = v;
      rec(i - 1, v);
    }
  };
  rec(r - 2, M);
  return total;
}

std::vector<mpq_class> mpl_coefficients(const std::vector<int>& e, int cap) {
  // level[j][M] = sum over m_1 < ... < m_j = M of prod m_i^{-e_i}
  std::vector<mpq_class> level(static_cast<std::size_t>(cap) + 1, 0);
  for (int M = 1; M <= cap; ++M) level[static_cast<std::size_t>(M)] = power(M, e[0]);
  for (std::size_t j = 1; j < e.size(); ++j) {
    std::vector<mpq_class> next(static_cast<std::size_t>(cap) + 1, 0);
    mpq_class prefix = 0;
    for (int M = 1; M <= cap; ++M) {
      next[static_cast<std::size_t>(M)] = prefix * power(M, e[j]);
      prefix += level[static_cast<std::size_t>(M)];
    }
    level = std::move(next);
  }
  return level;
}

mpz_class stirling2(int n, int k) {
  std::vector<std::vector<mpz_class>> S(static_cast<std::size_t>(n) + 1,
                                        std::vector<mpz_class>(static_cast<std::size_t>(n) + 2, 0));
  S[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j)
      S[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          j * S[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] +
          S[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
  if (k < 0 || k > n) return 0;
  return S[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

mpq_class multi_poly_bernoulli(int n, const std::vector<int>& e, bool kind_c) {
  // Li(z)/z = sum_M c_M z^{M-1}; z = 1 - e^{-t}. For C the extra factor
  // e^{-t} turns (1-e^{-t})^{M-1} into the derivative of (1-e^{-t})^M / M.
  const int r = static_cast<int>(e.size());
  mpq_class total = 0;
  for (int M = r; M <= n + 1; ++M) {
    const mpq_class c = mpl_coefficient(e, M);
    if (c == 0) continue;
    const mpz_class s = kind_c ? stirling2(n + 1, M) : stirling2(n, M - 1);
    const int sign = (n + M - 1) % 2 ? -1 : 1;
    total += c * mpq_class(sign * fact(M - 1) * s);
  }
  return total;
}

TruncatedSum nested_sum(const std::vector<int>& k, long cutoff, bool parity) {
  const int r = static_cast<int>(k.size());
  // prefix[j] = sum over valid m_1 < ... < m_j < current n
  std::vector<long double> prefix(static_cast<std::size_t>(r), 0.0L);
  TruncatedSum out;
  for (long n = 1; n <= cutoff; ++n) {
    std::vector<long double> at(static_cast<std::size_t>(r), 0.0L);
    for (int j = 0; j < r; ++j) {
      if (parity && (n - (j + 1)) % 2 != 0) continue;
      const long double below = j == 0 ? 1.0L : prefix[static_cast<std::size_t>(j - 1)];
      at[static_cast<std::size_t>(j)] = below * std::pow(static_cast<long double>(n), -k[static_cast<std::size_t>(j)]);
    }
    for (int j = 0; j < r; ++j) prefix[static_cast<std::size_t>(j)] += at[static_cast<std::size_t>(j)];
  }
  out.partial = prefix.back();
  // Inner sums are at most H_n^{r-1}/(r-1)! <= (1 + ln n)^{r-1}/(r-1)!, and
  // int_N^inf (1 + ln x)^j x^{-p} dx = N^{1-p} sum_i j!/(j-i)! L^{j-i}/(p-1)^{i+1}.
  const int j = r - 1;
  const int p = k.back();
  const long double N = static_cast<long double>(cutoff);
  const long double L = 1 + std::log(N);
  long double sum = 0, falling = 1;
  for (int i = 0; i <= j; ++i) {
    if (i > 0) falling *= static_cast<long double>(j - i + 1);
    sum += falling * std::pow(L, j - i) / std::pow(static_cast<long double>(p - 1), i + 1);
  }
  long double jf = 1;
  for (int i = 2; i <= j; ++i) jf *= i;
  out.tail = std::pow(N, 1 - p) * sum / jf;
  return out;
}

}  // namespace oracle
