#include "akz/mzv.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "akz/series.hpp"

namespace akz {

namespace {

std::mutex cache_mutex;
std::map<std::string, EvalResult> cache;

template <class F>
EvalResult cached(const std::string& key, F&& compute) {
  const std::string full = key + "@" + std::to_string(working_bits());
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = cache.find(full); it != cache.end()) return it->second;
  }
  EvalResult v = compute();
  std::lock_guard lock(cache_mutex);
  cache.emplace(full, v);
  return v;
}

const char* level_tag(Level level) { return level == Level::one ? "L1" : "L2"; }

Point partner(const Point& c, Level level) {
  if (level == Level::two && c.key == "silver") return c;
  if (level == Level::one) return Point{Real(1) - c.value, "1-(" + c.key + ")"};
  return Point{(Real(1) - c.value) / (Real(1) + c.value), "phi(" + c.key + ")"};
}

EvalResult cached_polylog(const Index& k, const Point& z, Level level) {
  return cached(std::string(level_tag(level)) + ":" + z.key + ":" + k.to_string(),
                [&] { return polylog_series(k, z, level); });
}

Real rounding_budget(const Real& magnitude, double ops) {
  return abs(magnitude) * unit_roundoff() * Real(4.0 * ops + 16.0);
}

}  // namespace

Word word_of(const Index& k) {
  Word w;
  for (int i = k.depth() - 1; i >= 0; --i) {
    for (int e = 1; e < k[static_cast<std::size_t>(i)]; ++e) w.push_back(false);
    w.push_back(true);
  }
  return w;
}

Index index_of(const Word& w) {
  if (w.empty() || !w.back()) throw std::invalid_argument("word must end with the y letter");
  std::vector<int> parts;
  int zeros = 0;
  for (bool letter : w) {
    if (letter) {
      parts.push_back(zeros + 1);
      zeros = 0;
    } else {
      ++zeros;
    }
  }
  return Index(std::vector<int>(parts.rbegin(), parts.rend()));
}

Point Point::rational(const Rational& q) {
  if (q <= 0 || q >= 1) throw std::invalid_argument("evaluation point must lie in (0, 1)");
  return Point{to_real(q), to_string(q)};
}

Point Point::silver() {
  working_bits();
  return Point{sqrt(Real(2)) - 1, "silver"};
}

EvalResult polylog_series(const Index& k, const Point& z, Level level) {
  const unsigned bits = working_bits();
  const int r = k.depth();
  const double zd = static_cast<double>(z.value);
  if (!(zd > 0 && zd < 1)) throw std::invalid_argument("polylog_series: z must lie in (0, 1)");

  // Coefficients are at most (1 + log n)^{r-1}; consecutive bounds grow by at
  // most e^{(r-1)/n}, so the tail past M is geometric with ratio rho.
  const double target = -static_cast<double>(bits) * std::log(2.0) - 2.0;
  long M = std::max(8, 2 * r);
  double log_tail = 0;
  for (;; ++M) {
    const double rho = zd * std::exp((r - 1) / static_cast<double>(M + 1));
    if (rho >= 1) continue;
    log_tail = (M + 1) * std::log(zd) + (r - 1) * std::log1p(std::log(static_cast<double>(M + 1))) -
               std::log1p(-rho);
    if (log_tail < target) break;
    if (M > 5'000'000) throw std::domain_error("polylog_series: point too close to 1");
  }

  int max_k = 0;
  for (int e : k.parts()) max_k = std::max(max_k, e);
  std::vector<Real> prefix(static_cast<std::size_t>(r), Real(0));
  std::vector<Real> a(static_cast<std::size_t>(r));
  std::vector<Real> inv_pow(static_cast<std::size_t>(max_k) + 1);
  Real zp = z.value;
  Real sum = 0;
  for (long n = 1; n <= M; ++n) {
    inv_pow[0] = 1;
    const Real inv = Real(1) / Real(n);
    for (int e = 1; e <= max_k; ++e) inv_pow[static_cast<std::size_t>(e)] = inv_pow[static_cast<std::size_t>(e - 1)] * inv;
    for (int j = 0; j < r; ++j) {
      auto& aj = a[static_cast<std::size_t>(j)];
      const bool parity_ok = level == Level::one || (n - (j + 1)) % 2 == 0;
      if (!parity_ok) {
        aj = 0;
        continue;
      }
      const Real& w = inv_pow[static_cast<std::size_t>(k[static_cast<std::size_t>(j)])];
      aj = j == 0 ? w : w * prefix[static_cast<std::size_t>(j - 1)];
    }
    for (int j = 0; j < r; ++j) prefix[static_cast<std::size_t>(j)] += a[static_cast<std::size_t>(j)];
    sum += a[static_cast<std::size_t>(r - 1)] * zp;
    zp *= z.value;
  }
  Real err = exp(Real(log_tail)) + rounding_budget(sum, 2.0 * M + max_k + r);
  return EvalResult{sum, err, level == Level::one ? "series" : "ath-series"};
}

EvalResult value_at_one(const Index& k, Level level, const Point& c) {
  if (!is_admissible(k)) throw PoleError("divergent: " + k.to_string() + " is not admissible");
  const Word w = word_of(k);
  const std::size_t n = w.size();
  const Point upper = partner(c, level);
  EvalResult total = EvalResult::exact(0, "convolution");
  for (std::size_t j = 0; j <= n; ++j) {
    EvalResult fu = EvalResult::exact(1);
    if (j > 0) {
      Word up;
      int x0 = 0, y = 0;
      for (std::size_t i = j; i-- > 0;) {
        up.push_back(!w[i]);
        (w[i] ? y : x0) += 1;
      }
      fu = cached_polylog(index_of(up), upper, level);
      if (level == Level::two) fu = fu * int_pow(2, x0 - y);
    }
    EvalResult fl = EvalResult::exact(1);
    if (j < n) fl = cached_polylog(index_of(Word(w.begin() + static_cast<long>(j), w.end())), c, level);
    total = total + fu * fl;
  }
  total.method = level == Level::one ? "convolution" : "level2-convolution";
  return total;
}

EvalResult zeta(int s) {
  if (s == 1) throw PoleError("zeta(1)");
  if (s < 1) throw std::invalid_argument("zeta: argument must be >= 2");
  return cached("zeta:" + std::to_string(s), [s] {
    const unsigned bits = working_bits();
    const long N = std::max<long>(32, bits / 2);
    const Real target = unit_roundoff();
    Real sum = 0;
    for (long n = 1; n < N; ++n) sum += pow(Real(n), -s);
    const Real RN(N);
    sum += pow(RN, 1 - s) / (s - 1) + pow(RN, -s) / 2;
    // Correction terms B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^{1-s-2j}.
    Real rising = s;
    Real npow = pow(RN, -s - 1);
    Real err = 0;
    for (int j = 1;; ++j) {
      const Real term = to_real(bernoulli(2 * j) / Rational(factorial(2u * static_cast<unsigned>(j)))) * rising * npow;
      if (abs(term) < target) {
        err = 2 * abs(term);
        break;
      }
      sum += term;
      rising *= Real(s + 2 * j - 1) * Real(s + 2 * j);
      npow /= RN * RN;
      if (j > 400) throw std::runtime_error("zeta: Euler-Maclaurin did not converge");
    }
    err += rounding_budget(sum, static_cast<double>(N) + 100);
    return EvalResult{sum, err, "euler-maclaurin"};
  });
}

EvalResult mzv(const Index& k) {
  if (!is_admissible(k)) throw PoleError("divergent: zeta(" + k.to_string() + ")");
  EvalResult v = cached("mzv:" + k.to_string(),
                        [&] { return value_at_one(k, Level::one, Point::rational(Rational(1, 2))); });
  const auto& cfg = settings();
  if (cfg.perturbed_mzv && *cfg.perturbed_mzv == k) v.value *= Real(1) + Real(cfg.perturbation);
  return v;
}

EvalResult mzv_split(const Index& k, const Rational& c) {
  return value_at_one(k, Level::one, Point::rational(c));
}

EvalResult mzsv(const Index& k) {
  if (!is_admissible(k)) throw PoleError("divergent: zeta*(" + k.to_string() + ")");
  EvalResult total = EvalResult::exact(0);
  for (const Index& c : coarsenings(k)) total = total + mzv(c);
  total.method = "coarsening-sum";
  return total;
}

EvalResult mzv_function(const std::vector<int>& head, int s) {
  if (s <= 1) throw PoleError("multiple zeta function at s = " + std::to_string(s));
  if (head.empty()) return zeta(s);
  return mzv(concat(head, {s}));
}

EvalResult mpl_numeric(const Index& k, const Real& z) {
  if (!(z > 0 && z < 1)) throw std::invalid_argument("mpl_numeric: z must lie in (0, 1)");
  return polylog_series(k, Point{z, "x"}, Level::one);
}

EvalResult t0_value(const Index& k) {
  if (!is_admissible(k)) throw PoleError("divergent: T_0(" + k.to_string() + ")");
  return cached("t0:" + k.to_string(), [&] { return value_at_one(k, Level::two, Point::silver()); });
}

EvalResult t0_split(const Index& k, const Rational& c) {
  if (!is_admissible(k)) throw PoleError("divergent: T_0(" + k.to_string() + ")");
  return value_at_one(k, Level::two, Point::rational(c));
}

EvalResult t_value(const Index& k) {
  EvalResult v = t0_value(k) * int_pow(2, k.depth());
  v.method = "level2-convolution";
  return v;
}

void clear_numeric_caches() {
  std::lock_guard lock(cache_mutex);
  cache.clear();
}

}  // namespace akz
