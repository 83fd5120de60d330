#include "doctest.h"

#include "akz/pbn.hpp"
#include "akz/series.hpp"
#include "oracles.hpp"

using akz::PbKind;
using akz::Rational;

namespace {

long inverse_mod(long a, long p) {
  long r = 1, e = p - 2;
  a %= p;
  while (e > 0) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

long finite_sum_brute(const std::vector<int>& k, long p) {
  // depth <= 3
  long total = 0;
  auto term = [&](std::vector<long> m) {
    long t = 1;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (int j = 0; j < k[i]; ++j) t = t * inverse_mod(m[i], p) % p;
    return t;
  };
  if (k.size() == 1)
    for (long a = 1; a < p; ++a) total += term({a});
  if (k.size() == 2)
    for (long a = 1; a < p; ++a)
      for (long b = a + 1; b < p; ++b) total += term({a, b});
  if (k.size() == 3)
    for (long a = 1; a < p; ++a)
      for (long b = a + 1; b < p; ++b)
        for (long c = b + 1; c < p; ++c) total += term({a, b, c});
  return total % p;
}

}  // namespace

TEST_CASE("small values") {
  CHECK(akz::poly_bernoulli_B(1, 1) == Rational(1, 2));
  CHECK(akz::poly_bernoulli_C(1, 1) == Rational(-1, 2));
  CHECK(akz::poly_bernoulli_B(2, -1) == 4);
  CHECK(akz::poly_bernoulli_B(1, -2) == 4);
  CHECK(akz::poly_bernoulli_B(2, -2) == 14);
  CHECK(akz::poly_bernoulli_B(3, -3) == 230);
  for (int n = 0; n <= 10; ++n) {
    CHECK(akz::poly_bernoulli_B(n, -1) == Rational(mpz_class(1) << n));
    CHECK(akz::poly_bernoulli_B(0, n - 5) == 1);
    CHECK(akz::poly_bernoulli_C(0, n - 5) == 1);
  }
}

TEST_CASE("index one gives Bernoulli numbers") {
  for (int n = 0; n <= 16; ++n) {
    CHECK(akz::poly_bernoulli_C(n, 1) == akz::bernoulli(n));
    CHECK(akz::poly_bernoulli_B(n, 1) == (n % 2 ? -1 : 1) * akz::bernoulli(n));
  }
}

TEST_CASE("closed forms match the generating function") {
  for (int n = 0; n <= 20; ++n)
    for (int k = -8; k <= 8; ++k) {
      CHECK(akz::poly_bernoulli_B(n, k) == akz::poly_bernoulli_B_closed(n, k));
      CHECK(akz::poly_bernoulli_C(n, k) == akz::poly_bernoulli_C_closed(n, k));
    }
}

TEST_CASE("multi-index rows agree with the Stirling oracle") {
  const std::vector<std::vector<int>> indices = {{1}, {2}, {-3}, {1, 2}, {-1, 3}, {0, -2}, {2, -1, 1}, {-2, -2, 3}, {3, 3, 3}};
  for (const auto& e : indices)
    for (bool c : {false, true}) {
      const auto row = akz::multi_poly_bernoulli_row(e, c ? PbKind::C : PbKind::B, 12);
      for (int n = 0; n <= 12; ++n) CHECK(row[static_cast<std::size_t>(n)] == oracle::multi_poly_bernoulli(n, e, c));
    }
}

TEST_CASE("Dirichlet-polynomial form in s") {
  for (int n = 0; n <= 20; ++n) {
    const auto B = akz::B_symbolic(n);
    const auto C = akz::C_symbolic(n);
    for (int s = -8; s <= 8; ++s) {
      CHECK(B.at(s) == akz::poly_bernoulli_B(n, s));
      CHECK(C.at(s) == akz::poly_bernoulli_C(n, s));
    }
  }
  CHECK(akz::B_symbolic(1).to_string() == "1*2^-s");
  CHECK(akz::C_symbolic(1).to_string() == "-1*1^-s + 1*2^-s");
}

TEST_CASE("nonpositive indices give nonnegative integers") {
  for (int n = 0; n <= 12; ++n)
    for (int k = 0; k <= 12; ++k) {
      const Rational b = akz::poly_bernoulli_B(n, -k);
      const Rational c = akz::poly_bernoulli_C(n, -k);
      CHECK(b.get_den() == 1);
      CHECK(c.get_den() == 1);
      CHECK(b > 0);
      CHECK(c >= 0);
      if (k > 0) CHECK(c > 0);
    }
}

TEST_CASE("duality for nonpositive indices") {
  for (const auto& rep : akz::duality_check_B(10)) CHECK(rep.status == akz::Status::pass_exact);
  for (const auto& rep : akz::duality_check_C(10)) CHECK(rep.status == akz::Status::pass_exact);
  CHECK(akz::duality_check_B(3).size() == 10);
}

TEST_CASE("finite sums modulo p") {
  for (long p : {5L, 7L, 11L, 13L})
    for (const std::vector<int>& k : std::vector<std::vector<int>>{{1}, {2}, {1, 1}, {1, 2}, {2, 3}, {1, 1, 1}, {2, 1, 2}}) {
      long expect = finite_sum_brute(k, p);
      CHECK(akz::finite_mzv_mod_p(akz::Index(k), p) == expect);
    }
  CHECK(akz::rational_mod_p(Rational(1, 2), 7) == 4L);
  CHECK_FALSE(akz::rational_mod_p(Rational(1, 7), 7).has_value());
}

TEST_CASE("congruence with the C numbers") {
  int exact = 0;
  for (long p : {5L, 7L, 11L, 13L, 17L, 19L, 23L})
    for (const akz::Index& k : {akz::Index{1}, akz::Index{2}, akz::Index{1, 2}, akz::Index{2, 1}, akz::Index{3, 1, 2}, akz::Index{1, 1, 1}}) {
      const auto rep = akz::congruence_check(k, p);
      CHECK((rep.status == akz::Status::pass_exact || rep.status == akz::Status::skipped_bad_prime));
      exact += rep.status == akz::Status::pass_exact;
    }
  CHECK(exact > 20);
}

TEST_CASE("bivariate generating function") {
  CHECK(akz::bivariate_identity_check(10).status == akz::Status::pass_exact);
}
