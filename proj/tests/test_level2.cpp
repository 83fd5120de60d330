#include "doctest.h"

#include "akz/level2.hpp"
#include "akz/mzv.hpp"

using akz::EvalResult;
using akz::Index;
using akz::Rational;

namespace {

bool same(const EvalResult& a, const EvalResult& b) { return akz::agrees(a, b, 1e-8); }

EvalResult T(std::initializer_list<int> k) { return akz::t_value(Index(k)); }

}  // namespace

TEST_CASE("Ath coefficients") {
  const auto a1 = akz::ath_coeffs(Index{1}, 7).coefficients;
  CHECK(a1[1] == 1);
  CHECK(a1[2] == 0);
  CHECK(a1[3] == Rational(1, 3));
  CHECK(a1[5] == Rational(1, 5));
  CHECK(a1[7] == Rational(1, 7));
  const auto a2 = akz::ath_coeffs(Index{2}, 5).coefficients;
  CHECK(a2[1] == 1);
  CHECK(a2[3] == Rational(1, 9));
  CHECK(a2[5] == Rational(1, 25));
  const auto a11 = akz::ath_coeffs(Index{1, 1}, 12).coefficients;
  CHECK(a11[2] == Rational(1, 2));
  const auto a1_12 = akz::ath_coeffs(Index{1}, 12).coefficients;
  CHECK(a11 == a1_12 * a1_12 * Rational(1, 2));
}

TEST_CASE("Ath parity and positivity") {
  for (int w = 1; w <= 5; ++w)
    for (const Index& k : akz::all_indices(w)) {
      const auto c = akz::ath_coeffs(k, 20).coefficients;
      for (int n = 0; n <= 20; ++n) {
        CHECK(c[n] >= 0);
        if ((n - k.depth()) % 2 != 0) CHECK(c[n] == 0);
      }
    }
}

TEST_CASE("Ath partial sums at one increase towards T_0") {
  for (const Index& k : {Index{2}, Index{1, 2}, Index{3}, Index{2, 2}}) {
    const auto c = akz::ath_coeffs(k, 60).coefficients;
    const akz::Real t0 = akz::t0_value(k).value;
    akz::Real partial = 0;
    for (int n = 0; n <= 60; ++n) {
      const akz::Real next = partial + akz::to_real(c[n]);
      CHECK(next >= partial);
      partial = next;
    }
    CHECK(partial <= t0);
    CHECK(partial > t0 / 2);
  }
}

TEST_CASE("series identities") {
  const auto rep = akz::ath_series_identities(15);
  CHECK(rep.status == akz::Status::pass_exact);
}

TEST_CASE("psi at positive integers") {
  for (int r = 1; r <= 3; ++r)
    for (int k = 1; k <= 3; ++k) {
      std::vector<int> dual(static_cast<std::size_t>(k - 1), 1);
      dual.push_back(r + 1);
      CHECK(same(akz::psi_at_positive(r, k, 0), akz::t_value(Index(dual))));
    }
  for (int k = 1; k <= 4; ++k) CHECK(same(akz::psi_at_positive(1, k, 0), akz::t_value(Index{k + 1})));
  CHECK(same(akz::psi_at_positive(1, 2, 1), T({2, 2}) + T({1, 3}) * Rational(2)));
}

TEST_CASE("height-one duality") {
  CHECK(akz::agrees(akz::t0_value(Index{3}) * Rational(2), akz::t0_value(Index{1, 2}) * Rational(4), 1e-30));
  for (int r = 1; r <= 4; ++r)
    for (int k = 1; k <= 4; ++k) CHECK(akz::height_one_duality_check(r, k, 1e-8).passed());
}

TEST_CASE("alternating-sum form of psi") {
  CHECK(akz::theorem_5_4_check(1, 2, 2, 1e-8).passed());
  CHECK(akz::theorem_5_4_check(2, 2, 2, 1e-8).passed());
  for (int r = 1; r <= 3; ++r) CHECK(akz::theorem_5_4_check(r, 1, 2, 1e-8).passed());
  CHECK(akz::theorem_5_4_check(1, 2, 1, 1e-8).status == akz::Status::skipped_pole);
}

TEST_CASE("double-sum identity") {
  CHECK(akz::theorem_5_8_check(1, 1, 2, 1e-8).passed());
  CHECK(akz::theorem_5_8_check(2, 1, 2, 1e-8).passed());
  CHECK(akz::theorem_5_8_check(1, 2, 2, 1e-8).passed());
  CHECK(akz::theorem_5_8_check(2, 2, 3, 1e-8).passed());
  CHECK(akz::example_5_9_check(1, 1e-8).passed());
  CHECK(akz::example_5_9_check(2, 1e-8).passed());
}

TEST_CASE("integral representation and odd zeta") {
  for (int k : {2, 3})
    for (int s : {1, 2}) CHECK(akz::psi_depth1_integral_check(k, s, 1e-8).passed());
  for (int s = 2; s <= 8; ++s) CHECK(akz::zeta_odd_check(s, 1e-8).passed());
}
