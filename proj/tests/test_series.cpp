#include "doctest.h"

#include "akz/ak_zeta.hpp"
#include "akz/negative_polylog.hpp"
#include "akz/series.hpp"
#include "akz/verify.hpp"
#include "oracles.hpp"

using akz::Rational;
using akz::SeriesOp;
using akz::TruncatedSeries;

namespace {

TruncatedSeries poly(std::vector<Rational> c, int cap) {
  c.resize(static_cast<std::size_t>(cap) + 1, 0);
  return TruncatedSeries(c, cap);
}

}  // namespace

TEST_CASE("series arithmetic") {
  const TruncatedSeries a = poly({1, 1}, 6), b = poly({1, -1}, 6);
  CHECK(akz::series_arith(a, b, SeriesOp::mul) == poly({1, 0, -1}, 6));
  CHECK(akz::series_arith(a, b, SeriesOp::add) == poly({2}, 6));
  const TruncatedSeries geo = akz::series_arith(poly({1}, 6), b, SeriesOp::div);
  for (int n = 0; n <= 6; ++n) CHECK(geo[n] == 1);
}

TEST_CASE("t/(e^t - 1) by long division") {
  const TruncatedSeries e = TruncatedSeries::exp(1, 8);
  const TruncatedSeries q = akz::divide_normalized(TruncatedSeries::monomial(1, 8), e - TruncatedSeries::constant(1, 8));
  CHECK(q[0] == 1);
  CHECK(q[1] == Rational(-1, 2));
  CHECK(q[2] == Rational(1, 12));
  CHECK(q[3] == 0);
  CHECK(q[4] == Rational(-1, 720));
}

TEST_CASE("composition with 1 - e^{-t} and 1 - e^{t}") {
  const TruncatedSeries z = TruncatedSeries::monomial(1, 6);
  const TruncatedSeries minus = akz::compose_one_minus_exp(z, -1, 6);
  CHECK(minus[1] == 1);
  CHECK(minus[2] == Rational(-1, 2));
  CHECK(minus[3] == Rational(1, 6));
  const TruncatedSeries plus = akz::compose_one_minus_exp(z, +1, 6);
  CHECK(plus[1] == -1);
  CHECK(plus[2] == Rational(-1, 2));
  CHECK(plus[3] == Rational(-1, 6));
  const TruncatedSeries half_sq = akz::compose_one_minus_exp(poly({0, 0, Rational(1, 2)}, 6), -1, 6);
  CHECK(half_sq[2] == Rational(1, 2));
  CHECK(half_sq[3] == Rational(-1, 2));
}

TEST_CASE("multiple polylogarithm coefficients") {
  const int two[] = {2};
  const TruncatedSeries li2 = akz::mpl_coeffs(two, 3);
  CHECK(li2 == poly({0, 1, Rational(1, 4), Rational(1, 9)}, 3));
  const int oneone[] = {1, 1};
  const TruncatedSeries li11 = akz::mpl_coeffs(oneone, 3);
  CHECK(li11[2] == Rational(1, 2));
  CHECK(li11[3] == Rational(1, 2));
  // Li_{1,1} = (1/2) Li_1^2
  const int one[] = {1};
  const TruncatedSeries li1 = akz::mpl_coeffs(one, 12);
  CHECK(akz::mpl_coeffs(oneone, 12) == li1 * li1 * Rational(1, 2));
  const int onetwo[] = {1, 2};
  const TruncatedSeries li12 = akz::mpl_coeffs(onetwo, 3);
  CHECK(li12[2] == Rational(1, 4));
  CHECK(li12[3] == Rational(1, 6));
}

TEST_CASE("mpl coefficients agree with the enumeration oracle") {
  for (const std::vector<int>& e : std::vector<std::vector<int>>{{3}, {1, 2}, {2, -1}, {-2, 0, 1}, {0, 0, 0}, {-1, -3}}) {
    const TruncatedSeries s = akz::mpl_coeffs(e, 14);
    const auto dp = oracle::mpl_coefficients(e, 14);
    for (int M = 0; M <= 14; ++M) {
      CHECK(s[M] == dp[static_cast<std::size_t>(M)]);
      if (M >= 1) CHECK(s[M] == oracle::mpl_coefficient(e, M));
    }
  }
}

TEST_CASE("Stirling numbers and Bernoulli numbers") {
  CHECK(akz::stirling2(0, 0) == 1);
  CHECK(akz::stirling2(4, 2) == 7);
  for (int n = 1; n <= 6; ++n) CHECK(akz::stirling2(n, 0) == 0);
  for (int n = 0; n <= 12; ++n)
    for (int m = 0; m <= n; ++m) CHECK(akz::stirling2(n, m) == oracle::stirling2(n, m));
  CHECK(akz::bernoulli(1) == Rational(-1, 2));
  CHECK(akz::bernoulli(12) == Rational(-691, 2730));
}

TEST_CASE("negative-index polylogarithms as rational functions") {
  const auto li0 = akz::negative_mpl(akz::SignedIndex{0});
  CHECK(li0.pole_order == 1);
  CHECK(li0.numerator == akz::Polynomial({0, 1}));
  const auto lim1 = akz::negative_mpl(akz::SignedIndex{1});
  CHECK(lim1.pole_order == 2);
  CHECK(lim1.numerator == akz::Polynomial({0, 1}));
  const auto li00 = akz::negative_mpl(akz::SignedIndex{0, 0});
  CHECK(li00.pole_order == 2);
  CHECK(li00.numerator == akz::Polynomial({0, 0, 1}));
}

TEST_CASE("rational-function certificates for small signed indices") {
  for (const akz::SignedIndex& k : akz::signed_indices(7)) {
    const auto rep = akz::lemma_4_1_check(k, 25);
    CHECK_MESSAGE(rep.passed(), k.to_string() << " " << rep.note);
    const auto taylor = akz::negative_mpl(k).taylor(25);
    const auto direct = oracle::mpl_coefficients(k.exponents(), 25);
    for (int M = 0; M <= 25; ++M) CHECK(taylor[M] == direct[static_cast<std::size_t>(M)]);
  }
}

TEST_CASE("Landen connection") {
  CHECK(akz::landen_check(akz::Index{1}, 20).status == akz::Status::pass_exact);
  CHECK(akz::landen_check(akz::Index{2}, 20).status == akz::Status::pass_exact);
  CHECK(akz::landen_check(akz::Index{2, 1}, 15).status == akz::Status::pass_exact);
  // -Li_1(z/(z-1)) = Li_1(z)
  const int one[] = {1};
  TruncatedSeries inner(10);
  for (int n = 1; n <= 10; ++n) inner[n] = -1;
  CHECK(akz::compose(akz::mpl_coeffs(one, 10), inner) * Rational(-1) == akz::mpl_coeffs(one, 10));
}
