#include <algorithm>
#include <stdexcept>

#include "doctest.h"

#include "akz/index.hpp"

using akz::Composition;
using akz::Index;

namespace {

// Duality on the word y x^{k_1-1} ... y x^{k_r-1}: reverse, then swap x and y.
Index dual_by_words(const Index& k) {
  std::vector<int> word;  // 1 = y, 0 = x
  for (int part : k.vec()) {
    word.push_back(1);
    for (int i = 1; i < part; ++i) word.push_back(0);
  }
  std::reverse(word.begin(), word.end());
  std::vector<int> parts;
  for (int c : word) {
    if (c == 0) parts.push_back(1);
    else parts.back() += 1;
  }
  return Index(parts);
}

bool contains(const std::vector<Index>& v, const Index& k) { return std::find(v.begin(), v.end(), k) != v.end(); }

}  // namespace

TEST_CASE("admissibility") {
  CHECK(akz::is_admissible(Index{1, 2}));
  CHECK_FALSE(akz::is_admissible(Index{1}));
  CHECK_FALSE(akz::is_admissible(Index{2, 3, 1}));
}

TEST_CASE("plus_one increments the last part") {
  CHECK(akz::plus_one(Index{2, 1}) == Index{2, 2});
  CHECK(akz::plus_one(Index{1}) == Index{2});
  CHECK(akz::plus_one(Index{1, 1, 1}) == Index{1, 1, 2});
}

TEST_CASE("dual") {
  CHECK(akz::dual(Index{3}) == Index{1, 2});
  CHECK(akz::dual(Index{2}) == Index{2});
  const Index d = akz::dual(Index{2, 3});
  CHECK(d == dual_by_words(Index{2, 3}));
  CHECK(akz::dual(d) == Index{2, 3});
  for (int w = 2; w <= 9; ++w)
    for (const Index& k : akz::admissible_indices(w)) {
      const Index kd = akz::dual(k);
      CHECK(kd == dual_by_words(k));
      CHECK(akz::dual(kd) == k);
      CHECK(kd.weight() == k.weight());
      CHECK(kd.depth() == k.weight() - k.depth());
      CHECK(akz::is_admissible(kd));
    }
}

TEST_CASE("dual of (1^{r-1}, k+1) is (1^{k-1}, r+1)") {
  for (int r = 1; r <= 5; ++r)
    for (int k = 1; k <= 5; ++k) CHECK(akz::dual(akz::ones_then(r - 1, k + 1)) == akz::ones_then(k - 1, r + 1));
}

TEST_CASE("refinements") {
  const auto r3 = akz::refinements(Index{3});
  CHECK(r3.size() == 4);
  for (const Index& k : {Index{3}, Index{1, 2}, Index{2, 1}, Index{1, 1, 1}}) CHECK(contains(r3, k));
  CHECK(akz::refinements(Index{1}) == std::vector<Index>{Index{1}});
  CHECK(contains(akz::refinements(Index{2, 3}), Index{2, 2, 1}));
  // 2^{weight - depth} refinements in general.
  CHECK(akz::refinements(Index{2, 3}).size() == 8);
}

TEST_CASE("coarsenings") {
  const auto c = akz::coarsenings(Index{1, 2});
  CHECK(c.size() == 2);
  CHECK(contains(c, Index{1, 2}));
  CHECK(contains(c, Index{3}));
  CHECK(akz::coarsenings(Index{2}) == std::vector<Index>{Index{2}});
  const auto c3 = akz::coarsenings(Index{1, 1, 2});
  CHECK(c3.size() == 4);
  for (const Index& k : {Index{1, 1, 2}, Index{2, 2}, Index{1, 3}, Index{4}}) CHECK(contains(c3, k));
}

TEST_CASE("b coefficient") {
  CHECK(akz::b_coefficient(Index{2, 3}, Composition{{1, 0}}) == 2);
  CHECK(akz::b_coefficient(Index{1, 1}, Composition{{2, 1}}) == 1);
  for (const Index& k : {Index{1}, Index{2, 3}, Index{1, 4, 2}})
    CHECK(akz::b_coefficient(k, Composition{std::vector<int>(static_cast<std::size_t>(k.depth()), 0)}) == 1);
}

TEST_CASE("compositions") {
  const auto c02 = akz::compositions(0, 2);
  REQUIRE(c02.size() == 1);
  CHECK(c02[0].parts == std::vector<int>{0, 0});
  const auto c22 = akz::compositions(2, 2);
  REQUIRE(c22.size() == 3);
  CHECK(c22[0].parts == std::vector<int>{2, 0});
  CHECK(c22[1].parts == std::vector<int>{1, 1});
  CHECK(c22[2].parts == std::vector<int>{0, 2});
  CHECK(akz::compositions(1, 3).size() == 3);
}

TEST_CASE("index enumeration") {
  CHECK(akz::all_indices(4).size() == 8);
  CHECK(akz::admissible_indices(4).size() == 4);
}

TEST_CASE("parsing") {
  CHECK(Index::parse("1,2") == Index{1, 2});
  CHECK(akz::SignedIndex::parse("neg:0,3") == akz::SignedIndex{0, 3});
  CHECK_THROWS_AS(Index::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Index::parse("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(Index::parse("0"), std::invalid_argument);
  CHECK_THROWS_AS(Index::parse("a"), std::invalid_argument);
  CHECK_THROWS_AS(akz::SignedIndex::parse("1,2"), std::invalid_argument);
}
