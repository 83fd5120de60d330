#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace akz {

/// A multi-index (k_1, ..., k_r) of positive integers, read in the increasing
/// convention: zeta(k) sums over m_1 < ... < m_r and the last part carries
/// the convergence condition.
class Index {
 public:
  explicit Index(std::vector<int> parts);
  Index(std::initializer_list<int> parts) : Index(std::vector<int>(parts)) {}

  /// Parses "k1,k2,...". Throws std::invalid_argument on malformed input.
  static Index parse(std::string_view text);

  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vec() const { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  int depth() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  int last() const { return parts_.back(); }

  std::string to_string() const;

  friend auto operator<=>(const Index&, const Index&) = default;
  friend bool operator==(const Index&, const Index&) = default;

 private:
  std::vector<int> parts_;
};

/// A nonpositive multi-index (-k_1, ..., -k_r), stored by the magnitudes
/// k_i >= 0.
class SignedIndex {
 public:
  explicit SignedIndex(std::vector<int> magnitudes);
  SignedIndex(std::initializer_list<int> m) : SignedIndex(std::vector<int>(m)) {}

  /// Parses "neg:k1,k2,..."; the tag is required.
  static SignedIndex parse(std::string_view text);

  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vec() const { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  int depth() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  bool all_zero() const;

  /// Exponent vector (-k_1, ..., -k_r) as used by the polylogarithm.
  std::vector<int> exponents() const;

  std::string to_string() const;

  friend auto operator<=>(const SignedIndex&, const SignedIndex&) = default;
  friend bool operator==(const SignedIndex&, const SignedIndex&) = default;

 private:
  std::vector<int> parts_;
};

/// A sequence (j_1, ..., j_r) of nonnegative integers.
struct Composition {
  std::vector<int> parts;

  int weight() const;
  int depth() const { return static_cast<int>(parts.size()); }

  friend auto operator<=>(const Composition&, const Composition&) = default;
  friend bool operator==(const Composition&, const Composition&) = default;
};

bool is_admissible(const Index& k);

/// k_+ : last part incremented.
Index plus_one(const Index& k);

/// Dual index of an admissible index. Throws std::invalid_argument otherwise.
Index dual(const Index& k);

/// All k' with k refining into k' (k obtained from k' by turning commas into
/// plus signs), including k itself. Sorted lexicographically.
std::vector<Index> refinements(const Index& k);

/// All k' obtained from k by turning some commas into plus signs, including
/// k itself. Sorted lexicographically.
std::vector<Index> coarsenings(const Index& k);

/// prod_i binom(k_i + j_i - 1, j_i). Throws on depth mismatch.
mpz_class b_coefficient(const Index& k, const Composition& j);

/// All compositions of `weight` into `depth` nonnegative parts, in
/// lexicographically decreasing order of the part vector.
std::vector<Composition> compositions(int weight, int depth);

/// Component-wise sum k + j; depths must agree.
Index operator+(const Index& k, const Composition& j);

/// (1, ..., 1, last) with `ones` leading ones.
Index ones_then(int ones, int last);

/// Concatenation helper; either side may be empty.
Index concat(const std::vector<int>& head, const std::vector<int>& tail);

/// All admissible indices of exactly the given weight, lexicographic.
std::vector<Index> admissible_indices(int weight);

/// All indices (admissible or not) of exactly the given weight, lexicographic.
std::vector<Index> all_indices(int weight);

}  // namespace akz
