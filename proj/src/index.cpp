#include "akz/index.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace akz {

namespace {

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) throw std::invalid_argument("empty index string");
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw std::invalid_argument("malformed index string: '" + std::string(text) + "'");
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

// Binary word of an index in the increasing convention: part p becomes
// 'y' followed by p-1 copies of 'x' (true = y).
std::vector<bool> to_word(const Index& k) {
  std::vector<bool> w;
  for (int p : k.parts()) {
    w.push_back(true);
    w.insert(w.end(), static_cast<std::size_t>(p - 1), false);
  }
  return w;
}

Index from_word(const std::vector<bool>& w) {
  std::vector<int> parts;
  for (bool y : w) {
    if (y)
      parts.push_back(1);
    else
      ++parts.back();
  }
  return Index(std::move(parts));
}

// Every composition of n into positive parts, lexicographic.
void positive_compositions(int n, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int first = 1; first <= n; ++first) {
    cur.push_back(first);
    positive_compositions(n - first, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Index::Index(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("index must be nonempty");
  for (int p : parts_)
    if (p < 1) throw std::invalid_argument("index parts must be >= 1");
}

Index Index::parse(std::string_view text) { return Index(parse_int_list(text)); }

int Index::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Index::to_string() const { return join(parts_); }

SignedIndex::SignedIndex(std::vector<int> magnitudes) : parts_(std::move(magnitudes)) {
  if (parts_.empty()) throw std::invalid_argument("signed index must be nonempty");
  for (int p : parts_)
    if (p < 0) throw std::invalid_argument("signed index magnitudes must be >= 0");
}

SignedIndex SignedIndex::parse(std::string_view text) {
  constexpr std::string_view tag = "neg:";
  if (text.substr(0, tag.size()) != tag)
    throw std::invalid_argument("signed index must carry the 'neg:' tag");
  return SignedIndex(parse_int_list(text.substr(tag.size())));
}

int SignedIndex::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool SignedIndex::all_zero() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p == 0; });
}

std::vector<int> SignedIndex::exponents() const {
  std::vector<int> e(parts_.size());
  std::transform(parts_.begin(), parts_.end(), e.begin(), [](int p) { return -p; });
  return e;
}

std::string SignedIndex::to_string() const { return "neg:" + join(parts_); }

int Composition::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool is_admissible(const Index& k) { return k.last() >= 2; }

Index plus_one(const Index& k) {
  std::vector<int> p = k.vec();
  ++p.back();
  return Index(std::move(p));
}

Index dual(const Index& k) {
  if (!is_admissible(k))
    throw std::invalid_argument("dual requires an admissible index, got " + k.to_string());
  std::vector<bool> w = to_word(k);
  std::reverse(w.begin(), w.end());
  w.flip();
  return from_word(w);
}

std::vector<Index> refinements(const Index& k) {
  std::vector<std::vector<int>> acc{{}};
  for (int p : k.parts()) {
    std::vector<std::vector<int>> splits;
    std::vector<int> cur;
    positive_compositions(p, cur, splits);
    std::vector<std::vector<int>> next;
    next.reserve(acc.size() * splits.size());
    for (const auto& head : acc)
      for (const auto& s : splits) {
        auto v = head;
        v.insert(v.end(), s.begin(), s.end());
        next.push_back(std::move(v));
      }
    acc = std::move(next);
  }
  std::vector<Index> out;
  out.reserve(acc.size());
  for (auto& v : acc) out.emplace_back(std::move(v));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Index> coarsenings(const Index& k) {
  const int gaps = k.depth() - 1;
  std::vector<Index> out;
  out.reserve(std::size_t{1} << gaps);
  for (unsigned mask = 0; mask < (1u << gaps); ++mask) {
    std::vector<int> v{k[0]};
    for (int i = 1; i < k.depth(); ++i) {
      if (mask & (1u << (i - 1)))
        v.back() += k[static_cast<std::size_t>(i)];
      else
        v.push_back(k[static_cast<std::size_t>(i)]);
    }
    out.emplace_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

mpz_class b_coefficient(const Index& k, const Composition& j) {
  if (k.depth() != j.depth())
    throw std::invalid_argument("b_coefficient: depth mismatch");
  mpz_class prod = 1;
  for (std::size_t i = 0; i < j.parts.size(); ++i) {
    if (j.parts[i] < 0) throw std::invalid_argument("b_coefficient: negative composition part");
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(k[i] + j.parts[i] - 1),
                 static_cast<unsigned long>(j.parts[i]));
    prod *= c;
  }
  return prod;
}

std::vector<Composition> compositions(int weight, int depth) {
  if (weight < 0 || depth < 1) return {};
  std::vector<Composition> out;
  std::vector<int> cur(static_cast<std::size_t>(depth), 0);
  // Fill left to right, largest first part first.
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == depth - 1) {
      cur[static_cast<std::size_t>(pos)] = remaining;
      out.push_back(Composition{cur});
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      cur[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, weight);
  return out;
}

Index operator+(const Index& k, const Composition& j) {
  if (k.depth() != j.depth()) throw std::invalid_argument("index + composition: depth mismatch");
  std::vector<int> v = k.vec();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += j.parts[i];
  return Index(std::move(v));
}

Index ones_then(int ones, int last) {
  std::vector<int> v(static_cast<std::size_t>(ones), 1);
  v.push_back(last);
  return Index(std::move(v));
}

Index concat(const std::vector<int>& head, const std::vector<int>& tail) {
  std::vector<int> v = head;
  v.insert(v.end(), tail.begin(), tail.end());
  return Index(std::move(v));
}

std::vector<Index> all_indices(int weight) {
  if (weight < 1) return {};
  std::vector<std::vector<int>> raw;
  std::vector<int> cur;
  positive_compositions(weight, cur, raw);
  std::vector<Index> out;
  for (auto& v : raw) out.emplace_back(std::move(v));
  return out;
}

std::vector<Index> admissible_indices(int weight) {
  std::vector<Index> out;
  for (auto& k : all_indices(weight))
    if (is_admissible(k)) out.push_back(std::move(k));
  return out;
}

}  // namespace akz
