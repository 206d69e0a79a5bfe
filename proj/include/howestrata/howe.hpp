#pragma once

// Labels J = (k, m) of Howe subgroups of SU(n) and the splitting / merging
// calculus that generates the covering relation of their partial order.
//
// A label is a multiset of blocks (k_i, m_i) with sum k_i * m_i = n. Block i
// contributes a factor M_{k_i}(C) acting on C^{k_i} (x) C^{m_i}. Labels that
// differ by a simultaneous permutation of k and m are equivalent; HoweLabel
// always stores the canonical representative, with blocks sorted descending
// lexicographically by (k_i, m_i).

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <deque>
#include <functional>
#include <set>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "howestrata/integer.hpp"

namespace howestrata {

struct LabelError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Block {
  Integer k;
  Integer m;
  auto operator<=>(const Block&) const = default;
};

class HoweLabel {
 public:
  /// Canonical representative of the class of (k, m).
  static HoweLabel canonicalize(std::span<const Integer> k, std::span<const Integer> m) {
    if (k.size() != m.size()) throw LabelError("k and m must have the same length");
    std::vector<Block> blocks;
    blocks.reserve(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) blocks.push_back({k[i], m[i]});
    return HoweLabel(std::move(blocks));
  }

  static HoweLabel from_blocks(std::vector<Block> blocks) { return HoweLabel(std::move(blocks)); }

  /// Center of SU(n): ((1),(n)).
  static HoweLabel center(Integer n) { return HoweLabel({{1, n}}); }
  /// SU(n) itself: ((n),(1)).
  static HoweLabel whole(Integer n) { return HoweLabel({{n, 1}}); }

  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  std::size_t size() const noexcept { return blocks_.size(); }
  Integer n() const noexcept { return n_; }

  std::vector<Integer> k() const {
    std::vector<Integer> out;
    out.reserve(blocks_.size());
    for (const auto& b : blocks_) out.push_back(b.k);
    return out;
  }

  std::vector<Integer> m() const {
    std::vector<Integer> out;
    out.reserve(blocks_.size());
    for (const auto& b : blocks_) out.push_back(b.m);
    return out;
  }

  /// Complex dimension sum k_i^2 of the subalgebra M_J(C). Strictly
  /// increases along every splitting or merging step.
  Integer algebra_dimension() const {
    Integer d = 0;
    for (const auto& b : blocks_) d = checked_add(d, checked_mul(b.k, b.k));
    return d;
  }

  bool operator==(const HoweLabel& other) const noexcept { return blocks_ == other.blocks_; }

  /// Total order used for all deterministic output: by n, then by algebra
  /// dimension, then by blocks. It is a linear extension of the subgroup order.
  std::strong_ordering operator<=>(const HoweLabel& other) const {
    if (auto c = n_ <=> other.n_; c != 0) return c;
    if (auto c = algebra_dimension() <=> other.algebra_dimension(); c != 0) return c;
    return blocks_ <=> other.blocks_;
  }

 private:
  explicit HoweLabel(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw LabelError("a label needs at least one block");
    n_ = 0;
    for (const auto& b : blocks_) {
      if (b.k < 1 || b.m < 1) throw LabelError("label entries must be positive integers");
      n_ = checked_add(n_, checked_mul(b.k, b.m));
    }
    std::sort(blocks_.begin(), blocks_.end(), std::greater<>{});
  }

  std::vector<Block> blocks_;
  Integer n_ = 0;
};

inline HoweLabel canonicalize(std::span<const Integer> k, std::span<const Integer> m) {
  return HoweLabel::canonicalize(k, m);
}

inline HoweLabel canonicalize(std::initializer_list<Integer> k, std::initializer_list<Integer> m) {
  return HoweLabel::canonicalize(std::span(k.begin(), k.size()), std::span(m.begin(), m.size()));
}

// ---------------------------------------------------------------------------
// Text form: "(k1 k2 ...|m1 m2 ...)". Commas are accepted as separators.

inline std::string to_string(const HoweLabel& label) {
  std::string out = "(";
  const auto& b = label.blocks();
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(b[i].k);
  }
  out += '|';
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(b[i].m);
  }
  out += ')';
  return out;
}

namespace detail {

inline std::vector<Integer> parse_integer_list(std::string_view text, std::string_view full) {
  std::vector<Integer> out;
  std::size_t pos = 0;
  auto is_sep = [](char c) { return std::isspace(static_cast<unsigned char>(c)) || c == ','; };
  while (pos < text.size()) {
    while (pos < text.size() && is_sep(text[pos])) ++pos;
    if (pos == text.size()) break;
    if (!std::isdigit(static_cast<unsigned char>(text[pos])))
      throw LabelError("unexpected character in label '" + std::string(full) + "'");
    Integer value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = checked_add(checked_mul(value, 10), text[pos] - '0');
      ++pos;
    }
    out.push_back(value);
    if (pos < text.size() && !is_sep(text[pos]))
      throw LabelError("unexpected character in label '" + std::string(full) + "'");
  }
  return out;
}

}  // namespace detail

inline HoweLabel parse_label(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  auto last = text.find_last_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw LabelError("empty label");
  auto body = text.substr(first, last - first + 1);
  if (body.size() < 2 || body.front() != '(' || body.back() != ')')
    throw LabelError("label must be enclosed in parentheses: '" + std::string(text) + "'");
  body = body.substr(1, body.size() - 2);
  auto bar = body.find('|');
  if (bar == std::string_view::npos || body.find('|', bar + 1) != std::string_view::npos)
    throw LabelError("label needs exactly one '|': '" + std::string(text) + "'");
  auto k = detail::parse_integer_list(body.substr(0, bar), text);
  auto m = detail::parse_integer_list(body.substr(bar + 1), text);
  if (k.empty()) throw LabelError("label has no blocks: '" + std::string(text) + "'");
  return HoweLabel::canonicalize(k, m);
}

// ---------------------------------------------------------------------------
// Enumeration of K^(n).

namespace detail {

inline void enumerate_blocks(Integer remaining, Block bound, std::vector<Block>& prefix,
                             std::vector<HoweLabel>& out) {
  if (remaining == 0) {
    out.push_back(HoweLabel::from_blocks(prefix));
    return;
  }
  // Blocks are emitted in non-increasing order, so each multiset appears once.
  for (Integer k = std::min(bound.k, remaining); k >= 1; --k) {
    Integer m_max = remaining / k;
    if (k == bound.k) m_max = std::min(m_max, bound.m);
    for (Integer m = m_max; m >= 1; --m) {
      prefix.push_back({k, m});
      enumerate_blocks(remaining - k * m, {k, m}, prefix, out);
      prefix.pop_back();
    }
  }
}

}  // namespace detail

/// One canonical label per class in K^(n), sorted by HoweLabel's total order.
inline std::vector<HoweLabel> enumerate_labels(Integer n) {
  if (n < 1) throw std::invalid_argument("n must be a positive integer");
  std::vector<HoweLabel> out;
  std::vector<Block> prefix;
  detail::enumerate_blocks(n, {n, n}, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Centralizer duality and the successor calculus. Indices are 0-based
// positions in the canonical block order.

/// Label of the centralizer: (k, m) -> (m, k).
inline HoweLabel dual(const HoweLabel& label) {
  std::vector<Block> swapped;
  swapped.reserve(label.size());
  for (const auto& b : label.blocks()) swapped.push_back({b.m, b.k});
  return HoweLabel::from_blocks(std::move(swapped));
}

/// Splitting: replace block i = (k_i, m_i) by (k_i, m1), (k_i, m2), m1 + m2 = m_i.
inline HoweLabel split(const HoweLabel& label, std::size_t i, Integer m1, Integer m2) {
  const auto& b = label.blocks();
  if (i >= b.size()) throw std::out_of_range("split: block index out of range");
  if (b[i].m == 1) throw std::invalid_argument("split: block has multiplicity 1");
  if (m1 < 1 || m2 < 1 || m1 + m2 != b[i].m)
    throw std::invalid_argument("split: m1 + m2 must equal m_i with both positive");
  std::vector<Block> out;
  out.reserve(b.size() + 1);
  for (std::size_t p = 0; p < b.size(); ++p) {
    if (p == i) {
      out.push_back({b[p].k, m1});
      out.push_back({b[p].k, m2});
    } else {
      out.push_back(b[p]);
    }
  }
  return HoweLabel::from_blocks(std::move(out));
}

/// Merging: blocks i < j with m_i = m_j become one block (k_i + k_j, m_i).
inline HoweLabel merge(const HoweLabel& label, std::size_t i, std::size_t j) {
  const auto& b = label.blocks();
  if (i >= b.size() || j >= b.size()) throw std::out_of_range("merge: block index out of range");
  if (i >= j) throw std::invalid_argument("merge: requires i < j");
  if (b[i].m != b[j].m) throw std::invalid_argument("merge: requires m_i == m_j");
  std::vector<Block> out;
  out.reserve(b.size() - 1);
  for (std::size_t p = 0; p < b.size(); ++p) {
    if (p == j) continue;
    if (p == i)
      out.push_back({checked_add(b[i].k, b[j].k), b[i].m});
    else
      out.push_back(b[p]);
  }
  return HoweLabel::from_blocks(std::move(out));
}

/// Labels of all direct successors: every admissible split and merge,
/// deduplicated by canonical form and returned in label order.
inline std::vector<HoweLabel> direct_successors(const HoweLabel& label) {
  std::set<HoweLabel> found;
  const auto& b = label.blocks();
  for (std::size_t i = 0; i < b.size(); ++i) {
    // Equal neighbouring blocks give equivalent results; skip repeats.
    if (i > 0 && b[i] == b[i - 1]) continue;
    for (Integer m1 = 1; 2 * m1 <= b[i].m; ++m1) found.insert(split(label, i, m1, b[i].m - m1));
  }
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (b[i].m == b[j].m) found.insert(merge(label, i, j));
  return {found.begin(), found.end()};
}

/// J <= J' in the subgroup order: equality or reachability along successors.
inline bool leq(const HoweLabel& lower, const HoweLabel& upper) {
  if (lower.n() != upper.n()) throw std::invalid_argument("leq: labels belong to different n");
  if (lower == upper) return true;
  const Integer target_dim = upper.algebra_dimension();
  std::set<HoweLabel> seen{lower};
  std::deque<HoweLabel> queue{lower};
  while (!queue.empty()) {
    HoweLabel current = std::move(queue.front());
    queue.pop_front();
    for (auto& next : direct_successors(current)) {
      if (next == upper) return true;
      if (next.algebra_dimension() >= target_dim) continue;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return false;
}

}  // namespace howestrata
