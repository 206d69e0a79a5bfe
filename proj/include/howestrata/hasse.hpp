#pragma once

// Hasse diagram of Howe(SU(n)) and reachability over it.

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "howestrata/howe.hpp"

namespace howestrata {

/// Nodes in label order; edges (from, to) index into `nodes` and mean that
/// `to` is a direct successor of `from`.
struct HasseDiagram {
  Integer n = 0;
  std::vector<HoweLabel> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::size_t index_of(const HoweLabel& label) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), label);
    if (it == nodes.end() || !(*it == label)) throw std::out_of_range("label is not a node");
    return static_cast<std::size_t>(it - nodes.begin());
  }

  bool contains(const HoweLabel& label) const {
    return std::binary_search(nodes.begin(), nodes.end(), label);
  }

  bool has_edge(const HoweLabel& from, const HoweLabel& to) const {
    if (!contains(from) || !contains(to)) return false;
    std::pair<std::size_t, std::size_t> e{index_of(from), index_of(to)};
    return std::binary_search(edges.begin(), edges.end(), e);
  }

  std::vector<std::pair<HoweLabel, HoweLabel>> labelled_edges() const {
    std::vector<std::pair<HoweLabel, HoweLabel>> out;
    out.reserve(edges.size());
    for (auto [a, b] : edges) out.emplace_back(nodes[a], nodes[b]);
    return out;
  }
};

/// Reflexive-transitive closure of a diagram's edge relation. Immutable after
/// construction, so one instance can be shared between threads.
class Reachability {
 public:
  explicit Reachability(const HasseDiagram& diagram) : size_(diagram.nodes.size()) {
    std::vector<std::vector<std::size_t>> out(size_);
    for (auto [a, b] : diagram.edges) out[a].push_back(b);
    reach_.assign(size_ * size_, false);
    // Nodes are sorted by a linear extension, so successors have larger
    // indices and a reverse sweep sees every successor's row complete.
    for (std::size_t v = size_; v-- > 0;) {
      at(v, v) = true;
      for (std::size_t w : out[v]) {
        if (w <= v) throw std::logic_error("edge does not respect the node order");
        for (std::size_t x = w; x < size_; ++x)
          if (at(w, x)) at(v, x) = true;
      }
    }
  }

  /// True iff `to` is reachable from `from` (including from == to).
  bool reaches(std::size_t from, std::size_t to) const { return reach_[from * size_ + to]; }

  std::size_t size() const noexcept { return size_; }

 private:
  std::vector<bool>::reference at(std::size_t a, std::size_t b) { return reach_[a * size_ + b]; }

  std::size_t size_;
  std::vector<bool> reach_;
};

/// True iff no edge is implied by a directed path of length >= 2.
inline bool is_transitively_reduced(const HasseDiagram& diagram) {
  Reachability reach(diagram);
  std::vector<std::vector<std::size_t>> out(diagram.nodes.size());
  for (auto [a, b] : diagram.edges) out[a].push_back(b);
  for (auto [a, b] : diagram.edges)
    for (std::size_t w : out[a])
      if (w != b && reach.reaches(w, b)) return false;
  return true;
}

/// Hasse diagram of Howe(SU(n)): every label, with an edge to each of its
/// direct successors. Throws std::logic_error if the generated relation is
/// not a transitive reduction.
inline HasseDiagram hasse_diagram(Integer n) {
  HasseDiagram d;
  d.n = n;
  d.nodes = enumerate_labels(n);
  for (std::size_t i = 0; i < d.nodes.size(); ++i)
    for (const auto& next : direct_successors(d.nodes[i])) d.edges.emplace_back(i, d.index_of(next));
  std::sort(d.edges.begin(), d.edges.end());
  if (!is_transitively_reduced(d))
    throw std::logic_error("successor relation for n = " + std::to_string(n) + " is not a covering relation");
  return d;
}

/// Covering relation of the order induced on the nodes selected by `keep`.
/// (a, b) is an edge iff a < b in the full order and no kept node lies
/// strictly between them.
inline HasseDiagram induced_diagram(const HasseDiagram& full, const std::vector<bool>& keep) {
  if (keep.size() != full.nodes.size()) throw std::invalid_argument("induced_diagram: mask size mismatch");
  Reachability reach(full);
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < keep.size(); ++i)
    if (keep[i]) kept.push_back(i);

  HasseDiagram d;
  d.n = full.n;
  for (std::size_t i : kept) d.nodes.push_back(full.nodes[i]);
  for (std::size_t a = 0; a < kept.size(); ++a) {
    for (std::size_t b = a + 1; b < kept.size(); ++b) {
      if (!reach.reaches(kept[a], kept[b])) continue;
      bool covered = true;
      for (std::size_t c = a + 1; c < b && covered; ++c)
        if (reach.reaches(kept[a], kept[c]) && reach.reaches(kept[c], kept[b])) covered = false;
      if (covered) d.edges.emplace_back(a, b);
    }
  }
  return d;
}

}  // namespace howestrata
