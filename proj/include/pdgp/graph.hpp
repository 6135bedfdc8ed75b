#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pdgp/error.hpp"
#include "pdgp/gf2.hpp"
#include "pdgp/random.hpp"
#include "pdgp/subset.hpp"

namespace pdgp {

/// Labeled simple graph on vertices 0..n-1. The adjacency matrix is kept
/// directly as a GF(2) matrix since every invariant is a function of it.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n) : adj_(n) {}
  explicit SimpleGraph(Gf2Matrix adj) : adj_(std::move(adj)) {}

  int order() const { return adj_.size(); }
  const Gf2Matrix& adjacency() const { return adj_; }
  std::uint64_t neighbors(int v) const { return adj_.row(v); }
  bool adjacent(int u, int v) const { return adj_.entry(u, v); }
  int degree(int v) const { return std::popcount(adj_.row(v)); }
  VertexSubset vertices() const { return VertexSubset::full(order()); }

  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < order(); ++v) twice += degree(v);
    return twice / 2;
  }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < order(); ++u)
      for (std::uint64_t m = adj_.row(u) >> (u + 1); m != 0; m &= m - 1)
        out.emplace_back(u, u + 1 + std::countr_zero(m));
    return out;
  }

  void flip(int u, int v) { adj_.flip(u, v); }

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  Gf2Matrix adj_;
};

inline void check_vertex(const SimpleGraph& g, int v) {
  if (v < 0 || v >= g.order())
    throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v) + " not in 0.." + std::to_string(g.order() - 1));
}

inline SimpleGraph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
  check_cap(n, kMaxVertices, "vertex count");
  if (n < 0) throw Error(ErrorKind::BadParameter, "negative vertex count");
  SimpleGraph g(n);
  for (auto [u, v] : edges) {
    check_vertex(g, u);
    check_vertex(g, v);
    if (u == v) throw Error(ErrorKind::SelfLoop, "edge " + std::to_string(u) + "-" + std::to_string(v));
    if (!g.adjacent(u, v)) g.flip(u, v);
  }
  return g;
}

/// Induced subgraph on `s`, relabeled by increasing original index.
inline SimpleGraph induced(const SimpleGraph& g, VertexSubset s) {
  return SimpleGraph(principal_submatrix(g.adjacency(), s));
}

inline SimpleGraph remove_vertices(const SimpleGraph& g, VertexSubset s) {
  return induced(g, s.complement_in(g.order()));
}

/// I'_ab: flips the adjacency of a and b.
inline SimpleGraph toggle_edge(const SimpleGraph& g, int a, int b) {
  check_vertex(g, a);
  check_vertex(g, b);
  if (a == b) throw Error(ErrorKind::SameVertex, "toggle_edge needs distinct vertices");
  SimpleGraph out = g;
  out.flip(a, b);
  return out;
}

/// Ĩ_ab: flips the adjacency between a and every neighbour of b other than a.
/// The a-b adjacency itself is never touched, so this is not symmetric in a, b.
inline SimpleGraph neighbor_toggle(const SimpleGraph& g, int a, int b) {
  check_vertex(g, a);
  check_vertex(g, b);
  if (a == b) throw Error(ErrorKind::SameVertex, "neighbor_toggle needs distinct vertices");
  SimpleGraph out = g;
  const std::uint64_t targets = g.neighbors(b) & ~(std::uint64_t{1} << a);
  for (std::uint64_t m = targets; m != 0; m &= m - 1) out.flip(a, std::countr_zero(m));
  return out;
}

inline SimpleGraph disjoint_union(const SimpleGraph& g, const SimpleGraph& h) {
  const int n = g.order() + h.order();
  check_cap(n, kMaxVertices, "vertex count of disjoint union");
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
  for (int v = 0; v < g.order(); ++v) rows[static_cast<std::size_t>(v)] = g.neighbors(v);
  for (int v = 0; v < h.order(); ++v)
    rows[static_cast<std::size_t>(g.order() + v)] = h.neighbors(v) << g.order();
  return SimpleGraph(Gf2Matrix::from_rows(rows));
}

/// Vertex sets of connected components, ordered by smallest vertex.
inline std::vector<VertexSubset> connected_components(const SimpleGraph& g) {
  std::vector<VertexSubset> out;
  std::uint64_t unseen = g.vertices().mask;
  while (unseen != 0) {
    std::uint64_t comp = unseen & -unseen;
    std::uint64_t frontier = comp;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t m = frontier; m != 0; m &= m - 1) next |= g.neighbors(std::countr_zero(m));
      frontier = next & ~comp;
      comp |= next;
    }
    out.emplace_back(comp);
    unseen &= ~comp;
  }
  return out;
}

// ---- constructors -------------------------------------------------------

inline SimpleGraph empty_graph(int n) { return from_edge_list(n, {}); }

inline SimpleGraph complete_graph(int n) {
  check_cap(n, kMaxVertices, "vertex count");
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.flip(u, v);
  return g;
}

/// Sides are 0..m-1 and m..m+n-1.
inline SimpleGraph complete_bipartite(int m, int n) {
  check_cap(m + n, kMaxVertices, "vertex count");
  SimpleGraph g(m + n);
  for (int u = 0; u < m; ++u)
    for (int v = m; v < m + n; ++v) g.flip(u, v);
  return g;
}

inline SimpleGraph path_graph(int n) {
  check_cap(n, kMaxVertices, "vertex count");
  SimpleGraph g(n);
  for (int v = 0; v + 1 < n; ++v) g.flip(v, v + 1);
  return g;
}

/// C_n for n >= 3; smaller n degrade to the path.
inline SimpleGraph cycle_graph(int n) {
  SimpleGraph g = path_graph(n);
  if (n >= 3) g.flip(0, n - 1);
  return g;
}

/// G(n, p): each pair {u < v}, visited in lexicographic order, is an edge
/// with probability p.
inline SimpleGraph random_graph(int n, double p, std::uint64_t seed) {
  check_cap(n, kMaxVertices, "vertex count");
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::BadParameter, "edge probability must lie in [0, 1]");
  Rng rng(seed);
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) g.flip(u, v);
  return g;
}

/// G(n-1, p) plus vertex n-1 joined to one uniformly chosen earlier vertex,
/// so the result always has a degree-one vertex. n >= 2.
inline SimpleGraph random_graph_with_leaf(int n, double p, std::uint64_t seed) {
  if (n < 2) throw Error(ErrorKind::BadParameter, "random_graph_with_leaf needs n >= 2");
  const SimpleGraph core = random_graph(n - 1, p, seed);
  SimpleGraph g = disjoint_union(core, SimpleGraph(1));
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  g.flip(n - 1, static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1))));
  return g;
}

// ---- exhaustive enumeration ---------------------------------------------

inline constexpr int kDefaultEnumerationOrder = 8;

/// All 2^(n(n-1)/2) labeled graphs on n vertices. Graph number k has the
/// pair with index i (lexicographic over u < v) present iff bit i of k is set.
class LabeledGraphs {
 public:
  explicit LabeledGraphs(int n, int cap = kDefaultEnumerationOrder) : n_(n) {
    check_cap(n, cap, "enumeration order");
    check_cap(n, 11, "enumeration order (pair mask width)");
    if (n < 0) throw Error(ErrorKind::BadParameter, "negative order");
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs_.emplace_back(u, v);
  }

  std::uint64_t count() const { return std::uint64_t{1} << pairs_.size(); }

  SimpleGraph at(std::uint64_t code) const {
    SimpleGraph g(n_);
    for (std::size_t i = 0; i < pairs_.size(); ++i)
      if ((code >> i) & 1U) g.flip(pairs_[i].first, pairs_[i].second);
    return g;
  }

  class iterator {
   public:
    using value_type = SimpleGraph;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    iterator(const LabeledGraphs* owner, std::uint64_t code) : owner_(owner), code_(code) {}
    SimpleGraph operator*() const { return owner_->at(code_); }
    iterator& operator++() { ++code_; return *this; }
    iterator operator++(int) { auto t = *this; ++code_; return t; }
    bool operator==(const iterator& o) const { return code_ == o.code_; }

   private:
    const LabeledGraphs* owner_ = nullptr;
    std::uint64_t code_ = 0;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, count()}; }

 private:
  int n_;
  std::vector<std::pair<int, int>> pairs_;
};

inline LabeledGraphs enumerate_labeled_graphs(int n, int cap = kDefaultEnumerationOrder) { return LabeledGraphs(n, cap); }

}  // namespace pdgp
