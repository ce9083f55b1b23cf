#pragma once

#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rigi {

/// Undirected simple graph on 1..64 vertices.  Adjacency is one 64-bit row
/// per vertex, which keeps edge tests, degree sums and induced-subgraph edge
/// counts at a handful of instructions.  Graphs are plain values; every
/// operation on them is pure.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  explicit Graph(int n) : n_(n) {
    assert(n >= 1 && n <= kMaxVertices);
  }

  int vertex_count() const { return n_; }

  std::uint64_t vertex_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  bool has_edge(int u, int v) const { return adj_[u] >> v & 1; }

  void add_edge(int u, int v) {
    assert(u != v && u >= 0 && v >= 0 && u < n_ && v < n_);
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
  }

  void remove_edge(int u, int v) {
    adj_[u] &= ~(std::uint64_t{1} << v);
    adj_[v] &= ~(std::uint64_t{1} << u);
  }

  std::uint64_t neighbors(int v) const { return adj_[v]; }

  int degree(int v) const { return std::popcount(adj_[v]); }

  int edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
  }

  int min_degree() const {
    int best = kMaxVertices;
    for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
    return best;
  }

  int max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
  }

  /// Edges in lexicographic order (u, v) with u < v.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count()));
    for_each_edge([&](int u, int v) { out.emplace_back(u, v); });
    return out;
  }

  /// Visits edges in lexicographic order without allocating.
  template <typename Fn>
  void for_each_edge(Fn&& fn) const {
    for (int u = 0; u < n_; ++u) {
      std::uint64_t later =
          u + 1 >= 64 ? 0 : adj_[u] & ~((std::uint64_t{2} << u) - 1);
      while (later) {
        const int v = std::countr_zero(later);
        later &= later - 1;
        fn(u, v);
      }
    }
  }

  /// Number of edges inside the induced subgraph on `subset`.
  int edges_within(std::uint64_t subset) const {
    int total = 0;
    std::uint64_t rest = subset;
    while (rest) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      total += std::popcount(adj_[v] & subset);
    }
    return total / 2;
  }

  bool is_connected() const {
    std::uint64_t seen = 1;
    std::uint64_t frontier = 1;
    while (frontier) {
      std::uint64_t next = 0;
      std::uint64_t rest = frontier;
      while (rest) {
        const int v = std::countr_zero(rest);
        rest &= rest - 1;
        next |= adj_[v];
      }
      frontier = next & ~seen;
      seen |= frontier;
    }
    return seen == vertex_mask();
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  int n_ = 1;
  std::array<std::uint64_t, kMaxVertices> adj_{};
};

inline Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  Graph out(n);
  const std::uint64_t all = g.vertex_mask();
  for (int u = 0; u < n; ++u) {
    std::uint64_t row = ~g.neighbors(u) & all & ~(std::uint64_t{1} << u);
    while (row) {
      const int v = std::countr_zero(row);
      row &= row - 1;
      if (v > u) out.add_edge(u, v);
    }
  }
  return out;
}

/// New vertex adjacent to every existing vertex.
inline Graph cone(const Graph& g) {
  const int n = g.vertex_count();
  if (n >= Graph::kMaxVertices) throw std::length_error("cone: 64-vertex limit reached");
  Graph out(n + 1);
  g.for_each_edge([&](int u, int v) { out.add_edge(u, v); });
  for (int v = 0; v < n; ++v) out.add_edge(v, n);
  return out;
}

/// Removes a vertex and compacts the labels above it.
inline Graph without_vertex(const Graph& g, int v) {
  const int n = g.vertex_count();
  assert(n >= 2 && v >= 0 && v < n);
  Graph out(n - 1);
  g.for_each_edge([&](int a, int b) {
    if (a == v || b == v) return;
    out.add_edge(a - (a > v), b - (b > v));
  });
  return out;
}

/// Relabels vertices; new_label[v] is the label of v in the result.
inline Graph relabeled(const Graph& g, std::span<const std::uint8_t> new_label) {
  Graph out(g.vertex_count());
  g.for_each_edge([&](int u, int v) { out.add_edge(new_label[u], new_label[v]); });
  return out;
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

/// K_{m,n} with parts [0, m) and [m, m+n).
inline Graph complete_bipartite(int m, int n) {
  Graph g(m + n);
  for (int u = 0; u < m; ++u)
    for (int v = m; v < m + n; ++v) g.add_edge(u, v);
  return g;
}

}  // namespace rigi
