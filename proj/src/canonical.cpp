#include "rigi/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

#include "rigi/graph6.hpp"

namespace rigi {

namespace {

// Ordered partition of the vertex set, one bitmask per cell.
using Cells = std::vector<std::uint64_t>;

// Splits cells by neighbour counts against queued splitter sets until the
// partition is equitable.  Deterministic: the queue is FIFO and fragments of
// a split cell are ordered by ascending count.
void refine(const Graph& g, Cells& cells, std::vector<std::uint64_t> queue) {
  std::size_t head = 0;
  while (head < queue.size()) {
    const std::uint64_t splitter = queue[head++];
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
      const std::uint64_t cell = cells[ci];
      if (std::popcount(cell) < 2) continue;
      std::array<std::uint64_t, Graph::kMaxVertices + 1> bucket{};
      int min_count = Graph::kMaxVertices + 1;
      int max_count = -1;
      for (std::uint64_t rest = cell; rest;) {
        const int v = std::countr_zero(rest);
        rest &= rest - 1;
        const int c = std::popcount(g.neighbors(v) & splitter);
        bucket[c] |= std::uint64_t{1} << v;
        min_count = std::min(min_count, c);
        max_count = std::max(max_count, c);
      }
      if (min_count == max_count) continue;
      std::vector<std::uint64_t> fragments;
      for (int c = min_count; c <= max_count; ++c)
        if (bucket[c]) fragments.push_back(bucket[c]);
      cells[ci] = fragments[0];
      cells.insert(cells.begin() + static_cast<long>(ci) + 1, fragments.begin() + 1,
                   fragments.end());
      for (std::uint64_t f : fragments) queue.push_back(f);
      ci += fragments.size() - 1;
    }
  }
}

struct UnionFind {
  std::array<std::uint8_t, Graph::kMaxVertices> parent{};

  void reset(int n) {
    for (int i = 0; i < n; ++i) parent[i] = static_cast<std::uint8_t>(i);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[b] = static_cast<std::uint8_t>(a);
  }
};

struct Searcher {
  const Graph& g;
  const int n;

  std::array<std::uint64_t, Graph::kMaxVertices> best_cols{};
  VertexMap best_order{};
  bool have_best = false;
  std::vector<VertexMap> generators;

  explicit Searcher(const Graph& graph) : g(graph), n(graph.vertex_count()) {}

  // Adjacency of v toward the first `len` ordered vertices, as position bits.
  std::uint64_t column_against(int v, const std::uint8_t* order, int len) const {
    std::uint64_t col = 0;
    for (int i = 0; i < len; ++i)
      col |= static_cast<std::uint64_t>(g.has_edge(order[i], v)) << i;
    return col;
  }

  // Lexicographic comparison of adjacency columns, lowest position first.
  static int col_compare(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t diff = a ^ b;
    if (!diff) return 0;
    return (a >> std::countr_zero(diff) & 1) ? 1 : -1;
  }

  void run() {
    Cells cells{g.vertex_mask()};
    refine(g, cells, {g.vertex_mask()});
    std::vector<std::uint8_t> path;
    dfs(cells, path);
  }

  void dfs(const Cells& cells, std::vector<std::uint8_t>& path) {
    // Positions determined so far: the leading run of singleton cells.
    std::array<std::uint8_t, Graph::kMaxVertices> prefix;
    int prefix_len = 0;
    while (prefix_len < static_cast<int>(cells.size()) &&
           std::popcount(cells[prefix_len]) == 1) {
      prefix[prefix_len] = static_cast<std::uint8_t>(std::countr_zero(cells[prefix_len]));
      ++prefix_len;
    }

    int cmp = 0;
    if (have_best) {
      for (int j = 0; j < prefix_len && cmp == 0; ++j)
        cmp = col_compare(column_against(prefix[j], prefix.data(), j), best_cols[j]);
      if (cmp > 0) return;  // every completion exceeds the incumbent
    }

    if (prefix_len == n) {
      if (!have_best || cmp < 0) {
        have_best = true;
        for (int j = 0; j < n; ++j) {
          best_order[j] = prefix[j];
          best_cols[j] = column_against(prefix[j], prefix.data(), j);
        }
      } else if (cmp == 0) {
        record_automorphism(prefix.data());
      }
      return;
    }

    const int target = prefix_len;  // first non-singleton cell
    const std::uint64_t branch_cell = cells[target];

    std::vector<int> explored;
    UnionFind uf;
    std::size_t orbits_built_for = static_cast<std::size_t>(-1);
    auto rebuild_orbits = [&]() {
      uf.reset(n);
      for (const VertexMap& gen : generators) {
        bool fixes_path = true;
        for (std::uint8_t v : path) {
          if (gen[v] != v) {
            fixes_path = false;
            break;
          }
        }
        if (!fixes_path) continue;
        for (int v = 0; v < n; ++v) uf.unite(v, gen[v]);
      }
      orbits_built_for = generators.size();
    };

    for (std::uint64_t rest = branch_cell; rest;) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;

      if (!explored.empty()) {
        if (orbits_built_for != generators.size()) rebuild_orbits();
        const int rv = uf.find(v);
        bool equivalent_seen = false;
        for (int u : explored) {
          if (uf.find(u) == rv) {
            equivalent_seen = true;
            break;
          }
        }
        if (equivalent_seen) continue;
      }

      Cells child = cells;
      const std::uint64_t vbit = std::uint64_t{1} << v;
      const std::uint64_t remainder = branch_cell & ~vbit;
      child[target] = vbit;
      child.insert(child.begin() + target + 1, remainder);
      refine(g, child, {vbit, remainder});

      path.push_back(static_cast<std::uint8_t>(v));
      dfs(child, path);
      path.pop_back();
      explored.push_back(v);
    }
  }

  void record_automorphism(const std::uint8_t* leaf_order) {
    VertexMap gamma{};
    bool identity = true;
    for (int i = 0; i < n; ++i) {
      gamma[leaf_order[i]] = best_order[i];
      identity = identity && leaf_order[i] == best_order[i];
    }
    if (identity) return;
    // Two labelings producing the same string compose to an automorphism.
    for (int v = 0; v < n; ++v) {
      std::uint64_t image = 0;
      for (std::uint64_t rest = g.neighbors(v); rest;) {
        const int w = std::countr_zero(rest);
        rest &= rest - 1;
        image |= std::uint64_t{1} << gamma[w];
      }
      assert(image == g.neighbors(gamma[v]));
      (void)image;
    }
    generators.push_back(gamma);
  }
};

}  // namespace

CanonicalResult canonical_run(const Graph& g) {
  Searcher searcher(g);
  searcher.run();

  const int n = g.vertex_count();
  Graph canon(n);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (searcher.best_cols[j] >> i & 1) canon.add_edge(i, j);
    }
  }

  CanonicalResult result;
  result.form = CanonicalForm{n, to_graph6(canon)};
  result.order = searcher.best_order;
  result.generators = std::move(searcher.generators);
  return result;
}

CanonicalForm canonical_form(const Graph& g) { return canonical_run(g).form; }

}  // namespace rigi
