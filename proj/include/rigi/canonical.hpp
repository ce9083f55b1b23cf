#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "rigi/graph.hpp"

namespace rigi {

/// Relabeling-invariant key: two graphs share a CanonicalForm exactly when
/// they are isomorphic.  The key is the graph6 string of the canonically
/// relabeled graph, so it is stable across runs and platforms and doubles as
/// ready-to-emit output.
struct CanonicalForm {
  int n = 0;
  std::string key;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Vertex permutation on [0, n); entries above n are unused.
using VertexMap = std::array<std::uint8_t, Graph::kMaxVertices>;

struct CanonicalResult {
  CanonicalForm form;
  /// order[i] = original vertex placed at canonical position i.
  VertexMap order{};
  /// Generators of the automorphism group, as maps v -> image.
  std::vector<VertexMap> generators;
};

/// Canonical labeling by partition refinement plus branch-and-bound over the
/// individualization tree, with discovered automorphisms pruning equivalent
/// branches.  The canonical labeling minimizes the column-major
/// upper-triangle bit string over the (isomorphism-invariant) tree of
/// refinement-compatible orderings.
CanonicalResult canonical_run(const Graph& g);

CanonicalForm canonical_form(const Graph& g);

}  // namespace rigi
