#pragma once

#include "rigi/graph.hpp"

namespace rigi {

/// Size of a minimum vertex cut, computed by unit-capacity max-flow on the
/// vertex-split digraph over all non-adjacent pairs; n-1 for complete
/// graphs.  Requires n >= 2.
int vertex_connectivity(const Graph& g);

/// Threshold test: vertex connectivity >= k.  Cheaper than the exact value;
/// probes flows from k fixed source vertices, which suffices because a cut
/// smaller than k misses at least one of them.
bool is_k_connected(const Graph& g, int k);

}  // namespace rigi
