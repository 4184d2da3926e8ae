#pragma once

#include <vector>

#include "abfactor/graph.hpp"

namespace abfactor {

/// Largest order enumerate_graphs accepts unless told otherwise: 7, or the
/// value of ABFACTOR_MAX_ENUM_ORDER (at most 8) when that variable is set.
int default_max_order();

/// One representative per isomorphism class of n-vertex graphs, each in
/// canonical labelling, sorted by (edge count, canonical code). Throws
/// ResourceLimit when n exceeds max_order.
std::vector<Graph> enumerate_graphs(int n, int max_order = default_max_order());

/// The classes of n-vertex graphs with exactly e edges, same order as above.
std::vector<Graph> enumerate_graphs_with_edges(int n, int e);

/// Graphs whose complement has at most m edges, sorted by decreasing edge
/// count, then canonical code of the complement.
std::vector<Graph> enumerate_cocktail(int n, int m);

/// Bipartite graphs with |X| = p, |Y| = q, up to isomorphism: graph
/// isomorphism of to_graph() by default, X/Y-preserving with keep_sides.
/// Sorted by (edge count, canonical code). Requires pq <= 25.
std::vector<BipartiteGraph> enumerate_bipartite(int p, int q, bool keep_sides = false);

}  // namespace abfactor
