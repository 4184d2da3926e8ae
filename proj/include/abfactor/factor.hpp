#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "abfactor/graph.hpp"

namespace abfactor {

/// Spanning subgraph certifying an [a,b]-factor.
struct FactorWitness {
  std::vector<Edge> edges;
  std::vector<int> degrees;
};

/// A pair (S, T), S in X and T in Y, violating the Folkman-Fulkerson
/// inequality. With `swapped` false the violated quantity is
///   b|S| + sum_{v in T} d(v) - a|T| - e(S,T),
/// otherwise the one with the roles of S and T exchanged.
struct CriterionViolation {
  VertexSet s = 0;  // subset of X (bit x = vertex x of X)
  VertexSet t = 0;  // subset of Y (bit y = vertex y of Y)
  bool swapped = false;
  int deficiency = 0;
};

struct SearchLimits {
  std::uint64_t node_limit = 20'000'000;
};

/// Exact [a,b]-factor decision for an arbitrary graph by pruned backtracking
/// over the edges. Throws ResourceLimit if the node budget runs out.
std::optional<FactorWitness> has_factor(const Graph& g, int a, int b, SearchLimits limits = {});

/// Polynomial decision for bipartite graphs through a feasible flow with
/// lower bounds. Witness vertices use to_graph() numbering.
std::optional<FactorWitness> has_factor_bipartite_flow(const BipartiteGraph& g, int a, int b);

/// Exhaustive subset search over S in X, T in Y. Returns the most negative
/// violation (first in Gray-code order among ties) or nothing when the
/// criterion holds. Throws ResourceLimit when p + q > 22.
std::optional<CriterionViolation> ff_violation(const BipartiteGraph& g, int a, int b);

/// k-factor, with the odd n*k handshake shortcut.
std::optional<FactorWitness> has_k_factor(const Graph& g, int k, SearchLimits limits = {});

/// Independent re-validation: edges lie in g, are distinct, and every vertex
/// degree in the witness lies in [a, b].
bool is_valid_witness(const Graph& g, const FactorWitness& w, int a, int b);

}  // namespace abfactor
