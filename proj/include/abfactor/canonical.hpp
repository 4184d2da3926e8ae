#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "abfactor/graph.hpp"

namespace abfactor {

/// Byte string identifying an isomorphism class. For uncoloured graphs the
/// code is the graph6 encoding of a canonical relabelling.
struct CanonicalForm {
  std::string code;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Canonical relabelling: result[i] is the new label of vertex i.
std::vector<int> canonical_labeling(const Graph& g);
/// As above, but vertices may only be mapped onto vertices of equal colour.
std::vector<int> canonical_labeling(const Graph& g, std::span<const int> colors);

CanonicalForm canonical_form(const Graph& g);
CanonicalForm canonical_form(const Graph& g, std::span<const int> colors);

/// Part-agnostic by default (graph isomorphism of to_graph()); with
/// keep_sides the X/Y labels must be preserved.
CanonicalForm canonical_form(const BipartiteGraph& b, bool keep_sides = false);

/// The canonical representative of g's isomorphism class.
Graph canonical_graph(const Graph& g);

bool are_isomorphic(const Graph& g, const Graph& h);

}  // namespace abfactor
