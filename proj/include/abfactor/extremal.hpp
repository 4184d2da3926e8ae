#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abfactor/graph.hpp"
#include "abfactor/spectral.hpp"

namespace abfactor {

struct ExtremalGraph {
  std::string name;
  Graph graph;
  std::optional<std::pair<int, int>> parts;  // (|X|, |Y|) for bipartite graphs
};

/// The extremal value of a theorem. Edge theorems carry an integer edge
/// count; spectral theorems carry sqrt(integer), the largest root of a
/// biquadratic, or the spectral radius of a named graph.
struct Bound {
  enum class Kind { edges, sqrt_integer, biquadratic_root, graph_radius };

  Kind kind = Kind::edges;
  std::int64_t integer = 0;  // edges, or the radicand for sqrt_integer
  Biquadratic poly;          // for biquadratic_root
  double value = 0.0;        // numeric value in every case
};

struct ExtremalAnswer {
  std::string theorem;
  std::string case_label;
  Bound bound;
  std::vector<ExtremalGraph> extremal;
};

/// floor((an - 1)/(a + b)) * (n - floor((an - 1)/(a + b))).
std::int64_t f_ab(int n, int a, int b);
/// floor((an - 1)/(a + b)): the smaller side of the complete bipartite candidate.
int f_ab_side(int n, int a, int b);

/// Maximum edges of an n-vertex graph with no [a,b]-factor. Throws
/// ParityExcluded when a = b and n*a is odd.
ExtremalAnswer turan_factor(int n, int a, int b);
/// Maximum spectral radius of such a graph.
ExtremalAnswer spectral_turan_factor(int n, int a, int b);

/// Bipartite graphs with parts of sizes p <= q.
ExtremalAnswer bipartite_parts_turan(int p, int q, int a, int b);
ExtremalAnswer bipartite_parts_spectral(int p, int q, int a, int b);

/// n-vertex bipartite graphs; requires a <= floor(n/2).
ExtremalAnswer bipartite_order_turan(int n, int a, int b);
ExtremalAnswer bipartite_order_spectral(int n, int a, int b);

}  // namespace abfactor
