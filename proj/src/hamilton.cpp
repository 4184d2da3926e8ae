#include "abfactor/hamilton.hpp"

#include "abfactor/error.hpp"

namespace abfactor {

namespace {

// Extends a path ending at v through the unvisited vertices. With a target,
// the last vertex must be adjacent to it (closing a cycle).
bool extend(const Graph& g, int v, VertexSet visited, int target) {
  if (visited == g.vertices()) return target < 0 || g.has_edge(v, target);
  for (VertexSet next = g.neighbors(v) & ~visited; next != 0; next &= next - 1) {
    const int w = std::countr_zero(next);
    if (extend(g, w, visited | vertex_bit(w), target)) return true;
  }
  return false;
}

}  // namespace

bool has_hamilton_path(const Graph& g) {
  if (g.order() < 1) throw InvalidArgument("Hamilton path needs n >= 1");
  if (!g.is_connected()) return false;
  for (int s = 0; s < g.order(); ++s) {
    if (extend(g, s, vertex_bit(s), -1)) return true;
  }
  return false;
}

bool has_hamilton_cycle(const Graph& g) {
  if (g.order() < 3) throw InvalidArgument("Hamilton cycle needs n >= 3");
  if (!g.is_connected() || g.min_degree() < 2) return false;
  return extend(g, 0, vertex_bit(0), 0);
}

}  // namespace abfactor
