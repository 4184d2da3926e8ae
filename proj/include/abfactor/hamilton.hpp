#pragma once

#include "abfactor/graph.hpp"

namespace abfactor {

/// Exact backtracking decisions. Paths need n >= 1, cycles n >= 3.
bool has_hamilton_path(const Graph& g);
bool has_hamilton_cycle(const Graph& g);

}  // namespace abfactor
