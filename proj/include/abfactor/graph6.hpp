#pragma once

#include <string>
#include <string_view>

#include "abfactor/graph.hpp"

namespace abfactor {

/// Standard graph6 text encoding (no ">>graph6<<" header, no newline).
std::string to_graph6(const Graph& g);

/// Decodes graph6; throws InvalidArgument on bad length, characters outside
/// '?'..'~', or nonzero padding bits.
Graph from_graph6(std::string_view text);

}  // namespace abfactor
