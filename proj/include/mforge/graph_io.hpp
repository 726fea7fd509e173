#pragma once

#include <string>
#include <string_view>

#include "mforge/graph.hpp"

namespace mforge {

/// graph6 without the optional ">>graph6<<" header. Orders up to 62 use one
/// length byte, up to 258047 the 4-byte form, beyond that the 8-byte form.
std::string to_graph6(const Graph& g);

/// Accepts an optional ">>graph6<<" header and trailing newline. Throws
/// ParseError carrying the byte offset of the first bad byte.
Graph from_graph6(std::string_view text);

/// Write-only DOT export; vertex labels are the indices.
std::string to_dot(const Graph& g, std::string_view name = "G");

} // namespace mforge
