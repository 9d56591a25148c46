#pragma once

#include <string>
#include <string_view>

#include "subcomp/graph.hpp"
#include "subcomp/reduction.hpp"

namespace subcomp {

/// Parses the edge-list format:
///
///     # comment lines and blank lines are skipped anywhere
///     n m
///     u v      (m lines)
///
/// Endpoints may appear in either order. Throws ParseError with the 1-based
/// line number on a malformed header or edge line, an endpoint >= n, a
/// self-loop, a repeated edge, or an edge count that disagrees with m.
Graph parse_graph(std::string_view text);

/// Canonical text: header, then edges as "u v" with u < v in sorted order.
std::string write_graph(const Graph& g);

/// Sidecar for a gadget instance: k', the parameters, and each block's
/// label mapped to its [begin, end) id range in numbering order.
std::string write_block_map(const ReductionInstance& inst);

}  // namespace subcomp
