#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lr/graph.hpp"

namespace lr {

/// graph6 parse failure; offset is the byte position of the problem.
struct Graph6Error : std::runtime_error {
    Graph6Error(const std::string& what, size_t offset_)
        : std::runtime_error(what + " (byte " + std::to_string(offset_) + ")"), offset(offset_) {}
    size_t offset;
};

/// Canonical-length graph6 encoding: N(n) followed by the upper triangle of
/// the adjacency matrix in column-major bit order, 6 bits per printable byte.
std::string write_graph6(const Graph& g);

Graph parse_graph6(std::string_view text);

/// One graph per line; blank lines and ">>graph6<<" headers are skipped.
std::vector<Graph> read_graph6_lines(std::istream& in);

}  // namespace lr
