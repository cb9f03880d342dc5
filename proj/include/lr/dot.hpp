#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lr/graph.hpp"

namespace lr {

/// DOT rendering. When colours are given (one per vertex) the vertices are
/// grouped and filled by colour class; a size mismatch throws.
std::string write_dot(const Graph& g, const std::vector<int>* colours = nullptr);

}  // namespace lr
