#pragma once

#include <string>
#include <vector>

#include "pcdg/graph.hpp"

namespace pcdg {

// undirected DOT text; node names default to vertex indices, or the given
// labels (one per vertex)
std::string render_dot(const Graph& g, const std::vector<std::string>& labels = {});

}  // namespace pcdg
