#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lapsep/graph.hpp"

namespace lapsep {

/// Standard compact ASCII encoding of unweighted graphs: the vertex-count
/// header followed by the upper triangle in column order, six bits per
/// printable character offset by 63.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& line);

/// One graph per line; the optional ">>graph6<<" header and blank lines are
/// skipped.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace lapsep
