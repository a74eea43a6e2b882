#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bridgelab/graph.hpp"

namespace bridgelab {

// Standard graph6 text form (bit-exact): short size byte for n <= 62,
// '~'-prefixed long form above that. One graph per line in streams.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& line);

void write_graph6_stream(std::ostream& os, const std::vector<Graph>& graphs);
std::vector<Graph> read_graph6_stream(std::istream& is);

// Human-readable fixture form {"n": int, "edges": [[u,v],...]}, 1-based.
std::string to_json_graph(const Graph& g);
Graph from_json_graph(const std::string& text);

}  // namespace bridgelab
