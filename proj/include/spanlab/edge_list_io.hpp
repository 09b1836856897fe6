#pragma once

#include <iosfwd>
#include <string>

#include "spanlab/graph.hpp"

namespace spanlab {

// Text edge-list format. Header: "n m directed(0|1) weighted(0|1)", then one
// edge per line: "u v [w] [label]". The w column is present exactly when the
// weighted flag is set; the label column exactly when the edge has a label.
// write(read(x)) reproduces x byte for byte.
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list(const Graph& g, const std::string& path);
Graph read_edge_list(std::istream& in);
Graph read_edge_list(const std::string& path);

}  // namespace spanlab
