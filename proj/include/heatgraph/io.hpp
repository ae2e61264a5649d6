#pragma once

#include <iosfwd>
#include <string>

#include "heatgraph/functions.hpp"

namespace heatgraph {

// Shortest decimal string that round-trips the value (to_chars).
std::string format_double(double v);

// CSV with the exact header "vertex,value", one row per entry, sorted by id.
void write_vertex_function_csv(std::ostream& out, const VertexFunction& f);

// Inverse of the writer.  Rejects a missing header, malformed rows,
// duplicate vertices, and non-finite values.
VertexFunction read_vertex_function_csv(std::istream& in, const std::string& source);

VertexFunction load_vertex_function(const std::string& path);

}  // namespace heatgraph
