#include "heatgraph/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace heatgraph {

std::string format_double(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_vertex_function_csv(std::ostream& out, const VertexFunction& f) {
  out << "vertex,value\n";
  for (const auto& [v, val] : f.entries())
    out << v << ',' << format_double(val) << '\n';
}

VertexFunction read_vertex_function_csv(std::istream& in, const std::string& source) {
  const auto fail = [&](int line, const std::string& what) -> void {
    throw std::runtime_error(source + ":" + std::to_string(line) + ": " + what);
  };

  std::string line;
  if (!std::getline(in, line)) fail(1, "empty input, expected header 'vertex,value'");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "vertex,value") fail(1, "expected header 'vertex,value'");

  VertexFunction f;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::size_t comma = line.find(',');
    if (comma == std::string::npos) fail(line_no, "expected 'vertex,value'");

    const std::string id_text = line.substr(0, comma);
    if (id_text.empty() ||
        !std::all_of(id_text.begin(), id_text.end(),
                     [](unsigned char c) { return std::isdigit(c); }))
      fail(line_no, "bad vertex id '" + id_text + "'");
    VertexId v = 0;
    const auto idres = std::from_chars(id_text.data(), id_text.data() + id_text.size(), v);
    if (idres.ec != std::errc() || idres.ptr != id_text.data() + id_text.size())
      fail(line_no, "bad vertex id '" + id_text + "'");

    const std::string value_text = line.substr(comma + 1);
    char* end = nullptr;
    const double value = std::strtod(value_text.c_str(), &end);
    if (end == value_text.c_str() || *end != '\0' || !std::isfinite(value))
      fail(line_no, "bad value '" + value_text + "'");

    if (f.entries().count(v)) fail(line_no, "duplicate vertex " + std::to_string(v));
    f.set(v, value);
  }
  return f;
}

VertexFunction load_vertex_function(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_vertex_function_csv(in, path);
}

}  // namespace heatgraph
