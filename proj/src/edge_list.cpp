#include "seqgraph/error.hpp"
#include "seqgraph/io.hpp"

#include <algorithm>
#include <charconv>

namespace seqgraph {

std::string write_edge_list(const SequenceGraph& g) {
  std::string out;
  for (const auto& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += ' ';
    out += std::to_string(e.multiplicity);
    out += '\n';
  }
  return out;
}

namespace {

template <class T>
bool parse_field(std::string_view& line, T& value) {
  while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), value);
  if (ec != std::errc() || ptr == line.data()) return false;
  line.remove_prefix(static_cast<std::size_t>(ptr - line.data()));
  return line.empty() || line.front() == ' ' || line.front() == '\t';
}

}  // namespace

std::vector<Edge> parse_edge_list(std::string_view text) {
  std::vector<Edge> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    Edge e;
    if (!parse_field(line, e.u) || !parse_field(line, e.v) || !parse_field(line, e.multiplicity)) {
      throw LineError(ErrorCode::MalformedLine, line_no, "expected \"u v m\"");
    }
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (!line.empty() || e.u >= e.v || e.multiplicity < 1) {
      throw LineError(ErrorCode::MalformedLine, line_no, "expected \"u v m\" with u < v, m >= 1");
    }
    out.push_back(e);
  }
  return out;
}

std::string write_dot(const SequenceGraph& g) {
  std::string out = "graph seqgraph {\n";
  for (std::size_t v = 0; v < g.size(); ++v) {
    out += "  " + std::to_string(v) + " [label=\"" + g.values()[v].to_string() + "\"];\n";
  }
  for (const auto& e : g.edges()) {
    for (int m = 0; m < e.multiplicity; ++m) {
      out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + ";\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace seqgraph
