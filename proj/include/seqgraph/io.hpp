#pragma once

#include "seqgraph/graph.hpp"
#include "seqgraph/sequences.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace seqgraph {

struct BFileEntry {
  std::int64_t index = 0;
  BigInt value;

  friend bool operator==(const BFileEntry&, const BFileEntry&) = default;
};

// OEIS b-file: "index value" per line, indices strictly increasing.
struct BFile {
  std::vector<BFileEntry> entries;

  friend bool operator==(const BFile&, const BFile&) = default;
};

// Skips blank lines and lines starting with '#'. Throws LineError with
// MalformedLine or NonMonotoneIndex.
BFile parse_bfile(std::string_view text);
std::string write_bfile(const BFile& b);
// Throws Io plus the parse errors.
BFile read_bfile(const std::filesystem::path& path);

// External spec over the b-file values, in file order.
SequenceSpec external_spec(const BFile& b, std::string path);

// "u v m" per distinct pair, sorted by (u, v).
std::string write_edge_list(const SequenceGraph& g);
// Throws LineError (MalformedLine).
std::vector<Edge> parse_edge_list(std::string_view text);
// Graphviz; a double edge becomes two parallel edges.
std::string write_dot(const SequenceGraph& g);

// "sqrt2", "golden" or a decimal literal. Throws InvalidSpec.
double parse_alpha(std::string_view text);
// "logcubed" or "tenthroot". Throws InvalidSpec.
SpiralF parse_spiral_f(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace seqgraph
