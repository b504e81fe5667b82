#include "seqgraph/error.hpp"
#include "seqgraph/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace seqgraph {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool is_integer_token(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return false;
  }
  return true;
}

BigInt parse_bigint(std::string_view s) {
  const bool negative = s.front() == '-';
  if (s.front() == '-' || s.front() == '+') s.remove_prefix(1);
  BigInt v{std::string(s)};
  return negative ? BigInt(-v) : v;
}

}  // namespace

BFile parse_bfile(std::string_view text) {
  BFile out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    const std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    if (line.empty() || line.front() == '#') continue;

    const auto tokens = split_ws(line);
    if (tokens.size() != 2 || !is_integer_token(tokens[0]) || !is_integer_token(tokens[1])) {
      throw LineError(ErrorCode::MalformedLine, line_no, "expected \"index value\"");
    }
    std::int64_t index = 0;
    std::string_view idx = tokens[0];
    if (idx.front() == '+') idx.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(idx.data(), idx.data() + idx.size(), index);
    if (ec != std::errc() || ptr != idx.data() + idx.size()) {
      throw LineError(ErrorCode::MalformedLine, line_no, "index out of range");
    }
    if (!out.entries.empty() && index <= out.entries.back().index) {
      throw LineError(ErrorCode::NonMonotoneIndex, line_no, "index " + std::to_string(index) + " not increasing");
    }
    out.entries.push_back({index, parse_bigint(tokens[1])});
  }
  return out;
}

std::string write_bfile(const BFile& b) {
  std::string out;
  for (const auto& e : b.entries) {
    out += std::to_string(e.index);
    out += ' ';
    out += e.value.str();
    out += '\n';
  }
  return out;
}

BFile read_bfile(const std::filesystem::path& path) { return parse_bfile(read_text_file(path)); }

SequenceSpec external_spec(const BFile& b, std::string path) {
  auto values = std::make_shared<std::vector<Value>>();
  values->reserve(b.entries.size());
  for (const auto& e : b.entries) values->push_back(Value::integer(e.value));
  SequenceSpec spec;
  spec.family = Family::External;
  spec.path = std::move(path);
  spec.external = std::move(values);
  return spec;
}

double parse_alpha(std::string_view text) {
  if (text == "sqrt2") return kSqrt2;
  if (text == "golden") return kGoldenRatio;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v)) {
    throw Error(ErrorCode::InvalidSpec, "alpha must be sqrt2, golden or a decimal: " + std::string(text));
  }
  return v;
}

SpiralF parse_spiral_f(std::string_view text) {
  if (text == "logcubed") return SpiralF::LogCubed;
  if (text == "tenthroot") return SpiralF::TenthRoot;
  throw Error(ErrorCode::InvalidSpec, "f must be logcubed or tenthroot: " + std::string(text));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::Io, "cannot read " + path.string());
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot open " + path.string() + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
}

}  // namespace seqgraph
