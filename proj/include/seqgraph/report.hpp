#pragma once

#include "seqgraph/graph.hpp"
#include "seqgraph/sequences.hpp"
#include "seqgraph/spectral.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace seqgraph {

std::string_view tool_version();

// Summary of one analysis run. Serialised per docs/report.schema.json.
struct AnalysisReport {
  std::string spec;
  std::size_t n = 0;
  double lambda1 = 0.0;
  double lambda2_abs = 0.0;
  double lambda2_signed = 0.0;
  double second_largest = 0.0;
  std::string verdict;
  std::string method;
  double residual = 0.0;
  std::size_t matvecs = 0;
  double cut_fraction = 0.0;  // sign split of the second-largest eigenvector
  GraphStats stats;
  std::optional<double> timing_ms;  // absent for reproducible output
  std::string version;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

// Generates, builds and analyses. Throws whatever the stages throw.
AnalysisReport analyze(const SequenceSpec& spec, std::size_t n, const SpectrumOptions& options = {},
                       bool timing = true, const Thresholds& thresholds = {});
AnalysisReport analyze(const SequenceGraph& g, std::string spec, const SpectrumOptions& options = {},
                       bool timing = true, const Thresholds& thresholds = {});

std::string to_json(const AnalysisReport& r);
// Throws InvalidSpec on missing or mistyped fields.
AnalysisReport report_from_json(std::string_view text);

}  // namespace seqgraph
