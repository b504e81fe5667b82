#pragma once

#include "seqgraph/sequences.hpp"
#include "seqgraph/spectral.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace seqgraph {

struct ScanConfig {
  std::vector<SequenceSpec> specs;
  std::vector<std::size_t> sizes;
  SpectrumOptions spectrum;
  Thresholds thresholds;
  unsigned threads = 0;  // 0: SEQGRAPH_THREADS, else hardware concurrency
};

struct ScanRow {
  std::string family;
  std::string params;
  std::size_t n = 0;
  std::optional<double> lambda2_abs;
  std::optional<double> lambda2_signed;
  std::string verdict;
  double runtime_ms = 0.0;
  std::string error;  // empty on success
};

// JSON object {"specs": [{"family": ..., params...}], "sizes": [...],
// optional "method", "threads", "eps_rand", "tau_struct"}. External specs name a "bfile".
// Throws InvalidSpec.
ScanConfig parse_scan_config(std::string_view json_text);

// One row per (spec, n), specs outer. Row order is input order whatever the
// thread count; a failing row records its error and the batch continues.
std::vector<ScanRow> scan_batch(const ScanConfig& config);

// Header family,params,n,lambda2_abs,lambda2_signed,verdict,runtime_ms,error.
// runtime_ms is written as 0 when timing is off.
std::string write_scan_csv(const std::vector<ScanRow>& rows, bool timing = true);

// SEQGRAPH_THREADS when set and positive, else hardware concurrency (>= 1).
unsigned default_thread_count();

}  // namespace seqgraph
