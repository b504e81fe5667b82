#include "seqgraph/report.hpp"

#include "seqgraph/error.hpp"

#include <json.hpp>

#include <chrono>

#ifndef SEQGRAPH_VERSION
#define SEQGRAPH_VERSION "0.0.0"
#endif

namespace seqgraph {

using Json = nlohmann::ordered_json;

std::string_view tool_version() { return SEQGRAPH_VERSION; }

AnalysisReport analyze(const SequenceGraph& g, std::string spec, const SpectrumOptions& options, bool timing,
                       const Thresholds& thresholds) {
  const auto start = std::chrono::steady_clock::now();
  const Spectrum s = eigen_spectrum(g.adjacency(), options);
  const StructureVerdict verdict = classify(s.lambda2_abs, g.size(), thresholds);

  AnalysisReport r;
  r.spec = std::move(spec);
  r.n = g.size();
  r.lambda1 = s.lambda1;
  r.lambda2_abs = s.lambda2_abs;
  r.lambda2_signed = s.lambda2_signed;
  r.second_largest = s.second_largest;
  r.verdict = std::string(to_string(verdict.cls));
  r.method = std::string(to_string(s.method));
  r.residual = s.residual;
  r.matvecs = s.matvecs;
  r.cut_fraction = sign_partition(g, s.second_largest_vector).cut_fraction();
  r.stats = graph_stats(g);
  r.version = std::string(tool_version());
  if (timing) {
    r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return r;
}

AnalysisReport analyze(const SequenceSpec& spec, std::size_t n, const SpectrumOptions& options, bool timing,
                       const Thresholds& thresholds) {
  const auto start = std::chrono::steady_clock::now();
  const SequenceGraph g = build_graph(generate(spec, n));
  AnalysisReport r = analyze(g, spec.describe(), options, timing, thresholds);
  if (timing) {
    r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return r;
}

std::string to_json(const AnalysisReport& r) {
  Json j;
  j["spec"] = r.spec;
  j["n"] = r.n;
  j["lambda1"] = r.lambda1;
  j["lambda2_abs"] = r.lambda2_abs;
  j["lambda2_signed"] = r.lambda2_signed;
  j["second_largest"] = r.second_largest;
  j["verdict"] = r.verdict;
  j["method"] = r.method;
  j["residual"] = r.residual;
  j["matvecs"] = r.matvecs;
  j["cut_fraction"] = r.cut_fraction;
  j["graph"] = {
      {"n", r.stats.n},
      {"edge_count", r.stats.edge_count},
      {"distinct_pairs", r.stats.distinct_pairs},
      {"double_edge_count", r.stats.double_edge_count},
      {"max_multiplicity", r.stats.max_multiplicity},
      {"is_connected", r.stats.is_connected},
  };
  if (r.timing_ms) j["timing_ms"] = *r.timing_ms;
  j["version"] = r.version;
  return j.dump(2) + "\n";
}

AnalysisReport report_from_json(std::string_view text) {
  try {
    const Json j = Json::parse(text);
    AnalysisReport r;
    r.spec = j.at("spec").get<std::string>();
    r.n = j.at("n").get<std::size_t>();
    r.lambda1 = j.at("lambda1").get<double>();
    r.lambda2_abs = j.at("lambda2_abs").get<double>();
    r.lambda2_signed = j.at("lambda2_signed").get<double>();
    r.second_largest = j.at("second_largest").get<double>();
    r.verdict = j.at("verdict").get<std::string>();
    r.method = j.at("method").get<std::string>();
    r.residual = j.at("residual").get<double>();
    r.matvecs = j.at("matvecs").get<std::size_t>();
    r.cut_fraction = j.at("cut_fraction").get<double>();
    const Json& g = j.at("graph");
    r.stats.n = g.at("n").get<std::size_t>();
    r.stats.edge_count = g.at("edge_count").get<std::size_t>();
    r.stats.distinct_pairs = g.at("distinct_pairs").get<std::size_t>();
    r.stats.double_edge_count = g.at("double_edge_count").get<std::size_t>();
    r.stats.max_multiplicity = g.at("max_multiplicity").get<int>();
    r.stats.is_connected = g.at("is_connected").get<bool>();
    if (j.contains("timing_ms")) r.timing_ms = j.at("timing_ms").get<double>();
    r.version = j.at("version").get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::InvalidSpec, std::string("report JSON: ") + ex.what());
  }
}

}  // namespace seqgraph
