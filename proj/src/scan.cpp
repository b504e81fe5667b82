#include "seqgraph/scan.hpp"

#include "seqgraph/error.hpp"
#include "seqgraph/graph.hpp"
#include "seqgraph/io.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <thread>

namespace seqgraph {

using Json = nlohmann::json;

namespace {

SequenceSpec spec_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidSpec, "spec must be an object");
  const auto name = j.at("family").get<std::string>();
  const auto family = family_from_name(name);
  if (!family) throw Error(ErrorCode::InvalidSpec, "unknown family " + name);

  SequenceSpec spec;
  if (*family == Family::External) {
    const auto path = j.at("bfile").get<std::string>();
    spec = external_spec(read_bfile(path), path);
  }
  spec.family = *family;
  if (j.contains("base")) spec.base = j.at("base").get<int>();
  if (j.contains("alpha")) {
    const Json& a = j.at("alpha");
    spec.alpha = a.is_string() ? parse_alpha(a.get<std::string>()) : a.get<double>();
  }
  if (j.contains("c")) spec.c = j.at("c").get<double>();
  if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("f")) spec.f_choice = parse_spiral_f(j.at("f").get<std::string>());
  // Parameter ranges are checked per row by generate.
  return spec;
}

EigenMethod method_from_name(const std::string& s) {
  if (s == "auto") return EigenMethod::Auto;
  if (s == "dense") return EigenMethod::Dense;
  if (s == "iterative") return EigenMethod::Iterative;
  throw Error(ErrorCode::InvalidSpec, "method must be auto, dense or iterative");
}

ScanRow run_row(const SequenceSpec& spec, std::size_t n, const SpectrumOptions& options,
                const Thresholds& thresholds) {
  ScanRow row;
  row.family = std::string(family_info(spec.family).name);
  const std::string desc = spec.describe();
  const auto space = desc.find(' ');
  row.params = space == std::string::npos ? "" : desc.substr(space + 1);
  row.n = n;
  const auto start = std::chrono::steady_clock::now();
  try {
    const SequenceGraph g = build_graph(generate(spec, n));
    const Spectrum s = eigen_spectrum(g.adjacency(), options);
    row.lambda2_abs = s.lambda2_abs;
    row.lambda2_signed = s.lambda2_signed;
    row.verdict = std::string(to_string(classify(s.lambda2_abs, n, thresholds).cls));
  } catch (const std::exception& ex) {
    row.error = ex.what();
  }
  row.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return row;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

unsigned default_thread_count() {
  if (const char* env = std::getenv("SEQGRAPH_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

ScanConfig parse_scan_config(std::string_view json_text) {
  try {
    const Json j = Json::parse(json_text);
    ScanConfig config;
    for (const auto& s : j.at("specs")) config.specs.push_back(spec_from_json(s));
    for (const auto& n : j.at("sizes")) config.sizes.push_back(n.get<std::size_t>());
    if (config.specs.empty() || config.sizes.empty()) {
      throw Error(ErrorCode::InvalidSpec, "specs and sizes must be nonempty");
    }
    if (j.contains("method")) config.spectrum.method = method_from_name(j.at("method").get<std::string>());
    if (j.contains("threads")) config.threads = j.at("threads").get<unsigned>();
    if (j.contains("eps_rand")) config.thresholds.eps_rand = j.at("eps_rand").get<double>();
    if (j.contains("tau_struct")) config.thresholds.tau_struct = j.at("tau_struct").get<double>();
    return config;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::InvalidSpec, std::string("scan config: ") + ex.what());
  }
}

std::vector<ScanRow> scan_batch(const ScanConfig& config) {
  std::vector<std::pair<const SequenceSpec*, std::size_t>> jobs;
  for (const auto& spec : config.specs) {
    for (std::size_t n : config.sizes) jobs.emplace_back(&spec, n);
  }
  std::vector<ScanRow> rows(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      rows[i] = run_row(*jobs[i].first, jobs[i].second, config.spectrum, config.thresholds);
    }
  };
  const unsigned threads =
      std::min<std::size_t>(config.threads == 0 ? default_thread_count() : config.threads, jobs.size());
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return rows;
}

std::string write_scan_csv(const std::vector<ScanRow>& rows, bool timing) {
  std::string out = "family,params,n,lambda2_abs,lambda2_signed,verdict,runtime_ms,error\n";
  for (const auto& r : rows) {
    out += csv_field(r.family) + "," + csv_field(r.params) + "," + std::to_string(r.n) + ",";
    out += (r.lambda2_abs ? fmt(*r.lambda2_abs) : "") + ",";
    out += (r.lambda2_signed ? fmt(*r.lambda2_signed) : "") + ",";
    out += csv_field(r.verdict) + ",";
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.3f", timing ? r.runtime_ms : 0.0);
    out += std::string(ms) + "," + csv_field(r.error) + "\n";
  }
  return out;
}

}  // namespace seqgraph
