#include "seqgraph/cli.hpp"

#include "seqgraph/embedding.hpp"
#include "seqgraph/error.hpp"
#include "seqgraph/io.hpp"
#include "seqgraph/report.hpp"
#include "seqgraph/scan.hpp"
#include "seqgraph/svg.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>

namespace seqgraph {

namespace {

// Raised for bad option values discovered after CLI11 parsing; exit 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SpecArgs {
  std::string family;
  std::string bfile;
  int base = 2;
  std::string alpha = "golden";
  double c = 0.5;
  std::uint64_t seed = 1;
  std::string f = "logcubed";
  std::size_t n = 0;

  void add_to(CLI::App* cmd, bool n_required) {
    cmd->add_option("family", family, "Family name or OEIS id (see `list`)");
    cmd->add_option("--bfile", bfile, "Read the sequence from an OEIS b-file")->check(CLI::ExistingFile);
    cmd->add_option("--base", base, "Base for signflip and vdc")->capture_default_str();
    cmd->add_option("--alpha", alpha, "Kronecker alpha: sqrt2, golden or a decimal")->capture_default_str();
    cmd->add_option("--c", c, "Comet model c")->capture_default_str();
    cmd->add_option("--seed", seed, "Comet model seed")->capture_default_str();
    cmd->add_option("--f", f, "Spiral growth function: logcubed or tenthroot")->capture_default_str();
    auto* opt = cmd->add_option("--n", n, "Number of terms")->check(CLI::PositiveNumber);
    if (n_required) opt->required();
  }

  // Returns the SequenceSpec and the resolved term count.
  std::pair<SequenceSpec, std::size_t> resolve() const {
    if (family.empty() == bfile.empty()) throw UsageError("give exactly one of <family> or --bfile");
    SequenceSpec spec;
    std::size_t count = n;
    if (!bfile.empty()) {
      spec = external_spec(read_bfile(bfile), bfile);
      if (count == 0) count = dedup(ValueList{*spec.external, false}).size();
    } else {
      const auto fam = family_from_name(family);
      if (!fam || *fam == Family::External) throw UsageError("unknown family: " + family);
      spec.family = *fam;
      if (count == 0) throw UsageError("--n is required");
    }
    try {
      spec.base = base;
      spec.alpha = parse_alpha(alpha);
      spec.c = c;
      spec.seed = seed;
      spec.f_choice = parse_spiral_f(f);
      spec.validate();
    } catch (const Error& ex) {
      throw UsageError(ex.what());
    }
    return {spec, count};
  }
};

EigenMethod parse_method(const std::string& s) {
  if (s == "dense") return EigenMethod::Dense;
  if (s == "iterative") return EigenMethod::Iterative;
  return EigenMethod::Auto;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral analysis of two-cycle sequence graphs", "seqgraph"};
  app.set_version_flag("--version", std::string(tool_version()));
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "List the sequence families");

  auto* gen = app.add_subcommand("gen", "Print the first n terms of a family");
  SpecArgs gen_args;
  gen_args.add_to(gen, true);
  std::string gen_out;
  std::string gen_format = "terms";
  gen->add_option("--out", gen_out, "Write to FILE instead of standard output");
  gen->add_option("--format", gen_format, "terms (space separated) or bfile")
      ->check(CLI::IsMember({"terms", "bfile"}))
      ->capture_default_str();

  auto* analyze_cmd = app.add_subcommand("analyze", "Build the graph and report its second eigenvalue");
  SpecArgs an_args;
  an_args.add_to(analyze_cmd, false);
  std::string an_json, an_dot, an_edges;
  std::string an_method = "auto";
  bool an_no_timing = false;
  Thresholds an_thresholds;
  analyze_cmd->add_option("--json", an_json, "Write the JSON report to FILE ('-' for standard output)");
  analyze_cmd->add_option("--dot", an_dot, "Write the graph in Graphviz DOT format");
  analyze_cmd->add_option("--edges", an_edges, "Write the edge list \"u v m\"");
  analyze_cmd->add_option("--eigen", an_method, "Eigensolver: auto, dense or iterative")
      ->check(CLI::IsMember({"auto", "dense", "iterative"}))
      ->capture_default_str();
  analyze_cmd->add_flag("--no-timing", an_no_timing, "Omit timings so output is reproducible");
  analyze_cmd->add_option("--eps-rand", an_thresholds.eps_rand, "RandomLike when |lambda2| <= sqrt(12) + eps")
      ->capture_default_str();
  analyze_cmd->add_option("--tau-struct", an_thresholds.tau_struct, "Structured when |lambda2| >= tau")
      ->capture_default_str();

  auto* embed = app.add_subcommand("embed", "Lay out the graph and render it as SVG");
  SpecArgs em_args;
  em_args.add_to(embed, false);
  std::string em_method = "spectral";
  std::string em_svg;
  int em_dims = 2;
  std::uint64_t em_layout_seed = 1;
  std::size_t em_iterations = 500;
  bool em_labels = false;
  embed->add_option("--method", em_method, "spectral or spring")
      ->check(CLI::IsMember({"spectral", "spring"}))
      ->capture_default_str();
  embed->add_option("--dims", em_dims, "2 or 3")->check(CLI::IsMember({2, 3}))->capture_default_str();
  embed->add_option("--svg", em_svg, "Output SVG file")->required();
  embed->add_option("--layout-seed", em_layout_seed, "Spring layout seed")->capture_default_str();
  embed->add_option("--iterations", em_iterations, "Spring layout iterations")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  embed->add_flag("--labels", em_labels, "Print vertex values next to the vertices");

  auto* scan = app.add_subcommand("scan", "Analyse every (family, n) pair of a JSON config, CSV out");
  std::string sc_config, sc_out = "-";
  bool sc_no_timing = false;
  scan->add_option("--config", sc_config, "JSON config file")->required()->check(CLI::ExistingFile);
  scan->add_option("--out", sc_out, "CSV output file ('-' for standard output)")->capture_default_str();
  scan->add_flag("--no-timing", sc_no_timing, "Write runtime_ms as 0 so output is reproducible");

  CLI::App* active = &app;
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << tool_version() << "\n";
    return 0;
  } catch (const CLI::ParseError& ex) {
    const auto subs = app.get_subcommands();
    err << "error: " << ex.what() << "\n\n" << (subs.empty() ? app.help() : subs.front()->help());
    return 1;
  }
  if (!app.get_subcommands().empty()) active = app.get_subcommands().front();

  try {
    if (list->parsed()) {
      for (const auto& info : family_catalog()) {
        char line[160];
        std::snprintf(line, sizeof line, "%-18s %-8s %s%s\n", std::string(info.name).c_str(),
                      info.oeis.empty() ? "-" : std::string(info.oeis).c_str(), std::string(info.summary).c_str(),
                      info.dedup ? " (deduplicated)" : "");
        out << line;
      }
    } else if (gen->parsed()) {
      const auto [spec, count] = gen_args.resolve();
      const ValueList terms = generate(spec, count);
      std::string text;
      if (gen_format == "bfile") {
        BFile b;
        for (std::size_t i = 0; i < terms.size(); ++i) {
          if (!terms[i].is_int()) throw Error(ErrorCode::DomainError, "b-file output needs integer terms");
          b.entries.push_back({static_cast<std::int64_t>(i + 1), terms[i].as_int()});
        }
        text = write_bfile(b);
      } else {
        for (std::size_t i = 0; i < terms.size(); ++i) {
          if (i) text += ' ';
          text += terms[i].to_string();
        }
        text += '\n';
      }
      emit(gen_out.empty() ? "-" : gen_out, text, out);
    } else if (analyze_cmd->parsed()) {
      const auto [spec, count] = an_args.resolve();
      if (!(kRamanujanBound + an_thresholds.eps_rand < an_thresholds.tau_struct)) {
        throw UsageError("need sqrt(12) + eps-rand < tau-struct");
      }
      SpectrumOptions opts;
      opts.method = parse_method(an_method);
      const SequenceGraph g = build_graph(generate(spec, count));
      const AnalysisReport r = analyze(g, spec.describe(), opts, !an_no_timing, an_thresholds);
      if (r.n >= 50 && r.lambda2_abs < kRamanujanBound - alon_boppana_slack(r.n)) {
        err << "warning: |lambda2| = " << fmt(r.lambda2_abs) << " is below the Alon-Boppana tolerance sqrt(12) - "
            << fmt(alon_boppana_slack(r.n)) << "\n";
      }
      if (!an_dot.empty()) emit(an_dot, write_dot(g), out);
      if (!an_edges.empty()) emit(an_edges, write_edge_list(g), out);
      if (!an_json.empty()) emit(an_json, to_json(r), out);
      if (an_json != "-") {
        out << "spec            " << r.spec << "\n"
            << "n               " << r.n << "\n"
            << "lambda1         " << fmt(r.lambda1) << "\n"
            << "lambda2_abs     " << fmt(r.lambda2_abs) << "\n"
            << "lambda2_signed  " << fmt(r.lambda2_signed) << "\n"
            << "second_largest  " << fmt(r.second_largest) << "\n"
            << "verdict         " << r.verdict << "\n"
            << "method          " << r.method << "\n"
            << "residual        " << fmt(r.residual) << "\n"
            << "double_edges    " << r.stats.double_edge_count << "\n"
            << "cut_fraction    " << fmt(r.cut_fraction) << "\n";
        if (r.timing_ms) out << "timing_ms       " << fmt(*r.timing_ms) << "\n";
      }
    } else if (embed->parsed()) {
      const auto [spec, count] = em_args.resolve();
      const SequenceGraph g = build_graph(generate(spec, count));
      Embedding e;
      if (em_method == "spring") {
        SpringOptions so;
        so.dims = em_dims;
        so.seed = em_layout_seed;
        so.iterations = em_iterations;
        so.threads = default_thread_count();
        e = spring_layout(g, so);
      } else {
        e = spectral_embedding(g, em_dims);
      }
      SvgStyle style;
      style.labels = em_labels;
      emit(em_svg, render_svg(g, e, style), out);
      out << "wrote " << em_svg << " (" << g.size() << " vertices, " << to_string(e.method) << ", " << em_dims
          << "D)\n";
    } else if (scan->parsed()) {
      const ScanConfig config = parse_scan_config(read_text_file(sc_config));
      emit(sc_out, write_scan_csv(scan_batch(config), !sc_no_timing), out);
    }
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << "\n\n" << active->help();
    return 1;
  } catch (const Error& ex) {
    if (ex.code() == ErrorCode::InvalidSpec) {
      err << "error: " << ex.what() << "\n\n" << active->help();
      return 1;
    }
    err << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}

int cli_main(int argc, const char* const* argv) { return cli_main(argc, argv, std::cout, std::cerr); }

}  // namespace seqgraph
