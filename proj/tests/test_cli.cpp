#include "seqgraph/cli.hpp"
#include "seqgraph/io.hpp"
#include "seqgraph/report.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "seqgraph");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = seqgraph::cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("seqgraph_test_cli_" + name);
}

}  // namespace

TEST(Cli, GenEkg) {
  const auto r = run({"gen", "ekg", "--n", "8"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1 2 4 6 3 9 12 8\n");
}

TEST(Cli, GenByOeisId) { EXPECT_EQ(run({"gen", "A064413", "--n", "8"}).out, "1 2 4 6 3 9 12 8\n"); }

TEST(Cli, GenBFileFormat) {
  const auto r = run({"gen", "ekg", "--n", "3", "--format", "bfile"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1 1\n2 2\n3 4\n");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"gen", "ekg", "--n", "0"}).code, 1);
  EXPECT_EQ(run({"gen", "ekg"}).code, 1);
  EXPECT_EQ(run({"gen", "nosuchfamily", "--n", "5"}).code, 1);
  EXPECT_EQ(run({"gen", "kronecker", "--alpha", "pi", "--n", "5"}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"analyze", "ekg", "--n", "50", "--eps-rand", "1", "--tau-struct", "3"}).code, 1);
  const auto r = run({"embed", "ekg", "--n", "20", "--svg", temp_file("x.svg").string(), "--dims", "4"});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, HelpAndVersion) {
  const auto help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("analyze"), std::string::npos);
  const auto version = run({"--version"});
  EXPECT_EQ(version.code, 0);
  EXPECT_NE(version.out.find(seqgraph::tool_version()), std::string::npos);
}

TEST(Cli, List) {
  const auto r = run({"list"});
  EXPECT_EQ(r.code, 0);
  for (const char* name : {"ekg", "kronecker", "comet", "deutsch", "spiral"}) {
    EXPECT_NE(r.out.find(name), std::string::npos) << name;
  }
}

TEST(Cli, ShortBFileIsUsageError) {
  // Repeated values are dropped, leaving 3 distinct terms.
  const auto path = temp_file("dup.txt");
  seqgraph::write_text_file(path, "1 1\n2 3\n3 1\n4 5\n");
  EXPECT_EQ(run({"analyze", "--bfile", path.string(), "--n", "3", "--no-timing"}).code, 0);
  const auto r = run({"analyze", "--bfile", path.string(), "--n", "4"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("InvalidSpec"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Cli, RuntimeErrorExitsTwo) {
  // Three points cannot span three dimensions.
  const auto r = run({"embed", "ekg", "--n", "3", "--dims", "3", "--svg", temp_file("small.svg").string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("DomainError"), std::string::npos);
}

TEST(Cli, AnalyzeJsonMatchesLibrary) {
  const auto r = run({"analyze", "kronecker", "--alpha", "sqrt2", "--n", "200", "--json", "-", "--no-timing"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto report = seqgraph::report_from_json(r.out);
  EXPECT_NEAR(report.lambda2_signed, -3.959, 0.01);
  EXPECT_EQ(report.n, 200u);
  EXPECT_EQ(report.verdict, "Structured");
  EXPECT_FALSE(report.timing_ms.has_value());
}

TEST(Cli, NoTimingOutputIsByteIdentical) {
  const std::vector<std::string> args{"analyze", "comet", "--c", "0.5", "--seed", "3", "--n", "300", "--json", "-",
                                      "--no-timing"};
  const auto a = run(args);
  const auto b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto text_a = run({"analyze", "gray", "--n", "256", "--no-timing"});
  EXPECT_EQ(text_a.out, run({"analyze", "gray", "--n", "256", "--no-timing"}).out);
  EXPECT_NE(text_a.out.find("lambda2_signed"), std::string::npos);
}

TEST(Cli, AnalyzeWritesGraphFiles) {
  const auto dot = temp_file("g.dot");
  const auto edges = temp_file("g.edges");
  const auto r = run({"analyze", "ekg", "--n", "7", "--dot", dot.string(), "--edges", edges.string(), "--no-timing"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto edge_text = seqgraph::read_text_file(edges);
  EXPECT_FALSE(seqgraph::parse_edge_list(edge_text).empty());
  EXPECT_EQ(seqgraph::read_text_file(dot).rfind("graph seqgraph {", 0), 0u);
  std::filesystem::remove(dot);
  std::filesystem::remove(edges);
}

TEST(Cli, EmbedWritesSvg) {
  for (const char* method : {"spectral", "spring"}) {
    const auto svg = temp_file(std::string(method) + ".svg");
    const auto r = run({"embed", "kronecker", "--alpha", "golden", "--n", "120", "--method", method, "--svg",
                        svg.string(), "--iterations", "50"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto text = seqgraph::read_text_file(svg);
    EXPECT_NE(text.find("<svg"), std::string::npos);
    EXPECT_NE(text.find("</svg>"), std::string::npos);
    std::filesystem::remove(svg);
  }
}

TEST(Cli, Scan) {
  const auto config = temp_file("scan.json");
  seqgraph::write_text_file(config, R"({"specs": [{"family": "kronecker", "alpha": "sqrt2"},
                                                   {"family": "comet", "c": 0.5, "seed": 1}],
                                         "sizes": [200], "threads": 2})");
  const auto a = run({"scan", "--config", config.string(), "--no-timing"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out.rfind("family,params,n,lambda2_abs,lambda2_signed,verdict,runtime_ms,error\nkronecker,", 0), 0u);
  EXPECT_NE(a.out.find("\ncomet,"), std::string::npos);
  EXPECT_EQ(a.out, run({"scan", "--config", config.string(), "--no-timing"}).out);
  std::filesystem::remove(config);
}
