#include "dualfeas/bench.hpp"

#include "dualfeas/instances.hpp"
#include "dualfeas/solver.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace dualfeas {
namespace {

std::size_t count_lines(const std::string& text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

TEST(Summarize, HandComputed) {
  const auto flat = summarize(std::vector<int>{2, 2, 2});
  EXPECT_DOUBLE_EQ(flat.mean, 2.0);
  EXPECT_DOUBLE_EQ(flat.stddev, 0.0);
  const auto spread = summarize(std::vector<int>{1, 2, 3});
  EXPECT_DOUBLE_EQ(spread.mean, 2.0);
  EXPECT_DOUBLE_EQ(spread.stddev, 1.0);
  EXPECT_THROW(summarize(std::vector<int>{}), EmptySample);
}

TEST(Summarize, FixedSampleFixture) {
  // 500 small counts: 1 x200, 2 x150, 3 x100, 4 x50.
  std::vector<std::size_t> samples;
  for (int k = 0; k < 200; ++k) samples.push_back(1);
  for (int k = 0; k < 150; ++k) samples.push_back(2);
  for (int k = 0; k < 100; ++k) samples.push_back(3);
  for (int k = 0; k < 50; ++k) samples.push_back(4);
  const auto s = summarize(samples);
  // mean = 1000/500; sum of squared deviations = 200 + 0 + 100 + 200 = 500.
  EXPECT_NEAR(s.mean, 2.0, 1e-9);
  EXPECT_NEAR(s.stddev, std::sqrt(500.0 / 499.0), 1e-9);
}

TEST(Sizes, ParseAndFormat) {
  EXPECT_EQ(parse_size("10x20"), (Size{10, 20}));
  EXPECT_EQ(format_size({7, 5}), "7x5");
  EXPECT_THROW(parse_size("10"), std::invalid_argument);
  EXPECT_THROW(parse_size("0x3"), std::invalid_argument);
  EXPECT_THROW(parse_size("3xy"), std::invalid_argument);
  EXPECT_EQ(default_sizes().size(), 16u);
}

TEST(RunBenchmark, SingleRunEchoesIterationCount) {
  BenchConfig cfg;
  cfg.sizes = {{3, 3}};
  cfg.count = 1;
  cfg.seed = 4;
  cfg.rules = {RuleId::MinAngle};
  const auto report = run_benchmark(cfg);
  ASSERT_EQ(report.cells.size(), 1u);
  const auto& cell = report.cells[0];

  GenConfig gen;
  gen.m = 3;
  gen.n = 3;
  gen.seed = 4;
  const auto out = attain_dual_feasibility(build_dictionary<double>(random_instance(gen, 0)), RuleId::MinAngle);
  if (out.status == Status::DualFeasible) {
    ASSERT_EQ(cell.samples.size(), 1u);
    EXPECT_EQ(cell.samples[0], out.iterations);
    EXPECT_DOUBLE_EQ(cell.mean, static_cast<double>(out.iterations));
    EXPECT_DOUBLE_EQ(cell.stddev, 0.0);
  } else {
    EXPECT_TRUE(cell.samples.empty());
  }
}

TEST(RunBenchmark, PairedDesignAndExclusions) {
  BenchConfig cfg;
  cfg.sizes = {{4, 4}};
  cfg.count = 40;
  cfg.seed = 8;
  const auto report = run_benchmark(cfg);
  GenConfig gen;
  gen.m = 4;
  gen.n = 4;
  gen.seed = 8;
  for (std::size_t k = 0; k < cfg.rules.size(); ++k) {
    const auto& cell = report.cell(0, k);
    EXPECT_EQ(cell.samples.size() + cell.cap_hits + cell.dual_inconsistent, cfg.count);
    std::vector<std::size_t> expected;
    for (std::size_t i = 0; i < cfg.count; ++i) {
      const auto out = attain_dual_feasibility(build_dictionary<double>(random_instance(gen, i)), cfg.rules[k]);
      if (out.status == Status::DualFeasible) expected.push_back(out.iterations);
    }
    EXPECT_EQ(cell.samples, expected);
  }
}

TEST(RunBenchmark, ThreadsDoNotChangeTheReport) {
  BenchConfig cfg;
  cfg.sizes = {{5, 5}, {3, 7}};
  cfg.count = 30;
  cfg.seed = 21;
  const auto serial = render_report(run_benchmark(cfg), ReportFormat::Csv);
  cfg.jobs = 4;
  EXPECT_EQ(render_report(run_benchmark(cfg), ReportFormat::Csv), serial);
}

TEST(RunBenchmark, ExactAndFloatAgreeOnSmallSizes) {
  BenchConfig cfg;
  cfg.sizes = {{3, 3}};
  cfg.count = 50;
  cfg.seed = 2;
  const auto f = run_benchmark(cfg);
  cfg.mode = Arithmetic::Exact;
  const auto e = run_benchmark(cfg);
  for (std::size_t k = 0; k < cfg.rules.size(); ++k) {
    EXPECT_EQ(f.cell(0, k).samples, e.cell(0, k).samples) << rule_name(cfg.rules[k]);
  }
}

TEST(RenderReport, CsvShapes) {
  BenchConfig cfg;
  cfg.sizes = {{3, 3}};
  cfg.count = 5;
  cfg.rules = {RuleId::Bland};
  const auto one = render_report(run_benchmark(cfg), ReportFormat::Csv);
  EXPECT_EQ(count_lines(one), 2u);
  EXPECT_EQ(one.substr(0, one.find('\n')), "size,rule,count,mean,stddev,min,max,cap_hits,dual_inconsistent");

  cfg.rules.clear();
  const auto none = render_report(run_benchmark(cfg), ReportFormat::Csv);
  EXPECT_EQ(count_lines(none), 1u);
}

TEST(RenderReport, MarkdownTableShape) {
  BenchConfig cfg;
  cfg.count = 2;
  const auto text = render_report(run_benchmark(cfg), ReportFormat::Markdown);
  std::istringstream in(text);
  std::size_t table_rows = 0;
  bool in_first_table = false;
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("| Size | B' Rule | Bland's rule | Dantzig | Minimum angle |", 0) == 0) {
      in_first_table = true;
      continue;
    }
    if (!in_first_table) continue;
    if (line.empty()) break;
    if (line.rfind("|---", 0) == 0) continue;
    ++table_rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), '|'), 6) << line;
  }
  EXPECT_EQ(table_rows, 16u);
  EXPECT_NE(text.find("- seed: 1"), std::string::npos);
  EXPECT_NE(text.find("eps 1e-07"), std::string::npos);
}

TEST(RenderReport, Deterministic) {
  BenchConfig cfg;
  cfg.sizes = {{3, 3}, {5, 5}};
  cfg.count = 25;
  cfg.seed = 7;
  for (auto format : {ReportFormat::Csv, ReportFormat::Markdown}) {
    EXPECT_EQ(render_report(run_benchmark(cfg), format), render_report(run_benchmark(cfg), format));
  }
}

}  // namespace
}  // namespace dualfeas
