#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "oracles.hpp"
#include "pairclust/error.hpp"
#include "pairclust/experiment.hpp"

namespace pairclust {
namespace {

std::vector<std::size_t> sizes(std::initializer_list<std::size_t> s) { return s; }

TEST(HammingErrorBound, Examples) {
  EXPECT_EQ(theorem1_bound(sizes({3, 4, 5}), 0), Rational(0));
  EXPECT_EQ(theorem1_bound(sizes({5}), 10), Rational(24));
  EXPECT_EQ(theorem1_bound(sizes({2, 8}), 8), Rational(14));
  EXPECT_THROW(theorem1_bound(sizes({}), 1), Error);
  EXPECT_THROW(theorem1_bound(sizes({4, 2}), 1), Error);
  EXPECT_THROW(theorem1_bound(sizes({0, 2}), 1), Error);
}

TEST(HammingErrorBound, MatchesDirectEvaluation) {
  std::mt19937_64 rng(151);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::size_t> s(1 + rng() % 8);
    for (auto& x : s) x = 1 + rng() % 30;
    std::sort(s.begin(), s.end());
    const std::uint64_t ha = rng() % 500;
    EXPECT_EQ(theorem1_bound(s, ha), oracle::direct_hamming_bound(s, ha));
  }
}

TEST(HalfSplitLowerBound, Examples) {
  // d = (4, 4), sigma = 16: min(16/8 - 1, 16/8 - 1 + 1) = 1.
  EXPECT_EQ(theorem2_lower_bound(sizes({4, 4}), 16), Rational(1));
  // d = (2, 10), sigma = 3: min(3/4 - 1, 3/20 - 1 + 1/2) = -7/20.
  EXPECT_EQ(theorem2_lower_bound(sizes({2, 10}), 3), Rational(-7, 20));
}

TEST(ScalingShape, Values) {
  EXPECT_NEAR(theorem3_shape(512, 8, 1 << 12), 64.0 * 8.0 * std::log(64.0), 1e-9);
  EXPECT_GT(theorem3_shape(512, 8, 1 << 12), theorem3_shape(512, 8, 1 << 13));
  EXPECT_TRUE(std::isinf(theorem3_shape(10, 2, 0)));
}

TEST(ResistanceCutBound, Examples) {
  EXPECT_EQ(eq3_bound_balanced(100, 50, 4, 0.0), 0.0);
  EXPECT_EQ(eq3_bound(100, 50, sizes({25, 25, 25, 25}), 0.0), 0.0);
  // With a large phi_r the j = 1 term dominates and halves when m doubles.
  const double big = eq3_bound_balanced(1000, 1000, 10, 1e-3);
  const double half = eq3_bound_balanced(1000, 2000, 10, 1e-3);
  EXPECT_NEAR(half, big / 2, 1e-9 * big);
  // Balanced: (n k / m) phi_r log^3 n at j = 1.
  const double n = 1000, k = 10, m = 1000, phi_r = 1e-3;
  EXPECT_NEAR(big, n * k / m * phi_r * std::pow(std::log(n), 3), 1e-9);
  EXPECT_NEAR(eq3_bound(1000, 1000, std::vector<std::size_t>(10, 100), 1e-3), big, 1e-9);
  EXPECT_THROW(eq3_bound(10, 0, sizes({10}), 1.0), Error);
}

TEST(SacaScaling, NoSamplesGivesNMinusK) {
  SacaScalingConfig c;
  c.n = 40;
  c.k = 4;
  c.m_list = {0};
  c.trials = 3;
  for (const auto& r : run_saca_scaling(c)) EXPECT_EQ(r.er, 36u);
}

TEST(SacaScaling, ManySamplesGiveZeroError) {
  SacaScalingConfig c;
  c.n = 60;
  c.k = 3;
  c.m_list = {60 * 60 * 20};
  c.trials = 3;
  for (const auto& r : run_saca_scaling(c)) EXPECT_EQ(r.er, 0u);
}

TEST(SacaScaling, RecordsAreSortedAndReplayable) {
  SacaScalingConfig c;
  c.n = 64;
  c.k = 4;
  c.m_list = {400, 100, 800};
  c.trials = 4;
  c.seed = 7;
  c.threads = 3;
  auto records = run_saca_scaling(c);
  ASSERT_EQ(records.size(), 12u);
  for (std::size_t i = 1; i < records.size(); ++i) {
    EXPECT_LE(std::tie(records[i - 1].m, records[i - 1].seed), std::tie(records[i].m, records[i].seed));
  }
  c.threads = 1;
  auto again = run_saca_scaling(c);
  std::ostringstream a, b;
  write_csv(a, records);
  write_csv(b, again);
  EXPECT_EQ(a.str(), b.str());
  std::ostringstream ja, jb;
  write_jsonl(ja, records);
  write_jsonl(jb, again);
  EXPECT_EQ(ja.str(), jb.str());
}

TEST(SacaScaling, EachRecordReplaysFromItsSeed) {
  SacaScalingConfig c;
  c.n = 50;
  c.k = 5;
  c.m_list = {200};
  c.trials = 5;
  c.seed = 3;
  auto records = run_saca_scaling(c);
  for (std::size_t t = 0; t < 5; ++t) {
    const auto seed = trial_seed(3, 0, t);
    auto it = std::find_if(records.begin(), records.end(), [&](const auto& r) { return r.seed == seed; });
    ASSERT_NE(it, records.end());
    EXPECT_EQ(it->trial, t);
  }
}

TEST(SacaScaling, CrossCheckRecordsOracleAgreement) {
  SacaScalingConfig c;
  c.n = 40;
  c.k = 4;
  c.m_list = {50, 200};
  c.trials = 3;
  for (const auto& r : run_saca_scaling(c)) EXPECT_FALSE(r.oracle_match.has_value());
  c.cross_check = true;
  for (const auto& r : run_saca_scaling(c)) EXPECT_TRUE(r.oracle_match.value());
}

TEST(RgcaRobustness, ZeroFlipsMeansZeroError) {
  RgcaRobustnessConfig c;
  c.n = 60;
  c.sizes = {10, 20, 30};
  c.flips_list = {0};
  c.trials = 4;
  for (const auto& r : run_rgca_robustness(c)) {
    EXPECT_EQ(r.er, 0u);
    EXPECT_EQ(*r.ha, 0u);
    EXPECT_TRUE(*r.within_bound);
  }
}

TEST(RgcaRobustness, EveryTrialWithinBoundWithNonnegativeMargin) {
  RgcaRobustnessConfig c;
  c.n = 80;
  c.k = 4;
  c.flips_list = {5, 40, 160, 320};
  c.trials = 5;
  c.seed = 11;
  auto records = run_rgca_robustness(c);
  ASSERT_EQ(records.size(), 20u);
  for (const auto& r : records) {
    EXPECT_EQ(*r.ha, 2 * r.flips);
    EXPECT_EQ(*r.theorem1_bound, oracle::direct_hamming_bound(r.sizes, *r.ha));
    EXPECT_TRUE(*r.within_bound);
    EXPECT_GE(*r.margin, Rational(0));
  }
  auto summary = summarize(records);
  ASSERT_EQ(summary.size(), 4u);
  EXPECT_EQ(summary[0].key, 5u);
  for (const auto& s : summary) EXPECT_EQ(s.violations, 0u);
}

TEST(Summary, MeanAndSampleDeviation) {
  std::vector<ExperimentRecord> records(3);
  records[0].er = 1;
  records[1].er = 2;
  records[2].er = 6;
  for (auto& r : records) r.m = 10;
  auto s = summarize(records);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_DOUBLE_EQ(s[0].mean_er, 3.0);
  EXPECT_DOUBLE_EQ(s[0].stddev_er, std::sqrt(7.0));
}

TEST(Output, CsvHeaderAndTimingColumn) {
  ExperimentRecord r;
  r.mode = "saca-scaling";
  r.algorithm = "saca";
  r.n = 4;
  r.k = 2;
  r.sizes = {2, 2};
  r.m = 3;
  r.er = 1;
  r.runtime_ms = 2.5;
  std::ostringstream plain, timed;
  write_csv(plain, std::vector<ExperimentRecord>{r});
  write_csv(timed, std::vector<ExperimentRecord>{r}, OutputOptions{true});
  std::string header = plain.str().substr(0, plain.str().find('\n'));
  EXPECT_EQ(header,
            "mode,algorithm,n,k,sizes,m,flips,a,seed,trial,er,ha,phi,phi_r,theorem1_bound,theorem2_lower,"
            "theorem3_shape,within_bound,margin,oracle_match,runtime_ms");
  EXPECT_NE(plain.str(), timed.str());
  EXPECT_NE(timed.str().find(",2.5\n"), std::string::npos);
  std::ostringstream json;
  write_jsonl(json, std::vector<ExperimentRecord>{r});
  EXPECT_EQ(json.str(),
            "{\"mode\":\"saca-scaling\",\"algorithm\":\"saca\",\"n\":4,\"k\":2,\"sizes\":\"2;2\",\"m\":3,\"flips\":0,"
            "\"seed\":0,\"trial\":0,\"er\":1}\n");
}

TEST(Experiment, RejectsBadConfig) {
  SacaScalingConfig c;
  c.trials = 0;
  EXPECT_THROW(run_saca_scaling(c), Error);
  RgcaRobustnessConfig r;
  r.n = 10;
  r.sizes = {3, 3};
  EXPECT_THROW(run_rgca_robustness(r), Error);
}

}  // namespace
}  // namespace pairclust
