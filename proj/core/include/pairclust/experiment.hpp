#pragma once

// Seeded trial batches and closed-form bound evaluators.
//
// The evaluators use unit constants. Observed errors are only ever compared
// against exact inequalities (the RGCA upper bound, the half-split lower
// bound); the O(.) expressions are reported as shape values.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pairclust/rational.hpp"

namespace pairclust {

/// min_j ( 12 ha / d_j + sum_{i<j} d_i ) over ascending sizes d_1..d_k.
Rational theorem1_bound(std::span<const std::size_t> sizes_ascending, std::uint64_t ha);

/// min_j ( sigma / (2 d_j) - 1 + (1/4) sum_{i<j} d_i ) over ascending sizes.
Rational theorem2_lower_bound(std::span<const std::size_t> sizes_ascending, std::uint64_t sigma);

/// n^2 k log(n^2/m) / m, the shape of the SACA expected-error bound.
double theorem3_shape(std::size_t n, std::size_t k, std::uint64_t m);

/// min_j ( (1/d_j)(n^2/m) phi_r log^3 n + sum_{i<j} d_i ), natural log.
double eq3_bound(std::size_t n, std::uint64_t m, std::span<const std::size_t> sizes_ascending, double phi_r);
/// Same with k balanced clusters of size n/k.
double eq3_bound_balanced(std::size_t n, std::uint64_t m, std::size_t k, double phi_r);

struct ExperimentRecord {
  std::string mode;
  std::string algorithm;
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<std::size_t> sizes;  // ascending
  std::uint64_t m = 0;
  std::uint64_t flips = 0;
  std::optional<Rational> a;
  std::uint64_t seed = 0;  // per-trial seed; replaying with it reproduces the record
  std::size_t trial = 0;

  std::uint64_t er = 0;
  std::optional<std::uint64_t> ha;
  std::optional<std::uint64_t> phi;
  std::optional<double> phi_r;

  std::optional<Rational> theorem1_bound;
  std::optional<Rational> theorem2_lower;
  std::optional<double> theorem3_shape;
  std::optional<bool> within_bound;
  std::optional<Rational> margin;  // bound - er
  std::optional<bool> oracle_match;  // SACA output equals the breadth-first oracle

  double runtime_ms = 0.0;
};

struct SacaScalingConfig {
  std::size_t n = 512;
  std::size_t k = 8;                // balanced sizes when `sizes` is empty
  std::vector<std::size_t> sizes;   // explicit cluster sizes (sum must be n)
  std::vector<std::uint64_t> m_list;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  std::size_t threads = 0;
  bool cross_check = false;  // also run positive_component_oracle and record agreement
};

struct RgcaRobustnessConfig {
  std::size_t n = 100;
  std::size_t k = 4;
  std::vector<std::size_t> sizes;
  std::vector<std::uint64_t> flips_list;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  Rational a{2, 3};
  std::size_t threads = 0;
};

/// planted clustering -> uniform training sample of size m -> SACA -> ER.
/// Records sorted by (m, seed).
std::vector<ExperimentRecord> run_saca_scaling(const SacaScalingConfig& config);

/// planted clustering -> `flips` pair toggles -> RGCA -> ER, checked against
/// the RGCA upper bound. A violated bound is reported through
/// `within_bound`, never thrown. Records sorted by (flips, seed).
std::vector<ExperimentRecord> run_rgca_robustness(const RgcaRobustnessConfig& config);

/// Seed of trial `trial` in parameter group `group` of a batch seeded with `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::size_t group, std::size_t trial);

struct GroupSummary {
  std::uint64_t key = 0;  // m or flips
  std::size_t trials = 0;
  double mean_er = 0.0;
  double stddev_er = 0.0;
  std::size_t violations = 0;
};

/// Per-m (or per-flips) mean and sample standard deviation of ER, in
/// ascending key order. Summation follows record order.
std::vector<GroupSummary> summarize(std::span<const ExperimentRecord> records);

struct OutputOptions {
  bool include_timing = false;  // runtime_ms is the only non-replayable column
};

/// Column order of `write_csv`.
const std::vector<std::string>& csv_columns();
void write_csv(std::ostream& os, std::span<const ExperimentRecord> records, const OutputOptions& options = {});
void write_jsonl(std::ostream& os, std::span<const ExperimentRecord> records, const OutputOptions& options = {});

}  // namespace pairclust
