#include "pairclust/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <ostream>

#include "pairclust/core.hpp"
#include "pairclust/error.hpp"
#include "pairclust/gen.hpp"
#include "pairclust/metrics.hpp"
#include "pairclust/parallel.hpp"
#include "pairclust/random.hpp"
#include "pairclust/rgca.hpp"
#include "pairclust/saca.hpp"

namespace pairclust {
namespace {

void require_ascending(std::span<const std::size_t> sizes) {
  if (sizes.empty()) throw Error("bound evaluation needs at least one cluster size");
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] == 0) throw Error("cluster sizes must be positive");
    if (i > 0 && sizes[i] < sizes[i - 1]) throw Error("cluster sizes must be ascending");
  }
}

auto to_i64(std::uint64_t v) { return static_cast<std::int64_t>(v); }

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string join_sizes(std::span<const std::size_t> sizes) {
  std::string out;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(sizes[i]);
  }
  return out;
}

std::vector<std::size_t> resolve_sizes(std::size_t n, std::size_t k, const std::vector<std::size_t>& sizes) {
  if (!sizes.empty()) {
    std::size_t total = 0;
    for (auto s : sizes) total += s;
    if (total != n) throw Error("configured cluster sizes do not sum to n");
    return sizes;
  }
  if (k == 0 || k > n) throw Error("configured k must satisfy 1 <= k <= n");
  std::vector<std::size_t> out(k, n / k);
  for (std::size_t i = 0; i < n % k; ++i) ++out[i];
  return out;
}

// One row of fields as (name, rendered value, is_string).
struct Field {
  std::string name;
  std::string value;
  bool quoted = false;
  bool present = true;
};

std::vector<Field> fields_of(const ExperimentRecord& r, const OutputOptions& options) {
  auto opt_u = [](const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : std::string(); };
  auto opt_d = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string(); };
  auto opt_q = [](const std::optional<Rational>& v) { return v ? format_double(v->to_double()) : std::string(); };
  std::vector<Field> f;
  f.push_back({"mode", r.mode, true});
  f.push_back({"algorithm", r.algorithm, true});
  f.push_back({"n", std::to_string(r.n)});
  f.push_back({"k", std::to_string(r.k)});
  f.push_back({"sizes", join_sizes(r.sizes), true});
  f.push_back({"m", std::to_string(r.m)});
  f.push_back({"flips", std::to_string(r.flips)});
  f.push_back({"a", r.a ? r.a->to_string() : std::string(), true, r.a.has_value()});
  f.push_back({"seed", std::to_string(r.seed)});
  f.push_back({"trial", std::to_string(r.trial)});
  f.push_back({"er", std::to_string(r.er)});
  f.push_back({"ha", opt_u(r.ha), false, r.ha.has_value()});
  f.push_back({"phi", opt_u(r.phi), false, r.phi.has_value()});
  f.push_back({"phi_r", opt_d(r.phi_r), false, r.phi_r.has_value()});
  f.push_back({"theorem1_bound", opt_q(r.theorem1_bound), false, r.theorem1_bound.has_value()});
  f.push_back({"theorem2_lower", opt_q(r.theorem2_lower), false, r.theorem2_lower.has_value()});
  f.push_back({"theorem3_shape", opt_d(r.theorem3_shape), false, r.theorem3_shape.has_value()});
  f.push_back({"within_bound", r.within_bound ? (*r.within_bound ? "true" : "false") : "", false,
               r.within_bound.has_value()});
  f.push_back({"margin", opt_q(r.margin), false, r.margin.has_value()});
  f.push_back({"oracle_match", r.oracle_match ? (*r.oracle_match ? "true" : "false") : "", false,
               r.oracle_match.has_value()});
  f.push_back({"runtime_ms", options.include_timing ? format_double(r.runtime_ms) : std::string(), false,
               options.include_timing});
  return f;
}

}  // namespace

Rational theorem1_bound(std::span<const std::size_t> sizes_ascending, std::uint64_t ha) {
  require_ascending(sizes_ascending);
  std::optional<Rational> best;
  std::int64_t prefix = 0;
  for (std::size_t d : sizes_ascending) {
    Rational term = Rational(12 * to_i64(ha), to_i64(d)) + Rational(prefix);
    if (!best || term < *best) best = term;
    prefix += to_i64(d);
  }
  return *best;
}

Rational theorem2_lower_bound(std::span<const std::size_t> sizes_ascending, std::uint64_t sigma) {
  require_ascending(sizes_ascending);
  std::optional<Rational> best;
  std::int64_t prefix = 0;
  for (std::size_t d : sizes_ascending) {
    Rational term = Rational(to_i64(sigma), 2 * to_i64(d)) - Rational(1) + Rational(prefix, 4);
    if (!best || term < *best) best = term;
    prefix += to_i64(d);
  }
  return *best;
}

double theorem3_shape(std::size_t n, std::size_t k, std::uint64_t m) {
  if (m == 0) return std::numeric_limits<double>::infinity();
  const double n2 = static_cast<double>(n) * static_cast<double>(n);
  const double ratio = n2 / static_cast<double>(m);
  return ratio * static_cast<double>(k) * std::log(ratio);
}

double eq3_bound(std::size_t n, std::uint64_t m, std::span<const std::size_t> sizes_ascending, double phi_r) {
  require_ascending(sizes_ascending);
  if (m == 0) throw Error("eq3_bound requires m > 0");
  const double n2_over_m = static_cast<double>(n) * static_cast<double>(n) / static_cast<double>(m);
  const double log_n = std::log(static_cast<double>(n));
  const double lead = n2_over_m * phi_r * log_n * log_n * log_n;
  double best = std::numeric_limits<double>::infinity();
  double prefix = 0.0;
  for (std::size_t d : sizes_ascending) {
    best = std::min(best, lead / static_cast<double>(d) + prefix);
    prefix += static_cast<double>(d);
  }
  return best;
}

double eq3_bound_balanced(std::size_t n, std::uint64_t m, std::size_t k, double phi_r) {
  if (k == 0 || m == 0) throw Error("eq3_bound_balanced requires k > 0 and m > 0");
  const double d = static_cast<double>(n) / static_cast<double>(k);
  const double n2_over_m = static_cast<double>(n) * static_cast<double>(n) / static_cast<double>(m);
  const double log_n = std::log(static_cast<double>(n));
  const double lead = n2_over_m * phi_r * log_n * log_n * log_n;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < k; ++j) best = std::min(best, lead / d + d * static_cast<double>(j));
  return best;
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t group, std::size_t trial) {
  return derive_seed(derive_seed(seed, group), trial);
}

std::vector<ExperimentRecord> run_saca_scaling(const SacaScalingConfig& config) {
  if (config.trials == 0) throw Error("trials must be at least 1");
  const auto sizes = resolve_sizes(config.n, config.k, config.sizes);
  const std::size_t groups = config.m_list.size();
  std::vector<ExperimentRecord> records(groups * config.trials);

  parallel_for(
      records.size(),
      [&](std::size_t idx) {
        const std::size_t group = idx / config.trials;
        const std::size_t trial = idx % config.trials;
        const std::uint64_t m = config.m_list[group];
        const std::uint64_t seed = trial_seed(config.seed, group, trial);
        auto start = std::chrono::steady_clock::now();

        Clustering truth = planted_clustering(config.n, sizes, derive_seed(seed, 0));
        TrainingSet s = sample_training_set(truth, m, derive_seed(seed, 1));
        Clustering out = saca(config.n, s);

        ExperimentRecord& r = records[idx];
        r.mode = "saca-scaling";
        r.algorithm = "saca";
        r.n = config.n;
        r.k = sizes.size();
        r.sizes = truth.sorted_sizes();
        r.m = m;
        r.seed = seed;
        r.trial = trial;
        r.er = misclassification_error(out, truth);
        r.theorem3_shape = theorem3_shape(config.n, r.k, m);
        if (config.cross_check) r.oracle_match = positive_component_oracle(config.n, s) == out;
        r.runtime_ms = elapsed_ms(start);
      },
      config.threads);

  std::stable_sort(records.begin(), records.end(), [](const ExperimentRecord& x, const ExperimentRecord& y) {
    return std::tie(x.m, x.seed) < std::tie(y.m, y.seed);
  });
  return records;
}

std::vector<ExperimentRecord> run_rgca_robustness(const RgcaRobustnessConfig& config) {
  if (config.trials == 0) throw Error("trials must be at least 1");
  const auto sizes = resolve_sizes(config.n, config.k, config.sizes);
  const std::size_t groups = config.flips_list.size();
  std::vector<ExperimentRecord> records(groups * config.trials);

  parallel_for(
      records.size(),
      [&](std::size_t idx) {
        const std::size_t group = idx / config.trials;
        const std::size_t trial = idx % config.trials;
        const std::uint64_t flips = config.flips_list[group];
        const std::uint64_t seed = trial_seed(config.seed, group, trial);
        auto start = std::chrono::steady_clock::now();

        Clustering truth = planted_clustering(config.n, sizes, derive_seed(seed, 0));
        SimilarityGraph p = perturb_similarity(truth, flips, derive_seed(seed, 1));
        RgcaOptions options;
        options.threads = 1;
        Clustering out = rgca(p, config.a, options);

        ExperimentRecord& r = records[idx];
        r.mode = "rgca-robustness";
        r.algorithm = "rgca";
        r.n = config.n;
        r.k = sizes.size();
        r.sizes = truth.sorted_sizes();
        r.flips = flips;
        r.a = config.a;
        r.seed = seed;
        r.trial = trial;
        r.er = misclassification_error(out, truth);
        r.ha = hamming_distance(p, truth);
        r.theorem1_bound = theorem1_bound(r.sizes, *r.ha);
        r.margin = *r.theorem1_bound - Rational(to_i64(r.er));
        r.within_bound = *r.margin >= Rational(0);
        r.runtime_ms = elapsed_ms(start);
      },
      config.threads);

  std::stable_sort(records.begin(), records.end(), [](const ExperimentRecord& x, const ExperimentRecord& y) {
    return std::tie(x.flips, x.seed) < std::tie(y.flips, y.seed);
  });
  return records;
}

std::vector<GroupSummary> summarize(std::span<const ExperimentRecord> records) {
  std::map<std::uint64_t, std::vector<const ExperimentRecord*>> groups;
  for (const auto& r : records) groups[r.mode == "rgca-robustness" ? r.flips : r.m].push_back(&r);
  std::vector<GroupSummary> out;
  for (const auto& [key, rows] : groups) {
    GroupSummary s;
    s.key = key;
    s.trials = rows.size();
    double sum = 0.0;
    for (const auto* r : rows) sum += static_cast<double>(r->er);
    s.mean_er = sum / static_cast<double>(rows.size());
    double sq = 0.0;
    for (const auto* r : rows) {
      const double dev = static_cast<double>(r->er) - s.mean_er;
      sq += dev * dev;
      if (r->within_bound && !*r->within_bound) ++s.violations;
    }
    s.stddev_er = rows.size() > 1 ? std::sqrt(sq / static_cast<double>(rows.size() - 1)) : 0.0;
    out.push_back(s);
  }
  return out;
}

const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> columns = [] {
    std::vector<std::string> c;
    for (const auto& f : fields_of(ExperimentRecord{}, OutputOptions{true})) c.push_back(f.name);
    return c;
  }();
  return columns;
}

void write_csv(std::ostream& os, std::span<const ExperimentRecord> records, const OutputOptions& options) {
  const auto& columns = csv_columns();
  for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
  os << '\n';
  for (const auto& r : records) {
    auto fields = fields_of(r, options);
    for (std::size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << fields[i].value;
    os << '\n';
  }
}

void write_jsonl(std::ostream& os, std::span<const ExperimentRecord> records, const OutputOptions& options) {
  for (const auto& r : records) {
    auto fields = fields_of(r, options);
    os << '{';
    bool first = true;
    for (const auto& f : fields) {
      if (!f.present) continue;
      os << (first ? "" : ",") << '"' << f.name << "\":";
      first = false;
      if (f.quoted) {
        os << '"' << f.value << '"';
      } else if (f.value == "nan" || f.value == "inf" || f.value == "-inf") {
        os << "null";
      } else {
        os << f.value;
      }
    }
    os << "}\n";
  }
}

}  // namespace pairclust
