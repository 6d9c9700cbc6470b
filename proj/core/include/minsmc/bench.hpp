#ifndef MINSMC_BENCH_HPP_
#define MINSMC_BENCH_HPP_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "minsmc/coverage.hpp"
#include "minsmc/report.hpp"
#include "minsmc/solution.hpp"

namespace minsmc {

struct InstanceSource {
  std::string label;
  std::variant<std::string, GeneratorConfig> source;  // file path or config
};

struct BenchConfig {
  std::vector<InstanceSource> instances;
  std::vector<Algo> algorithms;
  std::vector<double> epsilons;
  std::vector<std::uint64_t> seeds;
  int exact_limit = 24;  // OPT computed when m ≤ exact_limit
  std::string output;    // base path; empty = no files
  // When false, wall_ms is emitted as 0 so reruns are byte-identical.
  bool record_wall_time = true;
};

struct BenchRow {
  std::string instance;
  Algo algorithm = Algo::kGreedy;
  double epsilon = 0.0;
  std::uint64_t seed = 0;
  std::size_t m = 0;
  std::int64_t k = 0;
  std::int64_t delta = 0;
  double cost = 0.0;
  std::optional<double> opt;
  std::optional<double> ratio;
  std::optional<double> bound;  // greedy: H·OPT; bucketed: H/(1−5ε)·OPT
  std::uint64_t rounds = 0;
  std::uint64_t queries = 0;
  double wall_ms = 0.0;
  bool fallback = false;
  bool capped = false;
  std::string error;  // row-level failure; metric fields left empty
};

struct BenchTable {
  std::vector<BenchRow> rows;

  // Fraction of bucketed-solver rows with known OPT satisfying
  // cost ≤ H(min{Δ,k})/(1−5ε)·OPT; nullopt when no such rows exist.
  std::optional<double> approx_success_fraction() const;
};

inline constexpr const char* kBenchCsvHeader =
    "instance,algorithm,epsilon,seed,m,k,delta,cost,opt,ratio,bound,rounds,"
    "queries,wall_ms,fallback,capped";

// One row per (instance × algorithm × ε × seed), in configuration order.
// An unreadable instance produces per-row error records and the run
// continues. Writes <output>.csv and <output>.json when output is set.
BenchTable run_bench(const BenchConfig& cfg);

std::string bench_to_csv(const BenchTable& table);
std::string bench_to_json(const BenchTable& table);

BenchConfig parse_bench_config(std::string_view text);

// Floats in reports carry 9 significant digits.
std::string format_float(double v);

}  // namespace minsmc

#endif  // MINSMC_BENCH_HPP_
