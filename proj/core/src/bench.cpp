#include "minsmc/bench.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "minsmc/exact.hpp"
#include "minsmc/greedy.hpp"
#include "minsmc/instance_io.hpp"
#include "minsmc/minsmc.hpp"
#include "minsmc/verify.hpp"

namespace minsmc {

namespace {

using json = nlohmann::ordered_json;

std::string opt_to_csv(const std::optional<double>& v) {
  return v ? format_float(*v) : std::string();
}

class WallClock {
 public:
  WallClock() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

std::string format_float(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::optional<double> BenchTable::approx_success_fraction() const {
  std::size_t eligible = 0;
  std::size_t ok = 0;
  for (const auto& row : rows) {
    if (!row.error.empty()) continue;
    if (row.algorithm != Algo::kMinsmcMain && row.algorithm != Algo::kMinsmcPar)
      continue;
    if (!row.bound) continue;
    ++eligible;
    if (row.cost <= *row.bound + 1e-9) ++ok;
  }
  if (eligible == 0) return std::nullopt;
  return static_cast<double>(ok) / static_cast<double>(eligible);
}

BenchTable run_bench(const BenchConfig& cfg) {
  if (cfg.instances.empty()) throw ConfigError("bench: no instances");
  if (cfg.algorithms.empty()) throw ConfigError("bench: no algorithms");
  if (cfg.seeds.empty()) throw ConfigError("bench: no seeds");
  if (cfg.epsilons.empty()) throw ConfigError("bench: no epsilons");

  BenchTable table;
  for (const auto& source : cfg.instances) {
    std::optional<CoverageInstance> inst;
    std::string load_error;
    try {
      if (std::holds_alternative<std::string>(source.source)) {
        inst = load_instance_file(std::get<std::string>(source.source));
      } else {
        inst = gen_random_coverage(std::get<GeneratorConfig>(source.source));
      }
    } catch (const Error& e) {
      load_error = e.what();
    }

    // OPT once per instance when small enough.
    std::optional<double> opt;
    if (inst && static_cast<int>(inst->m()) <= cfg.exact_limit) {
      opt = exact_solve(*inst, cfg.exact_limit).total_cost;
    }

    for (Algo algo : cfg.algorithms) {
      for (double eps : cfg.epsilons) {
        for (std::uint64_t seed : cfg.seeds) {
          BenchRow row;
          row.instance = source.label;
          row.algorithm = algo;
          row.epsilon = eps;
          row.seed = seed;
          if (!load_error.empty()) {
            row.error = load_error;
            table.rows.push_back(std::move(row));
            continue;
          }
          row.m = inst->m();
          row.k = inst->k();
          row.delta = inst->delta_max_singleton();
          try {
            Solution sol;
            RunReport rep;
            switch (algo) {
              case Algo::kGreedy: {
                QueryLedger ledger;
                WallClock clock;
                sol = greedy_solve(*inst, ledger);
                row.wall_ms = clock.ms();
                row.rounds = ledger.rounds();
                row.queries = ledger.queries();
                break;
              }
              case Algo::kExact: {
                WallClock clock;
                sol = exact_solve(*inst, cfg.exact_limit);
                row.wall_ms = clock.ms();
                break;
              }
              case Algo::kMinsmcPar: {
                auto out = minsmc_par(*inst, eps, seed);
                sol = std::move(out.solution);
                rep = std::move(out.report);
                row.wall_ms = rep.wall_ms;
                row.rounds = rep.rounds;
                row.queries = rep.queries;
                row.fallback = rep.fallback_used;
                row.capped = rep.m_prime_capped;
                break;
              }
              case Algo::kMinsmcMain: {
                auto out = minsmc_main(*inst, eps, seed);
                sol = std::move(out.solution);
                rep = std::move(out.report);
                row.wall_ms = rep.wall_ms;
                row.rounds = rep.rounds;
                row.queries = rep.queries;
                row.fallback = rep.fallback_used;
                row.capped = rep.m_prime_capped;
                break;
              }
            }
            const CheckReport check = verify_solution(*inst, sol);
            if (!check.all_ok()) {
              row.error = "verification failed";
            }
            row.cost = sol.total_cost;
            row.opt = opt;
            if (opt && *opt > 0.0) {
              row.ratio = sol.total_cost / *opt;
              const double h =
                  harmonic(std::min<std::int64_t>(row.delta, row.k));
              switch (algo) {
                case Algo::kGreedy:
                  row.bound = h * *opt;
                  break;
                case Algo::kExact:
                  row.bound = *opt;
                  break;
                default:
                  row.bound = h / (1.0 - 5.0 * eps) * *opt;
              }
            }
          } catch (const Error& e) {
            row.error = e.what();
          }
          if (!cfg.record_wall_time) row.wall_ms = 0.0;
          table.rows.push_back(std::move(row));
        }
      }
    }
  }

  if (!cfg.output.empty()) {
    std::ofstream csv(cfg.output + ".csv");
    if (!csv) throw InputError("cannot write " + cfg.output + ".csv");
    csv << bench_to_csv(table);
    std::ofstream js(cfg.output + ".json");
    if (!js) throw InputError("cannot write " + cfg.output + ".json");
    js << bench_to_json(table);
  }
  return table;
}

std::string bench_to_csv(const BenchTable& table) {
  std::string out = kBenchCsvHeader;
  out += '\n';
  for (const auto& row : table.rows) {
    out += row.instance;
    out += ',';
    out += algo_name(row.algorithm);
    out += ',';
    out += format_float(row.epsilon);
    out += ',';
    out += std::to_string(row.seed);
    out += ',';
    if (row.error.empty()) {
      out += std::to_string(row.m);
      out += ',';
      out += std::to_string(row.k);
      out += ',';
      out += std::to_string(row.delta);
      out += ',';
      out += format_float(row.cost);
      out += ',';
      out += opt_to_csv(row.opt);
      out += ',';
      out += opt_to_csv(row.ratio);
      out += ',';
      out += opt_to_csv(row.bound);
      out += ',';
      out += std::to_string(row.rounds);
      out += ',';
      out += std::to_string(row.queries);
      out += ',';
      out += format_float(row.wall_ms);
      out += ',';
      out += row.fallback ? "1" : "0";
      out += ',';
      out += row.capped ? "1" : "0";
    } else {
      out += ",,,,,,,,,,,";  // metric cells left empty on row errors
    }
    out += '\n';
  }
  return out;
}

std::string bench_to_json(const BenchTable& table) {
  json rows = json::array();
  for (const auto& row : table.rows) {
    json r;
    r["instance"] = row.instance;
    r["algorithm"] = algo_name(row.algorithm);
    r["epsilon"] = row.epsilon;
    r["seed"] = row.seed;
    if (row.error.empty()) {
      r["m"] = row.m;
      r["k"] = row.k;
      r["delta"] = row.delta;
      r["cost"] = row.cost;
      if (row.opt) r["opt"] = *row.opt;
      if (row.ratio) r["ratio"] = *row.ratio;
      if (row.bound) r["bound"] = *row.bound;
      r["rounds"] = row.rounds;
      r["queries"] = row.queries;
      r["wall_ms"] = row.wall_ms;
      r["fallback"] = row.fallback;
      r["capped"] = row.capped;
    } else {
      r["error"] = row.error;
    }
    rows.push_back(std::move(r));
  }
  json doc;
  doc["rows"] = std::move(rows);
  if (auto frac = table.approx_success_fraction()) {
    doc["approx_success_fraction"] = *frac;
  }
  return doc.dump(2) + "\n";
}

BenchConfig parse_bench_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bench config: invalid JSON: ") + e.what());
  }
  BenchConfig cfg;
  if (doc.contains("instances")) {
    for (const auto& path : doc["instances"]) {
      InstanceSource src;
      src.label = path.get<std::string>();
      src.source = src.label;
      cfg.instances.push_back(std::move(src));
    }
  }
  if (doc.contains("generators")) {
    for (const auto& jg : doc["generators"]) {
      GeneratorConfig gen;
      gen.m = jg.at("m").get<std::size_t>();
      gen.universe_size = jg.at("universe_size").get<std::size_t>();
      gen.density = jg.at("density").get<double>();
      gen.cost_low = jg.value("cost_low", 1.0);
      gen.cost_high = jg.value("cost_high", 1.0);
      gen.k_fraction = jg.value("k_fraction", 0.5);
      gen.seed = jg.value("seed", 0ULL);
      InstanceSource src;
      src.label = "gen:" + std::to_string(gen.seed) + ":" +
                  std::to_string(gen.m) + "x" +
                  std::to_string(gen.universe_size);
      src.source = gen;
      cfg.instances.push_back(std::move(src));
    }
  }
  for (const auto& name : doc.at("algorithms")) {
    const auto algo = algo_from_name(name.get<std::string>());
    if (!algo) {
      throw ConfigError("bench config: unknown algorithm " +
                        name.get<std::string>());
    }
    cfg.algorithms.push_back(*algo);
  }
  for (const auto& e : doc.at("epsilons")) {
    cfg.epsilons.push_back(e.get<double>());
  }
  for (const auto& s : doc.at("seeds")) {
    cfg.seeds.push_back(s.get<std::uint64_t>());
  }
  cfg.exact_limit = doc.value("exact_limit", 24);
  cfg.output = doc.value("output", std::string());
  cfg.record_wall_time = doc.value("record_wall_time", true);
  return cfg;
}

}  // namespace minsmc
