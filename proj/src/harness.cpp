#include "jss/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "jss/exact.hpp"
#include "jss/rng.hpp"

namespace jss {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string fmt(const char* format, ...) {
  va_list args;
  va_start(args, format);
  char buf[256];
  std::vsnprintf(buf, sizeof(buf), format, args);
  va_end(args);
  return buf;
}

// Runs body(0..count-1) on `parallelism` threads. Item order is
// unspecified; bodies must write only to their own slots. The first
// exception is rethrown after all workers stop.
void parallel_for(int count, int parallelism, const std::function<void(int)>& body) {
  const int threads = std::min(std::max(parallelism, 1), count);
  if (count <= 0) return;
  if (threads == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::mutex err_mu;
  std::exception_ptr err;
  auto worker = [&] {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

struct Cell {
  Algo algo;
  Rule rule;         // greedy and pilot; ignored for mcs
  long long budget;  // 0 for greedy
  std::string label;
};

std::vector<Cell> build_cells(const ExperimentConfig& cfg) {
  std::vector<Cell> cells;
  for (Algo algo : cfg.algorithms) {
    switch (algo) {
      case Algo::kGreedy:
        for (Rule r : cfg.rules) cells.push_back({algo, r, 0, "greedy(" + rule_name(r) + ")"});
        break;
      case Algo::kPilot:
        for (Rule r : cfg.rules) {
          for (long long b : cfg.budgets) {
            cells.push_back({algo, r, b, "pilot(" + rule_name(r) + "," + std::to_string(b) + ")"});
          }
        }
        break;
      case Algo::kMcs:
        for (long long b : cfg.budgets) {
          cells.push_back({algo, Rule::kRandom, b, "mcs(" + std::to_string(b) + ")"});
        }
        break;
    }
  }
  return cells;
}

struct RunRow {
  std::uint64_t seed = 0;
  int makespan = 0;
  long long rollouts = 0;
  double wall_ms = 0.0;
};

struct SizeData {
  std::string label;
  std::vector<int> refs;        // per instance
  bool exact_norm = false;
  std::string annotation;
  std::vector<RunRow> runs;  // [(cell * K + instance) * repeats + repeat]
};

std::string size_label(int n, int m) { return std::to_string(n) + "x" + std::to_string(m); }

// Per-instance branch-and-bound budget when the config does not pin one.
// Returns < 0 when exact normalization should not be attempted at all.
double auto_exact_limit(int ops) {
  if (ops <= 36) return 60.0;
  if (ops <= 100) return 600.0;
  return -1.0;
}

template <typename T>
bool has_duplicates(const std::vector<T>& xs) {
  for (size_t i = 0; i < xs.size(); ++i) {
    for (size_t k = i + 1; k < xs.size(); ++k) {
      if (xs[i] == xs[k]) return true;
    }
  }
  return false;
}

void validate(const ExperimentConfig& cfg) {
  auto fail = [](const std::string& msg) { throw std::runtime_error("config: " + msg); };
  if (cfg.sizes.empty()) fail("sizes must be non-empty");
  for (auto [n, m] : cfg.sizes) {
    if (n < 1 || m < 1) fail("sizes entries need jobs >= 1 and machines >= 1");
  }
  if (has_duplicates(cfg.sizes)) fail("duplicate sizes");
  if (cfg.instances_per_size < 1) fail("instances_per_size must be >= 1");
  if (cfg.repeats < 1) fail("repeats must be >= 1");
  if (cfg.p_min < 1 || cfg.p_max < cfg.p_min) fail("need 1 <= p_min <= p_max");
  if (!(cfg.epsilon >= 0.0 && cfg.epsilon <= 1.0)) fail("epsilon must be in [0, 1]");
  if (cfg.algorithms.empty()) fail("algorithms must be non-empty");
  if (has_duplicates(cfg.algorithms)) fail("duplicate algorithms");
  if (has_duplicates(cfg.rules)) fail("duplicate rules");
  if (has_duplicates(cfg.budgets)) fail("duplicate budgets");
  const bool wants_rules =
      std::count(cfg.algorithms.begin(), cfg.algorithms.end(), Algo::kGreedy) ||
      std::count(cfg.algorithms.begin(), cfg.algorithms.end(), Algo::kPilot);
  const bool wants_budgets =
      std::count(cfg.algorithms.begin(), cfg.algorithms.end(), Algo::kPilot) ||
      std::count(cfg.algorithms.begin(), cfg.algorithms.end(), Algo::kMcs);
  if (wants_rules && cfg.rules.empty()) fail("rules must be non-empty for greedy/pilot");
  if (wants_budgets && cfg.budgets.empty()) fail("budgets must be non-empty for pilot/mcs");
  for (long long b : cfg.budgets) {
    if (b < 1) fail("budgets must be >= 1");
  }
  if (cfg.reference_budget < 1) fail("reference_budget must be >= 1");
}

ordered_json config_json(const ExperimentConfig& cfg) {
  ordered_json j;
  auto sizes = ordered_json::array();
  for (auto [n, m] : cfg.sizes) sizes.push_back({n, m});
  j["sizes"] = std::move(sizes);
  j["instances_per_size"] = cfg.instances_per_size;
  j["budgets"] = cfg.budgets;
  auto algos = ordered_json::array();
  for (Algo a : cfg.algorithms) algos.push_back(algo_name(a));
  j["algorithms"] = std::move(algos);
  auto rules = ordered_json::array();
  for (Rule r : cfg.rules) rules.push_back(rule_name(r));
  j["rules"] = std::move(rules);
  j["epsilon"] = cfg.epsilon;
  j["master_seed"] = cfg.master_seed;
  j["normalization"] = cfg.normalization == Normalization::kExact ? "exact" : "best_found";
  j["repeats"] = cfg.repeats;
  j["p_min"] = cfg.p_min;
  j["p_max"] = cfg.p_max;
  j["reference_budget"] = cfg.reference_budget;
  if (cfg.exact_time_limit_s < 0) {
    j["exact_time_limit_s"] = nullptr;
  } else {
    j["exact_time_limit_s"] = cfg.exact_time_limit_s;
  }
  return j;
}

}  // namespace

ExperimentConfig config_from_json(const std::string& text) {
  ExperimentConfig cfg;
  try {
    const json j = json::parse(text);
    cfg.sizes.clear();
    for (const auto& s : j.at("sizes")) {
      cfg.sizes.emplace_back(s.at(0).get<int>(), s.at(1).get<int>());
    }
    if (j.contains("instances_per_size")) cfg.instances_per_size = j["instances_per_size"].get<int>();
    if (j.contains("budgets")) cfg.budgets = j["budgets"].get<std::vector<long long>>();
    if (j.contains("algorithms")) {
      cfg.algorithms.clear();
      for (const auto& a : j["algorithms"]) cfg.algorithms.push_back(parse_algo(a.get<std::string>()));
    }
    if (j.contains("rules")) {
      cfg.rules.clear();
      for (const auto& r : j["rules"]) cfg.rules.push_back(parse_rule(r.get<std::string>()));
    }
    if (j.contains("epsilon")) cfg.epsilon = j["epsilon"].get<double>();
    if (j.contains("master_seed")) cfg.master_seed = j["master_seed"].get<std::uint64_t>();
    if (j.contains("normalization")) {
      const std::string mode = j["normalization"].get<std::string>();
      if (mode == "exact") {
        cfg.normalization = Normalization::kExact;
      } else if (mode == "best_found") {
        cfg.normalization = Normalization::kBestFound;
      } else {
        throw std::runtime_error("config: normalization must be 'exact' or 'best_found'");
      }
    }
    if (j.contains("repeats")) cfg.repeats = j["repeats"].get<int>();
    if (j.contains("p_min")) cfg.p_min = j["p_min"].get<int>();
    if (j.contains("p_max")) cfg.p_max = j["p_max"].get<int>();
    if (j.contains("reference_budget")) cfg.reference_budget = j["reference_budget"].get<long long>();
    if (j.contains("exact_time_limit_s") && !j["exact_time_limit_s"].is_null()) {
      cfg.exact_time_limit_s = j["exact_time_limit_s"].get<double>();
    }
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("config: ") + e.what());
  }
  validate(cfg);
  return cfg;
}

std::string config_to_json(const ExperimentConfig& cfg) { return config_json(cfg).dump(2); }

Stats summarize(const std::vector<double>& values) {
  if (values.empty()) throw std::invalid_argument("summarize: empty list");
  Stats s;
  s.count = static_cast<int>(values.size());
  std::vector<double> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  s.min = sorted.front();
  s.max = sorted.back();
  const size_t mid = sorted.size() / 2;
  s.median = sorted.size() % 2 == 1 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / s.count;
  if (s.count > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.stdev = std::sqrt(ss / (s.count - 1));
  }
  for (double v : values) {
    if (v <= 1.0 + 1e-9) ++s.count_opt;
  }
  return s;
}

double normalized_makespan(int z, int z_ref) {
  if (z_ref < 1) throw std::invalid_argument("normalized_makespan: reference must be >= 1");
  return static_cast<double>(z) / static_cast<double>(z_ref);
}

ExperimentReport run_experiment(const ExperimentConfig& cfg, int parallelism) {
  validate(cfg);
  const std::vector<Cell> cells = build_cells(cfg);
  const int K = cfg.instances_per_size;
  const int R = cfg.repeats;

  std::vector<SizeData> data(cfg.sizes.size());
  for (size_t si = 0; si < cfg.sizes.size(); ++si) {
    const auto [n, m] = cfg.sizes[si];
    SizeData& sd = data[si];
    sd.label = size_label(n, m);

    std::vector<Instance> instances;
    instances.reserve(K);
    for (int i = 0; i < K; ++i) {
      const auto tag = "inst " + sd.label + " " + std::to_string(i);
      instances.push_back(generate_instance(n, m, cfg.p_min, cfg.p_max, derive_seed(cfg.master_seed, tag)));
    }

    // Normalization references. Exact mode needs every instance proven;
    // one unproven instance flips the whole size to best_found so the
    // column stays comparable within the size.
    bool attempt_exact = cfg.normalization == Normalization::kExact;
    double limit = cfg.exact_time_limit_s;
    if (attempt_exact && limit < 0) {
      limit = auto_exact_limit(n * m);
      if (limit < 0) attempt_exact = false;
    }

    sd.refs.assign(K, 0);
    int unproven = 0;
    if (attempt_exact) {
      std::vector<int> optima(K, 0);
      std::vector<char> proven(K, 0);
      parallel_for(K, parallelism, [&](int i) {
        ExactResult r = branch_and_bound(instances[i], limit);
        optima[i] = r.makespan;
        proven[i] = r.proven_optimal ? 1 : 0;
      });
      unproven = K - static_cast<int>(std::count(proven.begin(), proven.end(), 1));
      if (unproven == 0) {
        sd.exact_norm = true;
        sd.refs = optima;
        sd.annotation = sd.label + ": exact normalization, optimum proven for all " +
                        std::to_string(K) + " instances (limit " + fmt("%g", limit) + " s each)";
      }
    }

    std::vector<int> ref_runs;
    if (!sd.exact_norm) {
      ref_runs.assign(K, 0);
      parallel_for(K, parallelism, [&](int i) {
        SolverConfig sc;
        sc.algo = Algo::kMcs;
        sc.budget = cfg.reference_budget;
        sc.epsilon = cfg.epsilon;
        sc.seed = derive_seed(cfg.master_seed, "ref " + sd.label + " " + std::to_string(i));
        ref_runs[i] = solve(instances[i], sc).solution.makespan;
      });
      const std::string how = "best_found normalization (grid minimum plus one mcs reference run, budget " +
                              std::to_string(cfg.reference_budget) + ")";
      if (cfg.normalization == Normalization::kExact) {
        if (attempt_exact) {
          sd.annotation = sd.label + ": REQUESTED exact normalization but the optimum was not proven for " +
                          std::to_string(unproven) + " of " + std::to_string(K) +
                          " instances; fell back to " + how;
        } else {
          sd.annotation = sd.label + ": REQUESTED exact normalization but " + sd.label +
                          " is beyond the exact size limit; fell back to " + how;
        }
      } else {
        sd.annotation = sd.label + ": " + how;
      }
    }

    // The grid itself.
    const int ncells = static_cast<int>(cells.size());
    sd.runs.assign(static_cast<size_t>(ncells) * K * R, RunRow{});
    parallel_for(ncells * K * R, parallelism, [&](int t) {
      const int c = t / (K * R);
      const int i = (t / R) % K;
      const int rep = t % R;
      const Cell& cell = cells[c];
      SolverConfig sc;
      sc.algo = cell.algo;
      sc.rule = cell.rule;
      sc.budget = cell.budget > 0 ? cell.budget : 1;
      sc.epsilon = cfg.epsilon;
      sc.seed = derive_seed(cfg.master_seed, "run " + sd.label + " " + cell.label + " " +
                                                 std::to_string(i) + " " + std::to_string(rep));
      RunResult rr = solve(instances[i], sc);
      RunRow& row = sd.runs[t];
      row.seed = sc.seed;
      row.makespan = rr.solution.makespan;
      row.rollouts = rr.rollouts;
      row.wall_ms = rr.wall_ms;
    });

    if (!sd.exact_norm) {
      for (int i = 0; i < K; ++i) {
        int best = ref_runs[i];
        for (int c = 0; c < ncells; ++c) {
          for (int rep = 0; rep < R; ++rep) {
            best = std::min(best, sd.runs[(static_cast<size_t>(c) * K + i) * R + rep].makespan);
          }
        }
        sd.refs[i] = best;
      }
    }
  }

  // Deterministic reduce: fixed iteration order everywhere below.
  ExperimentReport rep;
  std::string raw = "size,instance,algorithm,rule,budget,epsilon,seed,makespan,reference,normalized,rollouts\n";
  std::string timing = "size,instance,algorithm,rule,budget,epsilon,seed,wall_ms,rollouts\n";
  for (size_t si = 0; si < cfg.sizes.size(); ++si) {
    const SizeData& sd = data[si];
    rep.annotations.push_back(sd.annotation);
    for (size_t c = 0; c < cells.size(); ++c) {
      const Cell& cell = cells[c];
      const std::string rule_col = cell.algo == Algo::kMcs ? "" : rule_name(cell.rule);
      const std::string budget_col = cell.algo == Algo::kGreedy ? "" : std::to_string(cell.budget);
      const std::string eps_col = cell.algo == Algo::kMcs ? fmt("%g", cfg.epsilon) : "";
      std::vector<double> values;
      values.reserve(static_cast<size_t>(K) * R);
      for (int i = 0; i < K; ++i) {
        for (int r = 0; r < R; ++r) {
          const RunRow& row = sd.runs[(c * K + i) * static_cast<size_t>(R) + r];
          if (sd.exact_norm && row.makespan < sd.refs[i]) {
            throw std::runtime_error("run " + sd.label + " " + cell.label + " instance " +
                                     std::to_string(i) + " beat the proven optimum (" +
                                     std::to_string(row.makespan) + " < " + std::to_string(sd.refs[i]) +
                                     "): oracle or validator bug");
          }
          const double norm = normalized_makespan(row.makespan, sd.refs[i]);
          values.push_back(norm);
          const std::string prefix = sd.label + "," + std::to_string(i) + "," + algo_name(cell.algo) +
                                     "," + rule_col + "," + budget_col + "," + eps_col + "," +
                                     std::to_string(row.seed);
          raw += prefix + "," + std::to_string(row.makespan) + "," + std::to_string(sd.refs[i]) + "," +
                 fmt("%.6f", norm) + "," + std::to_string(row.rollouts) + "\n";
          timing += prefix + "," + fmt("%.3f", row.wall_ms) + "," + std::to_string(row.rollouts) + "\n";
        }
      }
      StatsRow sr;
      sr.size = sd.label;
      sr.cell = cell.label;
      sr.exact_norm = sd.exact_norm;
      sr.stats = summarize(values);
      rep.rows.push_back(std::move(sr));
    }
  }
  rep.raw_csv = std::move(raw);
  rep.timing_csv = std::move(timing);

  std::string text = "jobshop bench summary\n";
  text += fmt("master_seed %llu  instances_per_size %d  repeats %d  p [%d,%d]\n",
              static_cast<unsigned long long>(cfg.master_seed), K, R, cfg.p_min, cfg.p_max);
  for (const auto& a : rep.annotations) text += a + "\n";
  text += "\n";
  text += fmt("%-8s %-20s %5s %8s %8s %8s %8s %8s %6s\n", "size", "cell", "n", "min", "mean",
              "median", "stdev", "max", "#opt");
  for (const StatsRow& r : rep.rows) {
    const std::string opt = r.exact_norm ? std::to_string(r.stats.count_opt) : "-";
    text += fmt("%-8s %-20s %5d %8.3f %8.3f %8.3f %8.3f %8.3f %6s\n", r.size.c_str(),
                r.cell.c_str(), r.stats.count, r.stats.min, r.stats.mean, r.stats.median,
                r.stats.stdev, r.stats.max, opt.c_str());
  }
  rep.summary_text = std::move(text);

  ordered_json js;
  js["config"] = config_json(cfg);
  auto norm = ordered_json::array();
  for (size_t si = 0; si < cfg.sizes.size(); ++si) {
    ordered_json e;
    e["size"] = data[si].label;
    e["mode"] = data[si].exact_norm ? "exact" : "best_found";
    e["note"] = data[si].annotation;
    norm.push_back(std::move(e));
  }
  js["normalization"] = std::move(norm);
  auto rows = ordered_json::array();
  for (const StatsRow& r : rep.rows) {
    ordered_json e;
    e["size"] = r.size;
    e["cell"] = r.cell;
    e["n"] = r.stats.count;
    e["min"] = r.stats.min;
    e["mean"] = r.stats.mean;
    e["median"] = r.stats.median;
    e["stdev"] = r.stats.stdev;
    e["max"] = r.stats.max;
    if (r.exact_norm) {
      e["count_opt"] = r.stats.count_opt;
    } else {
      e["count_opt"] = nullptr;
    }
    rows.push_back(std::move(e));
  }
  js["cells"] = std::move(rows);
  rep.summary_json = js.dump(2) + "\n";

  return rep;
}

void write_report(const ExperimentReport& report, const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  auto put = [&](const char* name, const std::string& content) {
    std::ofstream f(fs::path(out_dir) / name, std::ios::binary);
    if (!f) throw std::runtime_error(std::string("cannot write ") + name + " in " + out_dir);
    f << content;
  };
  put("raw.csv", report.raw_csv);
  put("timing.csv", report.timing_csv);
  put("summary.txt", report.summary_text);
  put("summary.json", report.summary_json);
}

}  // namespace jss
