#ifndef JSS_HARNESS_HPP
#define JSS_HARNESS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "jss/instance.hpp"
#include "jss/solvers.hpp"

namespace jss {

enum class Normalization {
  kExact,      // reference = proven optimum (branch and bound per instance)
  kBestFound,  // reference = grid minimum plus a long-budget mcs reference run
};

struct ExperimentConfig {
  std::vector<std::pair<int, int>> sizes;  // (jobs, machines)
  int instances_per_size = 100;
  std::vector<long long> budgets = {100, 1000, 5000};  // pilot and mcs cells
  std::vector<Algo> algorithms = {Algo::kGreedy, Algo::kPilot, Algo::kMcs};
  std::vector<Rule> rules = {Rule::kMwkr, Rule::kSpt, Rule::kLopn};  // greedy and pilot
  double epsilon = 0.1;  // mcs cells
  std::uint64_t master_seed = 1;
  Normalization normalization = Normalization::kExact;
  int repeats = 1;  // runs per (cell, instance); > 1 only useful for stochastic cells
  int p_min = 1;
  int p_max = 200;
  long long reference_budget = 20000;  // mcs budget for best_found references
  // Branch-and-bound time limit per instance. < 0 picks a per-size default:
  // 60 s up to 36 operations, 600 s up to 100, and above that exact
  // normalization is not attempted (the size falls back to best_found).
  double exact_time_limit_s = -1.0;
};

// Parses the JSON config format (see README). Unknown fields are ignored;
// invalid values throw std::runtime_error naming the field.
ExperimentConfig config_from_json(const std::string& text);
std::string config_to_json(const ExperimentConfig& cfg);

struct Stats {
  double min = 0.0;
  double mean = 0.0;
  double median = 0.0;  // midpoint of the two middle values for even counts
  double stdev = 0.0;   // sample standard deviation, divisor N-1; 0 for N=1
  double max = 0.0;
  int count = 0;
  int count_opt = 0;  // values <= 1 + 1e-9; meaningful only under exact refs
};

// Throws std::invalid_argument on an empty list.
Stats summarize(const std::vector<double>& values);

// z / z_ref. Throws std::invalid_argument when z_ref < 1.
double normalized_makespan(int z, int z_ref);

struct StatsRow {
  std::string size;  // "6x6"
  std::string cell;  // "greedy(mwkr)", "pilot(mwkr,100)", "mcs(5000)"
  bool exact_norm = false;
  Stats stats;
};

struct ExperimentReport {
  std::vector<StatsRow> rows;  // size-major, cells in grid order
  std::vector<std::string> annotations;  // one normalization note per size
  // Deterministic function of the config alone: independent of thread
  // count and completion order.
  std::string raw_csv;
  // Wall-clock per run; varies between executions by nature.
  std::string timing_csv;
  std::string summary_text;
  std::string summary_json;
};

// Runs the whole grid: per size, generates instances, computes the
// normalization references, runs cells x instances x repeats, reduces in
// a fixed order. Every instance and run seed is derived from master_seed
// and a descriptive tag, so no result depends on scheduling.
//
// Grid order: algorithms as configured; greedy expands over rules, pilot
// over rules (outer) x budgets (inner), mcs over budgets.
//
// Throws std::runtime_error when a run beats a proven optimum (oracle or
// validator bug) and on invalid configs.
ExperimentReport run_experiment(const ExperimentConfig& cfg, int parallelism);

// Writes raw.csv, timing.csv, summary.txt, summary.json into out_dir
// (created if missing).
void write_report(const ExperimentReport& report, const std::string& out_dir);

}  // namespace jss

#endif
