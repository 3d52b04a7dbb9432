// Command-line front end: gen | solve | exact | bench.
//
// stdout of `solve` and the raw.csv written by `bench` are deterministic
// functions of the arguments; wall-clock diagnostics go to stderr or to
// timing.csv.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "jss/exact.hpp"
#include "jss/harness.hpp"
#include "jss/instance.hpp"
#include "jss/search_tree.hpp"
#include "jss/solvers.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << content;
}

struct GenArgs {
  int jobs = 0;
  int machines = 0;
  int count = 1;
  std::uint64_t seed = 1;
  int p_min = 1;
  int p_max = 200;
  std::string out_dir = ".";
};

// File seeds match the bench harness ("inst <n>x<m> <index>"), so `gen`
// with a bench config's master_seed rematerializes the bench instances.
int run_gen(const GenArgs& a) {
  namespace fs = std::filesystem;
  fs::create_directories(a.out_dir);
  const std::string size = std::to_string(a.jobs) + "x" + std::to_string(a.machines);
  for (int i = 0; i < a.count; ++i) {
    const std::uint64_t s = jss::derive_seed(a.seed, "inst " + size + " " + std::to_string(i));
    const jss::Instance inst = jss::generate_instance(a.jobs, a.machines, a.p_min, a.p_max, s);
    char name[64];
    std::snprintf(name, sizeof(name), "inst_%s_%03d.txt", size.c_str(), i);
    const fs::path path = fs::path(a.out_dir) / name;
    write_file(path.string(), jss::write_instance(inst) + "\n");
    std::printf("%s\n", path.string().c_str());
  }
  return 0;
}

struct SolveArgs {
  std::string algo = "greedy";
  std::string rule = "mwkr";
  long long budget = 100;
  double epsilon = 0.1;
  std::uint64_t seed = 0;
  std::string file;
  std::string solution_out;
  std::string tree_out;
  int tree_depth = 3;
  long long trace_every = 0;
  bool halt_on_saturation = false;
};

int run_solve(const SolveArgs& a) {
  const jss::Instance inst = jss::parse_instance(read_file(a.file));
  jss::SolverConfig cfg;
  cfg.algo = jss::parse_algo(a.algo);
  cfg.rule = jss::parse_rule(a.rule);
  cfg.budget = a.budget;
  cfg.epsilon = a.epsilon;
  cfg.seed = a.seed;
  cfg.trace_every = a.trace_every;
  cfg.halt_on_saturation = a.halt_on_saturation;
  cfg.keep_tree = !a.tree_out.empty();

  const jss::RunResult r = jss::solve(inst, cfg);

  std::printf("instance %s %dx%d\n", a.file.c_str(), inst.num_jobs(), inst.num_machines());
  std::printf("algo %s\n", jss::algo_name(cfg.algo).c_str());
  if (cfg.algo != jss::Algo::kMcs) std::printf("rule %s\n", jss::rule_name(cfg.rule).c_str());
  if (cfg.algo != jss::Algo::kGreedy) std::printf("budget %lld\n", cfg.budget);
  if (cfg.algo == jss::Algo::kMcs) std::printf("epsilon %g\n", cfg.epsilon);
  std::printf("seed %" PRIu64 "\n", cfg.seed);
  for (const jss::TracePoint& t : r.trace) {
    std::printf("trace %lld %d\n", t.rollout, t.best_makespan);
  }
  std::printf("makespan %d\n", r.solution.makespan);
  std::printf("rollouts %lld\n", r.rollouts);
  if (a.halt_on_saturation) std::printf("saturated %d\n", r.saturated ? 1 : 0);
  std::fprintf(stderr, "wall_ms %.3f\n", r.wall_ms);

  if (!a.solution_out.empty()) write_file(a.solution_out, jss::solution_to_csv(inst, r.solution));
  if (!a.tree_out.empty()) {
    if (!r.tree) throw std::runtime_error("no tree to dump (greedy has none)");
    write_file(a.tree_out, jss::dump_tree(*r.tree, a.tree_depth) + "\n");
  }
  return 0;
}

struct ExactArgs {
  std::string file;
  double time_limit = 60.0;
  std::string method = "bnb";
  int max_ops = 12;
};

int run_exact(const ExactArgs& a) {
  const jss::Instance inst = jss::parse_instance(read_file(a.file));
  const auto t0 = std::chrono::steady_clock::now();
  jss::ExactResult r;
  if (a.method == "bnb") {
    r = jss::branch_and_bound(inst, a.time_limit);
  } else if (a.method == "enum") {
    r = jss::enumerate_optimal(inst, a.max_ops);
  } else {
    throw std::runtime_error("unknown method '" + a.method + "' (want bnb|enum)");
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  std::printf("instance %s %dx%d\n", a.file.c_str(), inst.num_jobs(), inst.num_machines());
  std::printf("method %s\n", a.method.c_str());
  std::printf("makespan %d\n", r.makespan);
  std::printf("proven %d\n", r.proven_optimal ? 1 : 0);
  std::printf("nodes %lld\n", r.nodes_explored);
  std::printf("time_ms %.3f\n", ms);
  return 0;
}

struct BenchArgs {
  std::string config;
  std::string out_dir = "bench_out";
  int jobs_parallel = 1;
};

int run_bench(const BenchArgs& a) {
  const jss::ExperimentConfig cfg = jss::config_from_json(read_file(a.config));
  const jss::ExperimentReport rep = jss::run_experiment(cfg, a.jobs_parallel);
  jss::write_report(rep, a.out_dir);
  std::fputs(rep.summary_text.c_str(), stdout);
  std::fprintf(stderr, "wrote raw.csv, timing.csv, summary.txt, summary.json to %s\n",
               a.out_dir.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"job-shop scheduling: dispatch rules, rollout trees, benchmarks"};
  app.require_subcommand(1);

  GenArgs g;
  CLI::App* gen = app.add_subcommand("gen", "generate random instances");
  gen->add_option("--jobs", g.jobs, "job count")->required();
  gen->add_option("--machines", g.machines, "machine count")->required();
  gen->add_option("--count", g.count, "number of instances")->capture_default_str();
  gen->add_option("--seed", g.seed, "master seed")->required();
  gen->add_option("--pmin", g.p_min, "minimum processing time")->capture_default_str();
  gen->add_option("--pmax", g.p_max, "maximum processing time")->capture_default_str();
  gen->add_option("--out", g.out_dir, "output directory")->capture_default_str();

  SolveArgs s;
  CLI::App* solve = app.add_subcommand("solve", "solve one instance");
  solve->add_option("--algo", s.algo, "greedy|pilot|mcs")->required();
  solve->add_option("--rule", s.rule, "mwkr|spt|lopn|random")->capture_default_str();
  solve->add_option("--budget", s.budget, "rollout budget (pilot/mcs)")->capture_default_str();
  solve->add_option("--epsilon", s.epsilon, "exploration probability (mcs)")->capture_default_str();
  solve->add_option("--seed", s.seed, "rng seed")->required();
  solve->add_option("--solution", s.solution_out, "write the schedule as CSV here");
  solve->add_option("--tree-dump", s.tree_out, "write the search tree as JSON here");
  solve->add_option("--tree-depth", s.tree_depth, "dump depth limit")->capture_default_str();
  solve->add_option("--trace-every", s.trace_every, "print best-so-far every K rollouts");
  solve->add_flag("--halt-on-saturation", s.halt_on_saturation,
                  "stop once every dispatch sequence has been evaluated");
  solve->add_option("file", s.file, "instance file")->required();

  ExactArgs e;
  CLI::App* exact = app.add_subcommand("exact", "prove the optimal makespan");
  exact->add_option("--time-limit", e.time_limit, "seconds (bnb)")->capture_default_str();
  exact->add_option("--method", e.method, "bnb|enum")->capture_default_str();
  exact->add_option("--max-ops", e.max_ops, "operation cap (enum)")->capture_default_str();
  exact->add_option("file", e.file, "instance file")->required();

  BenchArgs b;
  CLI::App* bench = app.add_subcommand("bench", "run an experiment grid");
  bench->add_option("--config", b.config, "JSON experiment config")->required();
  bench->add_option("--out", b.out_dir, "output directory")->capture_default_str();
  bench->add_option("--jobs-parallel", b.jobs_parallel, "worker threads")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return run_gen(g);
    if (solve->parsed()) return run_solve(s);
    if (exact->parsed()) return run_exact(e);
    if (bench->parsed()) return run_bench(b);
  } catch (const std::exception& ex) {
    std::fprintf(stderr, "error: %s\n", ex.what());
    return 1;
  }
  return 0;
}
