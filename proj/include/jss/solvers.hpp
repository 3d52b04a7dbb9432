#ifndef JSS_SOLVERS_HPP
#define JSS_SOLVERS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "jss/rng.hpp"
#include "jss/rules.hpp"
#include "jss/schedule.hpp"
#include "jss/search_tree.hpp"

namespace jss {

enum class Algo {
  kGreedy,  // one pass of the dispatch rule
  kPilot,   // rollout tree, heuristic rollouts
  kMcs,     // eps-greedy tree, uniform-random rollouts, fortified best
};

// CLI tokens, case-insensitive: greedy | pilot | mcs.
Algo parse_algo(const std::string& token);
std::string algo_name(Algo algo);

struct SolverConfig {
  Algo algo = Algo::kGreedy;
  Rule rule = Rule::kMwkr;  // greedy construction and pilot rollouts
  long long budget = 1;     // rollouts per solve; pilot and mcs only
  double epsilon = 0.1;     // mcs only
  std::uint64_t seed = 0;
  // Stop a tree solve once every distinct dispatch sequence appears as a
  // visited leaf (the remaining budget is then provably useless). Off by
  // default so exactly `budget` rollouts run.
  bool halt_on_saturation = false;
  // Record the best-so-far makespan after every k-th rollout (and after
  // the last one). 0 disables the trace.
  long long trace_every = 0;
  // Keep the search tree in RunResult for diagnostics (tree methods).
  bool keep_tree = false;
};

struct TracePoint {
  long long rollout;  // 1-based count of completed rollouts
  int best_makespan;
};

struct RunResult {
  Solution solution;
  long long rollouts = 0;  // rollout count; 0 for greedy
  double wall_ms = 0.0;
  std::vector<TracePoint> trace;
  bool saturated = false;               // tree solve halted early
  long long root_reward = kNoReward;    // root.Q; tree methods only
  std::unique_ptr<SearchNode> tree;     // set when cfg.keep_tree
};

// One pass of Alg.-1-style construction: select with the rule, dispatch,
// repeat until complete. The result is verified before returning.
Solution greedy_solve(const Instance& inst, Rule rule, Rng& rng);

struct RolloutResult {
  long long reward;      // -makespan of the completed schedule
  std::vector<int> seq;  // full dispatch sequence, prefix = ps.seq at entry
};

// Completes ps in place with the rule (or uniform-random choices) and
// scores the completion. A complete ps is returned as-is.
RolloutResult rollout_heuristic(PartialSchedule& ps, Rule rule, Rng& rng);
RolloutResult rollout_random(PartialSchedule& ps, Rng& rng);

// Tree search with uniform descent among visited children and one
// heuristic rollout per walk. Returns the best completion found over
// `budget` rollouts; its makespan equals -root.Q.
Solution pilot_solve(const Instance& inst, Rule rule, long long budget, Rng& rng);

// Tree search with eps-greedy descent and uniform-random rollouts. The
// global best completion is kept across all rollouts and returned.
Solution mcs_solve(const Instance& inst, long long budget, double epsilon, Rng& rng);

// Unified entry point: seeds an rng from cfg.seed, runs the configured
// algorithm, verifies the solution, and returns it with run metadata.
// Identical (inst, cfg) gives a bit-identical result.
RunResult solve(const Instance& inst, const SolverConfig& cfg);

}  // namespace jss

#endif
