#include "jss/solvers.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <stdexcept>

namespace jss {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void check_verified(const Instance& inst, const Solution& sol, const char* who) {
  VerifyResult v = verify_schedule(inst, sol.start);
  if (!v.ok) throw std::logic_error(std::string(who) + " built an infeasible schedule: " + v.violation);
  if (makespan_of(sol) != sol.makespan) {
    throw std::logic_error(std::string(who) + " reported a stale makespan");
  }
}

struct TreeSetup {
  DescentPolicy policy;
  bool random_rollout = false;
  Rule rule = Rule::kMwkr;  // heuristic rollouts only
  long long budget = 1;
  bool halt_on_saturation = false;
  long long trace_every = 0;
  bool keep_tree = false;
};

// One tree per solve. Each walk: reset + replay the descent path into ps,
// expand the leaf, one rollout from the leaf state, max-backup along the
// path. The best completion is fortified outside the tree.
RunResult run_tree(const Instance& inst, const TreeSetup& setup, Rng& rng) {
  RunResult out;
  auto root_holder = std::make_unique<SearchNode>();
  SearchNode& root = *root_holder;
  PartialSchedule ps(inst);
  const int total_ops = inst.num_operations();

  // Saturation accounting. open_leaves counts leaves whose schedule is
  // incomplete; unvisited_complete counts complete-schedule leaves no walk
  // has reached yet. Both zero <=> every distinct dispatch sequence has
  // been evaluated at least once.
  long long open_leaves = 1;  // the root; instances have >= 1 operation
  long long unvisited_complete = 0;

  Solution best;
  bool have_best = false;

  for (long long walk = 0; walk < setup.budget; ++walk) {
    ps.reset();
    DescentResult d = descend(root, ps, setup.policy, rng);
    const bool leaf_complete = ps.complete();
    if (leaf_complete && d.leaf->visits == 0) --unvisited_complete;

    int created = expand(*d.leaf, ps);
    if (!leaf_complete) {
      --open_leaves;
      if (ps.ops_dispatched() + 1 < total_ops) {
        open_leaves += created;
      } else {
        unvisited_complete += created;
      }
    }

    RolloutResult rr = setup.random_rollout ? rollout_random(ps, rng)
                                            : rollout_heuristic(ps, setup.rule, rng);
    backpropagate(d.path, rr.reward);
    out.rollouts += 1;

    const int z = static_cast<int>(-rr.reward);
    if (!have_best || z < best.makespan) {
      best = ps.to_solution();
      have_best = true;
    }
    if (setup.trace_every > 0 &&
        (out.rollouts % setup.trace_every == 0 || out.rollouts == setup.budget)) {
      out.trace.push_back({out.rollouts, best.makespan});
    }

    if (setup.halt_on_saturation && open_leaves == 0 && unvisited_complete == 0) {
      out.saturated = true;
      if (setup.trace_every > 0 &&
          (out.trace.empty() || out.trace.back().rollout != out.rollouts)) {
        out.trace.push_back({out.rollouts, best.makespan});
      }
      break;
    }
  }

  out.solution = std::move(best);
  out.root_reward = root.best_reward;
  if (setup.keep_tree) out.tree = std::move(root_holder);
  return out;
}

TreeSetup pilot_setup(Rule rule, long long budget) {
  TreeSetup s;
  s.policy = DescentPolicy::pilot_random();
  s.random_rollout = false;
  s.rule = rule;
  s.budget = budget;
  return s;
}

TreeSetup mcs_setup(long long budget, double epsilon) {
  TreeSetup s;
  s.policy = DescentPolicy::eps_greedy(epsilon);
  s.random_rollout = true;
  s.budget = budget;
  return s;
}

void check_budget(long long budget) {
  if (budget < 1) throw std::invalid_argument("budget must be >= 1");
}

void check_epsilon(double epsilon) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument("epsilon must be in [0, 1]");
  }
}

}  // namespace

Algo parse_algo(const std::string& token) {
  std::string t;
  for (char c : token) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (t == "greedy") return Algo::kGreedy;
  if (t == "pilot") return Algo::kPilot;
  if (t == "mcs") return Algo::kMcs;
  throw std::invalid_argument("unknown algorithm '" + token + "' (want greedy|pilot|mcs)");
}

std::string algo_name(Algo algo) {
  switch (algo) {
    case Algo::kGreedy: return "greedy";
    case Algo::kPilot: return "pilot";
    case Algo::kMcs: return "mcs";
  }
  throw std::logic_error("bad algo");
}

Solution greedy_solve(const Instance& inst, Rule rule, Rng& rng) {
  PartialSchedule ps(inst);
  while (!ps.complete()) ps.dispatch(select(rule, ps, rng));
  Solution sol = ps.to_solution();
  check_verified(inst, sol, "greedy_solve");
  return sol;
}

RolloutResult rollout_heuristic(PartialSchedule& ps, Rule rule, Rng& rng) {
  while (!ps.complete()) ps.dispatch(select(rule, ps, rng));
  return {-static_cast<long long>(ps.makespan()), ps.job_sequence()};
}

RolloutResult rollout_random(PartialSchedule& ps, Rng& rng) {
  return rollout_heuristic(ps, Rule::kRandom, rng);
}

Solution pilot_solve(const Instance& inst, Rule rule, long long budget, Rng& rng) {
  check_budget(budget);
  RunResult r = run_tree(inst, pilot_setup(rule, budget), rng);
  check_verified(inst, r.solution, "pilot_solve");
  return std::move(r.solution);
}

Solution mcs_solve(const Instance& inst, long long budget, double epsilon, Rng& rng) {
  check_budget(budget);
  check_epsilon(epsilon);
  RunResult r = run_tree(inst, mcs_setup(budget, epsilon), rng);
  check_verified(inst, r.solution, "mcs_solve");
  return std::move(r.solution);
}

RunResult solve(const Instance& inst, const SolverConfig& cfg) {
  const auto t0 = Clock::now();
  RunResult out;
  Rng rng(cfg.seed);
  switch (cfg.algo) {
    case Algo::kGreedy:
      out.solution = greedy_solve(inst, cfg.rule, rng);
      break;
    case Algo::kPilot: {
      check_budget(cfg.budget);
      TreeSetup s = pilot_setup(cfg.rule, cfg.budget);
      s.halt_on_saturation = cfg.halt_on_saturation;
      s.trace_every = cfg.trace_every;
      s.keep_tree = cfg.keep_tree;
      out = run_tree(inst, s, rng);
      check_verified(inst, out.solution, "pilot_solve");
      break;
    }
    case Algo::kMcs: {
      check_budget(cfg.budget);
      check_epsilon(cfg.epsilon);
      TreeSetup s = mcs_setup(cfg.budget, cfg.epsilon);
      s.halt_on_saturation = cfg.halt_on_saturation;
      s.trace_every = cfg.trace_every;
      s.keep_tree = cfg.keep_tree;
      out = run_tree(inst, s, rng);
      check_verified(inst, out.solution, "mcs_solve");
      break;
    }
  }
  out.wall_ms = ms_since(t0);
  return out;
}

}  // namespace jss
