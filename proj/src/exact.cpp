#include "jss/exact.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <utility>
#include <vector>

#include "jss/rules.hpp"
#include "jss/solvers.hpp"

namespace jss {

int lower_bound(const PartialSchedule& ps) {
  const Instance& inst = ps.instance();
  const int n = inst.num_jobs();
  const int m = inst.num_machines();

  std::vector<int> load(m, 0);
  for (int j = 0; j < n; ++j) {
    for (int i = ps.next_op(j); i < m; ++i) load[inst.machine(j, i)] += inst.proc_time(j, i);
  }
  int bound = 0;
  for (int j = 0; j < n; ++j) bound = std::max(bound, ps.job_ready(j) + ps.remaining_work(j));
  for (int a = 0; a < m; ++a) bound = std::max(bound, ps.mach_ready(a) + load[a]);
  return bound;
}

namespace {

struct EnumState {
  PartialSchedule ps;
  ExactResult out;
  bool have_best = false;

  explicit EnumState(const Instance& inst) : ps(inst) {}

  void dfs() {
    if (ps.complete()) {
      out.nodes_explored += 1;
      const int z = ps.makespan();
      if (!have_best || z < out.makespan) {
        out.makespan = z;
        out.schedule = ps.to_solution();
        have_best = true;
      }
      return;
    }
    const int n = ps.instance().num_jobs();
    for (int j = 0; j < n; ++j) {
      if (ps.job_complete(j)) continue;
      ps.dispatch(j);
      dfs();
      ps.undo_last();
    }
  }
};

struct BnbState {
  PartialSchedule ps;
  std::vector<int> load;  // undispatched time per machine, kept incremental
  ExactResult out;
  std::vector<std::vector<std::pair<int, int>>> scratch;  // per depth: (bound, job)
  std::chrono::steady_clock::time_point deadline;
  bool aborted = false;

  explicit BnbState(const Instance& inst)
      : ps(inst),
        load(inst.num_machines(), 0),
        scratch(inst.num_operations() + 1) {
    for (int j = 0; j < inst.num_jobs(); ++j) {
      for (int i = 0; i < inst.num_machines(); ++i) load[inst.machine(j, i)] += inst.proc_time(j, i);
    }
  }

  int bound() const {
    const Instance& inst = ps.instance();
    int b = 0;
    for (int j = 0; j < inst.num_jobs(); ++j) {
      b = std::max(b, ps.job_ready(j) + ps.remaining_work(j));
    }
    for (int a = 0; a < inst.num_machines(); ++a) b = std::max(b, ps.mach_ready(a) + load[a]);
    return b;
  }

  void apply(int job) {
    const Instance& inst = ps.instance();
    const int op = ps.next_op(job);
    load[inst.machine(job, op)] -= inst.proc_time(job, op);
    ps.dispatch(job);
  }

  void revert(int job) {
    const Instance& inst = ps.instance();
    ps.undo_last();
    const int op = ps.next_op(job);
    load[inst.machine(job, op)] += inst.proc_time(job, op);
  }

  void dfs(int depth) {
    out.nodes_explored += 1;
    if ((out.nodes_explored & 1023) == 0 && std::chrono::steady_clock::now() >= deadline) {
      aborted = true;
    }
    if (aborted) return;

    if (ps.complete()) {
      const int z = ps.makespan();
      if (z < out.makespan) {
        out.makespan = z;
        out.schedule = ps.to_solution();
      }
      return;
    }

    auto& kids = scratch[depth];
    kids.clear();
    const Instance& inst = ps.instance();
    const int n = inst.num_jobs();
    // Giffler-Thompson conflict-set branching: let c* be the earliest
    // achievable completion among the eligible next operations and a* its
    // machine; branching over the operations on a* that could start
    // before c* enumerates exactly the active schedules, and an optimal
    // schedule is always active. Everything outside the conflict set is
    // dominated.
    int c_star = 0;
    int a_star = -1;
    for (int j = 0; j < n; ++j) {
      if (ps.job_complete(j)) continue;
      const int op = ps.next_op(j);
      const int mach = inst.machine(j, op);
      const int completion = std::max(ps.job_ready(j), ps.mach_ready(mach)) + inst.proc_time(j, op);
      if (a_star < 0 || completion < c_star) {
        c_star = completion;
        a_star = mach;
      }
    }
    for (int j = 0; j < n; ++j) {
      if (ps.job_complete(j)) continue;
      const int op = ps.next_op(j);
      if (inst.machine(j, op) != a_star) continue;
      if (std::max(ps.job_ready(j), ps.mach_ready(a_star)) >= c_star) continue;
      apply(j);
      const int lb = bound();
      revert(j);
      if (lb < out.makespan) kids.emplace_back(lb, j);
    }
    std::sort(kids.begin(), kids.end());

    for (const auto& [lb, j] : kids) {
      if (aborted) return;
      if (lb >= out.makespan) continue;  // incumbent may have improved
      apply(j);
      dfs(depth + 1);
      revert(j);
    }
  }
};

}  // namespace

ExactResult enumerate_optimal(const Instance& inst, int max_ops) {
  if (inst.num_operations() > max_ops) {
    throw std::invalid_argument("enumerate_optimal: instance has " +
                                std::to_string(inst.num_operations()) + " operations, cap is " +
                                std::to_string(max_ops));
  }
  EnumState st(inst);
  st.dfs();
  st.out.proven_optimal = true;
  return std::move(st.out);
}

ExactResult branch_and_bound(const Instance& inst, double time_limit_s) {
  Rng rng(derive_seed(0, "bnb incumbent"));
  Solution incumbent = greedy_solve(inst, Rule::kMwkr, rng);

  BnbState st(inst);
  st.out.makespan = incumbent.makespan;
  st.out.schedule = std::move(incumbent);

  if (time_limit_s <= 0.0) {
    st.out.time_limit_hit = true;
    return std::move(st.out);
  }
  st.deadline = std::chrono::steady_clock::now() +
                std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                    std::chrono::duration<double>(time_limit_s));
  st.dfs(0);
  st.out.time_limit_hit = st.aborted;
  st.out.proven_optimal = !st.aborted;
  return std::move(st.out);
}

}  // namespace jss
