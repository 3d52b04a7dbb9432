#ifndef JSS_EXACT_HPP
#define JSS_EXACT_HPP

#include "jss/schedule.hpp"

namespace jss {

struct ExactResult {
  int makespan = 0;
  bool proven_optimal = false;
  Solution schedule;  // witness achieving `makespan`
  long long nodes_explored = 0;
  bool time_limit_hit = false;
};

// Admissible completion bound for a partial schedule: the larger of
//   max over jobs of     job_ready + remaining work of the job,
//   max over machines of mach_ready + total undispatched time on it.
// Never exceeds the best completion's makespan, and never decreases along
// a dispatch chain.
int lower_bound(const PartialSchedule& ps);

// Evaluates every distinct dispatch interleaving and returns the best.
// Optimal over semi-active schedules, which is optimal overall for
// makespan. Refuses instances with more than max_ops operations; the
// sequence count explodes combinatorially. nodes_explored counts complete
// sequences evaluated.
ExactResult enumerate_optimal(const Instance& inst, int max_ops = 12);

// Depth-first branch and bound over dispatch prefixes: incumbent seeded
// by the MWKR greedy schedule, children ordered by lower bound, subtrees
// with bound >= incumbent pruned. Children are restricted to the
// Giffler-Thompson conflict set (operations on the machine with the
// earliest achievable completion that could start before it), which
// enumerates exactly the active schedules; an optimal schedule is always
// active. proven_optimal is true iff the search finished inside the time
// limit; otherwise the incumbent is still a valid (unproven) schedule.
// time_limit_s <= 0 returns the greedy incumbent untouched.
// nodes_explored counts prefixes entered.
ExactResult branch_and_bound(const Instance& inst, double time_limit_s);

}  // namespace jss

#endif
