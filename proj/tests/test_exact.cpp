#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "jss/exact.hpp"
#include "jss/instance.hpp"
#include "jss/solvers.hpp"
#include "oracle.hpp"

using jss::ExactResult;
using jss::Instance;
using jss::PartialSchedule;
using jss::Rng;

namespace {

const std::string kTwoByTwo = "2 2\n3 2\n2 4\n1 2\n2 1";

// Best makespan over all completions of the given dispatch prefix.
int best_completion(const Instance& inst, const std::vector<int>& prefix) {
  int best = -1;
  jss::testing::for_each_sequence(inst, [&](const std::vector<int>& seq) {
    if (!std::equal(prefix.begin(), prefix.end(), seq.begin())) return;
    const int z = jss::testing::oracle_makespan(inst, seq);
    if (best < 0 || z < best) best = z;
  });
  REQUIRE(best >= 0);
  return best;
}

std::vector<int> random_prefix(const Instance& inst, Rng& rng, int len) {
  std::vector<int> next_op(inst.num_jobs(), 0), prefix;
  for (int step = 0; step < len; ++step) {
    std::vector<int> eligible;
    for (int j = 0; j < inst.num_jobs(); ++j)
      if (next_op[j] < inst.num_machines()) eligible.push_back(j);
    const int j = eligible[rng.uniform_int(0, static_cast<int>(eligible.size()) - 1)];
    ++next_op[j];
    prefix.push_back(j);
  }
  return prefix;
}

}  // namespace

TEST_CASE("lower bound on the two-by-two example") {
  const Instance inst = jss::parse_instance(kTwoByTwo);
  PartialSchedule ps(inst);
  // Job chains give 5 and 6; machine loads give 7 (M1) and 6 (M2).
  CHECK(jss::lower_bound(ps) == 7);

  ps.dispatch(0);  // M1 busy to 3; the bound is still the M1 load term
  CHECK(jss::lower_bound(ps) == 7);

  ps.dispatch(1);
  ps.dispatch(1);  // job 2 on M1: 3..7
  CHECK(jss::lower_bound(ps) == 7);

  ps.dispatch(0);
  CHECK(jss::lower_bound(ps) == ps.makespan());
}

TEST_CASE("lower bound is admissible and monotone") {
  for (int i = 0; i < 40; ++i) {
    const std::uint64_t seed = jss::derive_seed(67, "lb " + std::to_string(i));
    Rng rng(seed);
    const int n = rng.uniform_int(1, 4);
    const int m = rng.uniform_int(1, std::max(1, 8 / n));
    const Instance inst = jss::generate_instance(n, m, 1, 15, seed);

    const int len = rng.uniform_int(0, inst.num_operations());
    const std::vector<int> prefix = random_prefix(inst, rng, len);

    PartialSchedule ps(inst);
    int prev = jss::lower_bound(ps);
    for (int j : prefix) {
      ps.dispatch(j);
      const int lb = jss::lower_bound(ps);
      REQUIRE(lb >= prev);  // dispatching never loosens the bound
      prev = lb;
    }
    REQUIRE(jss::lower_bound(ps) <= best_completion(inst, prefix));
  }
}

TEST_CASE("enumeration solves the two-by-two example") {
  const Instance inst = jss::parse_instance(kTwoByTwo);
  const ExactResult r = jss::enumerate_optimal(inst);
  CHECK(r.makespan == 7);
  CHECK(r.proven_optimal);
  CHECK_FALSE(r.time_limit_hit);
  CHECK(r.nodes_explored == 6);  // the six interleavings
  CHECK(r.schedule.makespan == 7);
  CHECK(jss::verify_schedule(inst, r.schedule.start).ok);
}

TEST_CASE("enumeration agrees with the oracle and counts every sequence") {
  for (int i = 0; i < 25; ++i) {
    const std::uint64_t seed = jss::derive_seed(71, "enum " + std::to_string(i));
    Rng rng(seed);
    const int n = rng.uniform_int(1, 4);
    const int m = rng.uniform_int(1, std::max(1, 8 / n));
    const Instance inst = jss::generate_instance(n, m, 1, 20, seed);

    const ExactResult r = jss::enumerate_optimal(inst);
    REQUIRE(r.makespan == jss::testing::oracle_optimum(inst));
    REQUIRE(r.nodes_explored == jss::testing::sequence_count(inst));
    REQUIRE(r.proven_optimal);
    REQUIRE(jss::verify_schedule(inst, r.schedule.start).ok);
    REQUIRE(jss::makespan_of(r.schedule) == r.makespan);
  }
}

TEST_CASE("enumeration refuses oversized instances") {
  const Instance wide = jss::generate_instance(13, 1, 1, 9, 5);
  CHECK_THROWS_AS(jss::enumerate_optimal(wide), std::invalid_argument);
  CHECK_THROWS_AS(jss::enumerate_optimal(jss::generate_instance(4, 4, 1, 9, 5)),
                  std::invalid_argument);
  CHECK_NOTHROW(jss::enumerate_optimal(jss::generate_instance(4, 3, 1, 9, 5)));
  CHECK_NOTHROW(jss::enumerate_optimal(jss::generate_instance(4, 4, 1, 9, 5), 16));
}

TEST_CASE("branch and bound solves the two-by-two example") {
  const Instance inst = jss::parse_instance(kTwoByTwo);
  const ExactResult r = jss::branch_and_bound(inst, 10.0);
  CHECK(r.makespan == 7);
  CHECK(r.proven_optimal);
  CHECK_FALSE(r.time_limit_hit);
  CHECK(jss::verify_schedule(inst, r.schedule.start).ok);

  const ExactResult again = jss::branch_and_bound(inst, 10.0);
  CHECK(again.nodes_explored == r.nodes_explored);  // deterministic search
}

TEST_CASE("branch and bound matches enumeration") {
  for (int i = 0; i < 50; ++i) {
    const std::uint64_t seed = jss::derive_seed(73, "bnb " + std::to_string(i));
    Rng rng(seed);
    const int n = rng.uniform_int(1, 4);
    const int m = rng.uniform_int(1, std::min(4, 12 / n));
    const Instance inst = jss::generate_instance(n, m, 1, 20, seed);
    if (inst.num_operations() > 12) continue;

    const ExactResult slow = jss::enumerate_optimal(inst);
    const ExactResult fast = jss::branch_and_bound(inst, 30.0);
    REQUIRE(fast.proven_optimal);
    REQUIRE(fast.makespan == slow.makespan);
    REQUIRE(jss::verify_schedule(inst, fast.schedule.start).ok);
    REQUIRE(jss::makespan_of(fast.schedule) == fast.makespan);
  }
}

TEST_CASE("a zero time limit returns the greedy incumbent unproven") {
  const Instance inst = jss::generate_instance(4, 4, 1, 30, 88);
  const ExactResult r = jss::branch_and_bound(inst, 0.0);
  CHECK_FALSE(r.proven_optimal);
  CHECK(r.time_limit_hit);
  CHECK(jss::verify_schedule(inst, r.schedule.start).ok);

  Rng rng(jss::derive_seed(0, "bnb incumbent"));
  CHECK(r.makespan == jss::greedy_solve(inst, jss::Rule::kMwkr, rng).makespan);
}

TEST_CASE("branch and bound proves a six-by-six instance quickly") {
  const Instance inst = jss::generate_instance(6, 6, 1, 99, 20260814);
  const ExactResult r = jss::branch_and_bound(inst, 120.0);
  REQUIRE(r.proven_optimal);
  REQUIRE(jss::verify_schedule(inst, r.schedule.start).ok);

  // A strong heuristic never beats a proven optimum.
  Rng rng(42);
  const jss::Solution mcs = jss::mcs_solve(inst, 3000, 0.1, rng);
  CHECK(mcs.makespan >= r.makespan);

  PartialSchedule empty(inst);
  CHECK(r.makespan >= jss::lower_bound(empty));
}
