#ifndef JSS_SEARCH_TREE_HPP
#define JSS_SEARCH_TREE_HPP

#include <limits>
#include <memory>
#include <vector>

#include "jss/rng.hpp"
#include "jss/schedule.hpp"

namespace jss {

// Sentinel for "no reward seen yet". Never used in arithmetic.
inline constexpr long long kNoReward = std::numeric_limits<long long>::min();

// Node of the rollout search tree. Rewards are maximised and backed up by
// max, so best_reward carries the best (largest) reward that ever passed
// through the node; with reward = -makespan that is the smallest makespan.
struct SearchNode {
  SearchNode* parent = nullptr;
  int job = -1;  // dispatched to reach this node from its parent; -1 at root
  long long visits = 0;
  long long best_reward = kNoReward;
  std::vector<std::unique_ptr<SearchNode>> children;  // ascending job id

  bool is_leaf() const { return children.empty(); }
};

// How to pick among visited children during descent. Children that have
// never been visited always win first.
struct DescentPolicy {
  enum class Kind {
    kPilotRandom,  // uniform among children
    kEpsGreedy,    // best_reward argmax with probability 1-eps, else uniform
  };
  Kind kind = Kind::kPilotRandom;
  double epsilon = 0.1;

  static DescentPolicy pilot_random() { return {Kind::kPilotRandom, 0.0}; }
  static DescentPolicy eps_greedy(double eps) { return {Kind::kEpsGreedy, eps}; }
};

struct DescentResult {
  SearchNode* leaf = nullptr;
  std::vector<SearchNode*> path;  // root first, leaf last
};

// Walks from the root to a leaf, dispatching each chosen child's job into
// ps (which must hold the root's schedule state on entry).
//
// Choice at a node, and the draws it consumes:
//   1. any unvisited child (visits == 0): one uniform_int over the
//      unvisited children, in child order;
//   2. otherwise, pilot-random: one uniform_int over all children;
//   3. otherwise, eps-greedy: one uniform01 for the exploration coin,
//      then either one uniform_int over all children (explore, the current
//      best included) or an argmax over best_reward with one uniform_int
//      over the tied children (consumed only when two or more tie).
DescentResult descend(SearchNode& root, PartialSchedule& ps, const DescentPolicy& policy,
                      Rng& rng);

// Creates one child per eligible job of ps (none when ps is complete).
// Requires leaf to have no children yet. Returns the number created.
int expand(SearchNode& leaf, const PartialSchedule& ps);

// visits += 1 and best_reward = max(best_reward, reward) on every node of
// the path.
void backpropagate(const std::vector<SearchNode*>& path, long long reward);

// Diagnostic JSON dump: {job, n, q, depth, children}, subtrees beyond
// max_depth elided. Jobs are 1-based in the dump; q is null before the
// first visit.
std::string dump_tree(const SearchNode& root, int max_depth);

}  // namespace jss

#endif
