#include "jss/search_tree.hpp"

#include <stdexcept>

#include "json.hpp"

namespace jss {

namespace {

// Picks the next child during descent without mutating the tree.
SearchNode* choose_child(SearchNode& node, const DescentPolicy& policy, Rng& rng) {
  auto& kids = node.children;

  int unvisited = 0;
  for (const auto& c : kids) {
    if (c->visits == 0) ++unvisited;
  }
  if (unvisited > 0) {
    int pick = unvisited == 1 ? 0 : rng.uniform_int(0, unvisited - 1);
    for (const auto& c : kids) {
      if (c->visits == 0 && pick-- == 0) return c.get();
    }
  }

  if (policy.kind == DescentPolicy::Kind::kPilotRandom) {
    int pick = kids.size() == 1 ? 0 : rng.uniform_int(0, static_cast<int>(kids.size()) - 1);
    return kids[pick].get();
  }

  // eps-greedy: explore keeps the full support, the best child included.
  if (rng.uniform01() < policy.epsilon) {
    int pick = kids.size() == 1 ? 0 : rng.uniform_int(0, static_cast<int>(kids.size()) - 1);
    return kids[pick].get();
  }

  long long best = kNoReward;
  int ties = 0;
  for (const auto& c : kids) {
    if (c->best_reward > best) {
      best = c->best_reward;
      ties = 1;
    } else if (c->best_reward == best) {
      ++ties;
    }
  }
  int pick = ties == 1 ? 0 : rng.uniform_int(0, ties - 1);
  for (const auto& c : kids) {
    if (c->best_reward == best && pick-- == 0) return c.get();
  }
  throw std::logic_error("choose_child: argmax fell through");
}

}  // namespace

DescentResult descend(SearchNode& root, PartialSchedule& ps, const DescentPolicy& policy,
                      Rng& rng) {
  DescentResult out;
  out.path.push_back(&root);
  SearchNode* node = &root;
  while (!node->is_leaf()) {
    SearchNode* next = choose_child(*node, policy, rng);
    ps.dispatch(next->job);
    out.path.push_back(next);
    node = next;
  }
  out.leaf = node;
  return out;
}

int expand(SearchNode& leaf, const PartialSchedule& ps) {
  if (!leaf.children.empty()) throw std::logic_error("expand: node already expanded");
  const auto jobs = ps.eligible_jobs();
  leaf.children.reserve(jobs.size());
  for (int j : jobs) {
    auto child = std::make_unique<SearchNode>();
    child->parent = &leaf;
    child->job = j;
    leaf.children.push_back(std::move(child));
  }
  return static_cast<int>(jobs.size());
}

void backpropagate(const std::vector<SearchNode*>& path, long long reward) {
  for (SearchNode* node : path) {
    node->visits += 1;
    if (node->best_reward == kNoReward || reward > node->best_reward) {
      node->best_reward = reward;
    }
  }
}

namespace {

nlohmann::ordered_json node_to_json(const SearchNode& node, int depth, int max_depth) {
  nlohmann::ordered_json j;
  j["job"] = node.job < 0 ? nlohmann::ordered_json(nullptr)
                          : nlohmann::ordered_json(node.job + 1);
  j["n"] = node.visits;
  if (node.best_reward == kNoReward) {
    j["q"] = nullptr;
  } else {
    j["q"] = node.best_reward;
  }
  j["depth"] = depth;
  auto kids = nlohmann::ordered_json::array();
  if (depth < max_depth) {
    for (const auto& c : node.children) {
      kids.push_back(node_to_json(*c, depth + 1, max_depth));
    }
  }
  j["children"] = std::move(kids);
  return j;
}

}  // namespace

std::string dump_tree(const SearchNode& root, int max_depth) {
  return node_to_json(root, 0, max_depth).dump(2);
}

}  // namespace jss
