#ifndef JSS_RULES_HPP
#define JSS_RULES_HPP

#include <string>

#include "jss/rng.hpp"
#include "jss/schedule.hpp"

namespace jss {

// Priority dispatch rules. The first three are the classic greedy rules;
// Random is the uniform job choice used in Monte-Carlo rollouts.
enum class Rule {
  kMwkr,    // most work remaining
  kSpt,     // shortest imminent processing time
  kLopn,    // least operation number (fewest operations dispatched)
  kRandom,  // uniform over eligible jobs
};

// CLI tokens, case-insensitive: mwkr | spt | lopn | random.
Rule parse_rule(const std::string& token);
std::string rule_name(Rule rule);

// Picks the next job to dispatch. Ties are broken uniformly at random;
// the rng is consulted only when two or more jobs tie (Random counts all
// eligible jobs as tied). Throws std::logic_error with no eligible job.
int select(Rule rule, const PartialSchedule& ps, Rng& rng);

}  // namespace jss

#endif
