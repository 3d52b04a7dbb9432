#include "jss/rules.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace jss {

namespace {

// Smaller key wins. Keeping the key definitions together makes the LOPN
// reading a one-line experiment.
int spt_key(const PartialSchedule& ps, int job) {
  return ps.instance().proc_time(job, ps.next_op(job));
}
int mwkr_key(const PartialSchedule& ps, int job) { return -ps.remaining_work(job); }
int lopn_key(const PartialSchedule& ps, int job) { return ps.next_op(job); }

}  // namespace

Rule parse_rule(const std::string& token) {
  std::string t;
  for (char c : token) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (t == "mwkr") return Rule::kMwkr;
  if (t == "spt") return Rule::kSpt;
  if (t == "lopn") return Rule::kLopn;
  if (t == "random") return Rule::kRandom;
  throw std::invalid_argument("unknown rule '" + token + "' (want mwkr|spt|lopn|random)");
}

std::string rule_name(Rule rule) {
  switch (rule) {
    case Rule::kMwkr: return "mwkr";
    case Rule::kSpt: return "spt";
    case Rule::kLopn: return "lopn";
    case Rule::kRandom: return "random";
  }
  throw std::logic_error("bad rule");
}

int select(Rule rule, const PartialSchedule& ps, Rng& rng) {
  const Instance& inst = ps.instance();
  const int n = inst.num_jobs();

  if (rule == Rule::kRandom) {
    int count = 0;
    int last = -1;
    for (int j = 0; j < n; ++j)
      if (!ps.job_complete(j)) {
        ++count;
        last = j;
      }
    if (count == 0) throw std::logic_error("select with no eligible job");
    if (count == 1) return last;
    int pick = rng.uniform_int(0, count - 1);
    for (int j = 0; j < n; ++j)
      if (!ps.job_complete(j) && pick-- == 0) return j;
    throw std::logic_error("unreachable");
  }

  int best_key = 0;
  int tie_count = 0;
  int first_best = -1;
  for (int j = 0; j < n; ++j) {
    if (ps.job_complete(j)) continue;
    int key;
    switch (rule) {
      case Rule::kMwkr: key = mwkr_key(ps, j); break;
      case Rule::kSpt: key = spt_key(ps, j); break;
      default: key = lopn_key(ps, j); break;
    }
    if (tie_count == 0 || key < best_key) {
      best_key = key;
      tie_count = 1;
      first_best = j;
    } else if (key == best_key) {
      ++tie_count;
    }
  }
  if (tie_count == 0) throw std::logic_error("select with no eligible job");
  if (tie_count == 1) return first_best;

  int pick = rng.uniform_int(0, tie_count - 1);
  for (int j = first_best; j < n; ++j) {
    if (ps.job_complete(j)) continue;
    int key;
    switch (rule) {
      case Rule::kMwkr: key = mwkr_key(ps, j); break;
      case Rule::kSpt: key = spt_key(ps, j); break;
      default: key = lopn_key(ps, j); break;
    }
    if (key == best_key && pick-- == 0) return j;
  }
  throw std::logic_error("unreachable");
}

}  // namespace jss
