#ifndef JSS_SCHEDULE_HPP
#define JSS_SCHEDULE_HPP

#include <string>
#include <vector>

#include "jss/instance.hpp"

namespace jss {

// One dispatched operation. prev_* hold the ready times that the dispatch
// overwrote, so a dispatch can be undone in O(1) (used by the exact search).
struct Dispatch {
  int job;
  int machine;
  int start;
  int prev_job_ready;
  int prev_mach_ready;
};

// A complete schedule: the dispatch sequence that built it, the start time
// of every operation, and the resulting makespan.
struct Solution {
  std::vector<Dispatch> seq;
  std::vector<std::vector<int>> start;  // [job][op], processing order
  int makespan = 0;
};

// Partial schedule built by dispatching one operation at a time.
//
// Each dispatched operation is appended semi-actively: it starts at
// max(completion of the job's previous operation, completion of the last
// operation already placed on its machine). There is no insertion into
// earlier idle gaps.
//
// A value owned by a single solver run; not shared across threads.
class PartialSchedule {
 public:
  explicit PartialSchedule(const Instance& inst);

  // Back to the empty schedule (keeps capacity).
  void reset();

  const Instance& instance() const { return *inst_; }

  int ops_dispatched() const { return static_cast<int>(seq_.size()); }
  bool complete() const { return ops_dispatched() == inst_->num_operations(); }

  // 0-based index of job j's next undispatched operation; == m when done.
  int next_op(int job) const { return next_op_[job]; }
  bool job_complete(int job) const { return next_op_[job] == inst_->num_machines(); }

  int job_ready(int job) const { return job_ready_[job]; }
  int mach_ready(int machine) const { return mach_ready_[machine]; }

  // Total processing time of the job's undispatched operations.
  int remaining_work(int job) const { return inst_->tail_work(job, next_op_[job]); }

  // Jobs with at least one undispatched operation, ascending.
  std::vector<int> eligible_jobs() const;

  // Appends job's next operation. Throws std::logic_error if the job is
  // already complete.
  void dispatch(int job);

  // Removes the most recent dispatch.
  void undo_last();

  const std::vector<Dispatch>& seq() const { return seq_; }
  const std::vector<std::vector<int>>& start_times() const { return start_; }

  // Jobs of the dispatch sequence, in order.
  std::vector<int> job_sequence() const;

  // Makespan so far: latest completion among dispatched operations.
  int partial_makespan() const;

  // Requires a complete schedule.
  int makespan() const;
  Solution to_solution() const;

 private:
  const Instance* inst_;
  std::vector<Dispatch> seq_;
  std::vector<int> next_op_;
  std::vector<int> job_ready_;
  std::vector<int> mach_ready_;
  std::vector<std::vector<int>> start_;  // -1 while undispatched
};

int makespan_of(const Solution& sol);

struct VerifyResult {
  bool ok = true;
  std::string violation;  // empty when ok
};

// Independent feasibility check of a start-time table: all starts present
// and non-negative, no two operations overlap on a machine, and each job's
// operations run in route order. Depends only on the table, not on the
// dispatch order that produced it. Violations are scanned in a fixed
// order: negative/missing starts, then machine overlaps by machine id,
// then job precedence by job id.
VerifyResult verify_schedule(const Instance& inst, const std::vector<std::vector<int>>& start);

// Rows "job,op_index,machine,start,duration" (1-based ids), ordered by
// job then operation index.
std::string solution_to_csv(const Instance& inst, const Solution& sol);

}  // namespace jss

#endif
