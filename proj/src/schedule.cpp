#include "jss/schedule.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace jss {

PartialSchedule::PartialSchedule(const Instance& inst) : inst_(&inst) {
  seq_.reserve(inst.num_operations());
  next_op_.assign(inst.num_jobs(), 0);
  job_ready_.assign(inst.num_jobs(), 0);
  mach_ready_.assign(inst.num_machines(), 0);
  start_.assign(inst.num_jobs(), std::vector<int>(inst.num_machines(), -1));
}

void PartialSchedule::reset() {
  seq_.clear();
  std::fill(next_op_.begin(), next_op_.end(), 0);
  std::fill(job_ready_.begin(), job_ready_.end(), 0);
  std::fill(mach_ready_.begin(), mach_ready_.end(), 0);
  for (auto& row : start_) std::fill(row.begin(), row.end(), -1);
}

std::vector<int> PartialSchedule::eligible_jobs() const {
  std::vector<int> jobs;
  jobs.reserve(inst_->num_jobs());
  for (int j = 0; j < inst_->num_jobs(); ++j)
    if (next_op_[j] < inst_->num_machines()) jobs.push_back(j);
  return jobs;
}

void PartialSchedule::dispatch(int job) {
  if (job < 0 || job >= inst_->num_jobs() || job_complete(job))
    throw std::logic_error("dispatch of an ineligible job");
  const int op = next_op_[job];
  const int machine = inst_->machine(job, op);
  const int start = std::max(job_ready_[job], mach_ready_[machine]);
  const int finish = start + inst_->proc_time(job, op);
  seq_.push_back({job, machine, start, job_ready_[job], mach_ready_[machine]});
  job_ready_[job] = finish;
  mach_ready_[machine] = finish;
  start_[job][op] = start;
  next_op_[job] = op + 1;
}

void PartialSchedule::undo_last() {
  if (seq_.empty()) throw std::logic_error("nothing to undo");
  const Dispatch d = seq_.back();
  seq_.pop_back();
  next_op_[d.job] -= 1;
  start_[d.job][next_op_[d.job]] = -1;
  job_ready_[d.job] = d.prev_job_ready;
  mach_ready_[d.machine] = d.prev_mach_ready;
}

std::vector<int> PartialSchedule::job_sequence() const {
  std::vector<int> jobs;
  jobs.reserve(seq_.size());
  for (const Dispatch& d : seq_) jobs.push_back(d.job);
  return jobs;
}

int PartialSchedule::partial_makespan() const {
  int best = 0;
  for (int j = 0; j < inst_->num_jobs(); ++j) best = std::max(best, job_ready_[j]);
  return best;
}

int PartialSchedule::makespan() const {
  if (!complete()) throw std::logic_error("makespan of an incomplete schedule");
  return partial_makespan();
}

Solution PartialSchedule::to_solution() const {
  if (!complete()) throw std::logic_error("to_solution on an incomplete schedule");
  return Solution{seq_, start_, partial_makespan()};
}

int makespan_of(const Solution& sol) {
  return sol.makespan;
}

VerifyResult verify_schedule(const Instance& inst, const std::vector<std::vector<int>>& start) {
  std::ostringstream msg;
  if (static_cast<int>(start.size()) != inst.num_jobs())
    return {false, "start table has wrong number of job rows"};
  for (int j = 0; j < inst.num_jobs(); ++j) {
    if (static_cast<int>(start[j].size()) != inst.num_machines())
      return {false, "start table row " + std::to_string(j + 1) + " has wrong length"};
    for (int i = 0; i < inst.num_machines(); ++i)
      if (start[j][i] < 0) {
        msg << "job " << j + 1 << " op " << i + 1 << " start " << start[j][i] << " is negative or missing";
        return {false, msg.str()};
      }
  }

  // One job at a time per machine: sort each machine's operations by start;
  // with starts sorted, any overlap shows up between neighbours.
  for (int a = 0; a < inst.num_machines(); ++a) {
    std::vector<std::pair<int, int>> ops;  // (start, job)
    ops.reserve(inst.num_jobs());
    for (int j = 0; j < inst.num_jobs(); ++j)
      for (int i = 0; i < inst.num_machines(); ++i)
        if (inst.machine(j, i) == a) ops.emplace_back(start[j][i], j);
    std::sort(ops.begin(), ops.end());
    for (size_t k = 0; k + 1 < ops.size(); ++k) {
      const auto [s, j] = ops[k];
      const int op = [&] {
        for (int i = 0;; ++i)
          if (inst.machine(j, i) == a) return i;
      }();
      if (s + inst.proc_time(j, op) > ops[k + 1].first) {
        msg << "machine " << a + 1 << ": jobs " << j + 1 << " and " << ops[k + 1].second + 1
            << " overlap";
        return {false, msg.str()};
      }
    }
  }

  // Route order within each job.
  for (int j = 0; j < inst.num_jobs(); ++j)
    for (int i = 1; i < inst.num_machines(); ++i)
      if (start[j][i] < start[j][i - 1] + inst.proc_time(j, i - 1)) {
        msg << "job " << j + 1 << ": op " << i + 1 << " starts before op " << i << " completes";
        return {false, msg.str()};
      }

  return {true, ""};
}

std::string solution_to_csv(const Instance& inst, const Solution& sol) {
  std::ostringstream out;
  out << "job,op_index,machine,start,duration\n";
  for (int j = 0; j < inst.num_jobs(); ++j)
    for (int i = 0; i < inst.num_machines(); ++i)
      out << j + 1 << ',' << i + 1 << ',' << inst.machine(j, i) + 1 << ',' << sol.start[j][i]
          << ',' << inst.proc_time(j, i) << '\n';
  return out.str();
}

}  // namespace jss
