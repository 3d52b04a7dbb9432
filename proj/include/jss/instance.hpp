#ifndef JSS_INSTANCE_HPP
#define JSS_INSTANCE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "jss/rng.hpp"

namespace jss {

// Job-shop problem data. Every job has exactly one operation per machine,
// so each job's machine route is a permutation of the machines.
//
// Internally jobs, machines and operation indices are 0-based; the text
// format (see parse_instance) uses 1-based machine ids.
//
// Immutable after construction; safe to share across concurrent solver runs.
class Instance {
 public:
  Instance(int num_jobs, int num_machines,
           std::vector<std::vector<int>> proc_time,
           std::vector<std::vector<int>> route);

  int num_jobs() const { return num_jobs_; }
  int num_machines() const { return num_machines_; }
  int num_operations() const { return num_jobs_ * num_machines_; }

  // Processing time of job j's op-th operation (processing order).
  int proc_time(int job, int op) const { return proc_time_[job][op]; }

  // 0-based machine of job j's op-th operation.
  int machine(int job, int op) const { return route_[job][op]; }

  // Total processing time of operations op, op+1, ..., m-1 of the job.
  int tail_work(int job, int op) const { return tail_[job][op]; }
  int total_work(int job) const { return tail_[job][0]; }

  const std::vector<std::vector<int>>& proc_times() const { return proc_time_; }
  const std::vector<std::vector<int>>& routes() const { return route_; }

  bool operator==(const Instance& other) const {
    return num_jobs_ == other.num_jobs_ && num_machines_ == other.num_machines_ &&
           proc_time_ == other.proc_time_ && route_ == other.route_;
  }

 private:
  int num_jobs_;
  int num_machines_;
  std::vector<std::vector<int>> proc_time_;  // [job][op]
  std::vector<std::vector<int>> route_;      // [job][op], 0-based machine
  std::vector<std::vector<int>> tail_;       // [job][op], suffix sums of proc_time
};

struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_number(line) {}
  int line_number;
};

// Instance text format:
//   line 1:          "<n> <m>"
//   lines 2..n+1:    m processing times of job j, in processing order
//   lines n+2..2n+1: m 1-based machine ids of job j, in processing order
// Tokens are separated by runs of blanks; the trailing newline is optional.
Instance parse_instance(const std::string& text);

// Canonical text form; parse_instance(write_instance(x)) == x.
// Single spaces between tokens, '\n' between rows, no trailing newline.
std::string write_instance(const Instance& inst);

// Random instance in the style of the classic benchmark generators:
// processing times i.i.d. uniform integers in [p_min, p_max], machine
// routes independent uniform permutations (Fisher-Yates).
//
// Draw order, per job: the m processing times first, then the m-1 shuffle
// draws of the route (swap indices from the high end down).
Instance generate_instance(int num_jobs, int num_machines, int p_min, int p_max,
                           std::uint64_t seed);

}  // namespace jss

#endif
