#include "jss/instance.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace jss {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      if (!cur.empty() && cur.back() == '\r') cur.pop_back();
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty() && cur.back() == '\r') cur.pop_back();
  lines.push_back(cur);
  // Drop trailing blank lines so both "a\nb" and "a\nb\n" parse the same.
  while (!lines.empty() && lines.back().find_first_not_of(" \t") == std::string::npos)
    lines.pop_back();
  return lines;
}

std::vector<int> parse_int_row(const std::string& line, int line_no) {
  std::vector<int> row;
  const char* p = line.data();
  const char* end = p + line.size();
  while (p != end) {
    while (p != end && (*p == ' ' || *p == '\t')) ++p;
    if (p == end) break;
    int value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc() || (next != end && *next != ' ' && *next != '\t'))
      throw ParseError(line_no, "expected an integer, got '" + line + "'");
    row.push_back(value);
    p = next;
  }
  if (row.empty()) throw ParseError(line_no, "empty row");
  return row;
}

}  // namespace

Instance::Instance(int num_jobs, int num_machines, std::vector<std::vector<int>> proc_time,
                   std::vector<std::vector<int>> route)
    : num_jobs_(num_jobs),
      num_machines_(num_machines),
      proc_time_(std::move(proc_time)),
      route_(std::move(route)) {
  if (num_jobs_ < 1 || num_machines_ < 1)
    throw std::invalid_argument("instance needs at least one job and one machine");
  if (static_cast<int>(proc_time_.size()) != num_jobs_ ||
      static_cast<int>(route_.size()) != num_jobs_)
    throw std::invalid_argument("row count does not match job count");
  std::vector<char> seen(static_cast<size_t>(num_machines_));
  for (int j = 0; j < num_jobs_; ++j) {
    if (static_cast<int>(proc_time_[j].size()) != num_machines_ ||
        static_cast<int>(route_[j].size()) != num_machines_)
      throw std::invalid_argument("column count does not match machine count");
    for (int i = 0; i < num_machines_; ++i) {
      if (proc_time_[j][i] < 1) throw std::invalid_argument("processing time below 1");
      if (route_[j][i] < 0 || route_[j][i] >= num_machines_)
        throw std::invalid_argument("machine id out of range");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (int i = 0; i < num_machines_; ++i) seen[route_[j][i]] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      throw std::invalid_argument("route row is not a permutation of the machines");
  }
  tail_.assign(num_jobs_, std::vector<int>(num_machines_ + 1, 0));
  for (int j = 0; j < num_jobs_; ++j)
    for (int i = num_machines_ - 1; i >= 0; --i)
      tail_[j][i] = tail_[j][i + 1] + proc_time_[j][i];
}

Instance parse_instance(const std::string& text) {
  const std::vector<std::string> lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, "empty input");

  const std::vector<int> header = parse_int_row(lines[0], 1);
  if (header.size() != 2) throw ParseError(1, "header must be '<jobs> <machines>'");
  const int n = header[0];
  const int m = header[1];
  if (n < 1 || m < 1) throw ParseError(1, "job and machine counts must be positive");
  if (static_cast<int>(lines.size()) != 1 + 2 * n)
    throw ParseError(static_cast<int>(lines.size()),
                     "expected " + std::to_string(1 + 2 * n) + " rows, got " +
                         std::to_string(lines.size()));

  std::vector<std::vector<int>> proc(n), route(n);
  for (int j = 0; j < n; ++j) {
    const int line_no = 2 + j;
    proc[j] = parse_int_row(lines[line_no - 1], line_no);
    if (static_cast<int>(proc[j].size()) != m)
      throw ParseError(line_no, "expected " + std::to_string(m) + " processing times");
    for (int t : proc[j])
      if (t < 1) throw ParseError(line_no, "processing time below 1");
  }
  for (int j = 0; j < n; ++j) {
    const int line_no = 2 + n + j;
    route[j] = parse_int_row(lines[line_no - 1], line_no);
    if (static_cast<int>(route[j].size()) != m)
      throw ParseError(line_no, "expected " + std::to_string(m) + " machine ids");
    std::vector<char> seen(static_cast<size_t>(m), 0);
    for (int& a : route[j]) {
      if (a < 1 || a > m)
        throw ParseError(line_no, "machine id " + std::to_string(a) + " out of 1.." + std::to_string(m));
      if (seen[a - 1]) throw ParseError(line_no, "machine id " + std::to_string(a) + " repeated");
      seen[a - 1] = 1;
      a -= 1;  // 1-based in files, 0-based internally
    }
  }
  return Instance(n, m, std::move(proc), std::move(route));
}

std::string write_instance(const Instance& inst) {
  std::ostringstream out;
  out << inst.num_jobs() << ' ' << inst.num_machines();
  for (int j = 0; j < inst.num_jobs(); ++j) {
    out << '\n';
    for (int i = 0; i < inst.num_machines(); ++i) {
      if (i) out << ' ';
      out << inst.proc_time(j, i);
    }
  }
  for (int j = 0; j < inst.num_jobs(); ++j) {
    out << '\n';
    for (int i = 0; i < inst.num_machines(); ++i) {
      if (i) out << ' ';
      out << inst.machine(j, i) + 1;
    }
  }
  return out.str();
}

Instance generate_instance(int num_jobs, int num_machines, int p_min, int p_max,
                           std::uint64_t seed) {
  if (num_jobs < 1 || num_machines < 1)
    throw std::invalid_argument("job and machine counts must be positive");
  if (p_min < 1 || p_max < p_min)
    throw std::invalid_argument("need 1 <= p_min <= p_max");

  Rng rng(seed);
  std::vector<std::vector<int>> proc(num_jobs, std::vector<int>(num_machines));
  std::vector<std::vector<int>> route(num_jobs, std::vector<int>(num_machines));
  for (int j = 0; j < num_jobs; ++j) {
    for (int i = 0; i < num_machines; ++i) proc[j][i] = rng.uniform_int(p_min, p_max);
    std::iota(route[j].begin(), route[j].end(), 0);
    for (int i = num_machines - 1; i >= 1; --i)
      std::swap(route[j][i], route[j][rng.uniform_int(0, i)]);
  }
  return Instance(num_jobs, num_machines, std::move(proc), std::move(route));
}

}  // namespace jss
