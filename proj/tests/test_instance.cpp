#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "jss/instance.hpp"
#include "oracle.hpp"

using jss::Instance;
using jss::ParseError;
using jss::Rng;

namespace {

// Two jobs, two machines. Job 1: 3 on M1 then 2 on M2. Job 2: 2 on M2
// then 4 on M1. Optimal makespan 7. Used as the worked example throughout
// the test suite.
const std::string kTwoByTwo = "2 2\n3 2\n2 4\n1 2\n2 1";

}  // namespace

TEST_CASE("parse reads the two-by-two example") {
  const Instance inst = jss::parse_instance(kTwoByTwo);
  CHECK(inst.num_jobs() == 2);
  CHECK(inst.num_machines() == 2);
  CHECK(inst.num_operations() == 4);
  CHECK(inst.proc_time(0, 0) == 3);
  CHECK(inst.proc_time(0, 1) == 2);
  CHECK(inst.proc_time(1, 0) == 2);
  CHECK(inst.proc_time(1, 1) == 4);
  CHECK(inst.machine(0, 0) == 0);
  CHECK(inst.machine(0, 1) == 1);
  CHECK(inst.machine(1, 0) == 1);
  CHECK(inst.machine(1, 1) == 0);
}

TEST_CASE("parse is whitespace tolerant") {
  const Instance canon = jss::parse_instance(kTwoByTwo);
  CHECK(jss::parse_instance("2 2\n3 2\n2 4\n1 2\n2 1\n") == canon);
  CHECK(jss::parse_instance("  2\t2 \n 3  2\n2 4\n1 2\n2 1\n\n") == canon);
  CHECK(jss::parse_instance("2 2\r\n3 2\r\n2 4\r\n1 2\r\n2 1\r\n") == canon);
}

TEST_CASE("write produces the canonical form") {
  const Instance inst = jss::parse_instance(kTwoByTwo);
  CHECK(jss::write_instance(inst) == kTwoByTwo);
  CHECK(jss::write_instance(jss::parse_instance(" 2  2\n3 2\n2 4\n1 2\n2 1\n")) == kTwoByTwo);
}

TEST_CASE("parse and write round trip on random instances") {
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t seed = jss::derive_seed(7, "roundtrip " + std::to_string(i));
    Rng dims(seed);
    const int n = dims.uniform_int(1, 8);
    const int m = dims.uniform_int(1, 8);
    const Instance inst = jss::generate_instance(n, m, 1, 99, seed);
    const Instance back = jss::parse_instance(jss::write_instance(inst));
    CHECK(back == inst);
  }
}

TEST_CASE("parse rejects malformed input with line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      jss::parse_instance(text);
    } catch (const ParseError& e) {
      return e.line_number;
    }
    return -1;
  };
  CHECK(line_of("") == 1);
  CHECK(line_of("2") == 1);                                // header too short
  CHECK(line_of("2 2 2\n3 2\n2 4\n1 2\n2 1") == 1);        // header too long
  CHECK(line_of("0 2\n3 2\n2 4\n1 2\n2 1") == 1);          // zero jobs
  CHECK(line_of("2 2\n3 2\n2 4\n1 2") == 4);               // missing route row
  CHECK(line_of("2 2\n3 2\n2 4\n1 2\n2 1\n9 9") == 6);     // extra row
  CHECK(line_of("2 2\nx 2\n2 4\n1 2\n2 1") == 2);          // non-integer
  CHECK(line_of("2 2\n3 2\n0 4\n1 2\n2 1") == 3);          // proc time below 1
  CHECK(line_of("2 2\n3 2\n-2 4\n1 2\n2 1") == 3);         // negative proc time
  CHECK(line_of("2 2\n3 2 5\n2 4\n1 2\n2 1") == 2);        // too many times
  CHECK(line_of("2 2\n3 2\n2 4\n1 3\n2 1") == 4);          // machine id out of range
  CHECK(line_of("2 2\n3 2\n2 4\n1 2\n2 2") == 5);          // repeated machine id
  CHECK(line_of("2 2\n3 2\n2 4\n1\n2 1") == 4);            // short route row
}

TEST_CASE("instance constructor validates its arguments") {
  CHECK_THROWS_AS(Instance(0, 1, {}, {}), std::invalid_argument);
  CHECK_THROWS_AS(Instance(1, 1, {{0}}, {{0}}), std::invalid_argument);   // proc < 1
  CHECK_THROWS_AS(Instance(1, 2, {{1, 1}}, {{0, 0}}), std::invalid_argument);  // not a permutation
  CHECK_THROWS_AS(Instance(1, 2, {{1, 1}}, {{0, 2}}), std::invalid_argument);  // machine out of range
  CHECK_THROWS_AS(Instance(2, 1, {{1}}, {{0}}), std::invalid_argument);   // row count mismatch
}

TEST_CASE("tail work is the suffix sum of processing times") {
  const Instance inst = jss::parse_instance(kTwoByTwo);
  CHECK(inst.tail_work(0, 0) == 5);
  CHECK(inst.tail_work(0, 1) == 2);
  CHECK(inst.tail_work(1, 0) == 6);
  CHECK(inst.tail_work(1, 1) == 4);
  CHECK(inst.total_work(0) == 5);
  CHECK(inst.total_work(1) == 6);

  const Instance big = jss::generate_instance(7, 5, 1, 50, 99);
  for (int j = 0; j < big.num_jobs(); ++j) {
    int sum = 0;
    for (int op = big.num_machines() - 1; op >= 0; --op) {
      sum += big.proc_time(j, op);
      CHECK(big.tail_work(j, op) == sum);
    }
  }
}

TEST_CASE("generate is deterministic in the seed") {
  const Instance a = jss::generate_instance(6, 6, 1, 99, 12345);
  const Instance b = jss::generate_instance(6, 6, 1, 99, 12345);
  const Instance c = jss::generate_instance(6, 6, 1, 99, 12346);
  CHECK(a == b);
  CHECK_FALSE(a == c);
}

TEST_CASE("generate respects the processing time range") {
  for (int i = 0; i < 50; ++i) {
    const Instance inst = jss::generate_instance(4, 4, 5, 9, 1000 + i);
    for (int j = 0; j < 4; ++j) {
      for (int op = 0; op < 4; ++op) {
        CHECK(inst.proc_time(j, op) >= 5);
        CHECK(inst.proc_time(j, op) <= 9);
      }
    }
  }
  const Instance fixed = jss::generate_instance(3, 3, 7, 7, 2);
  for (int j = 0; j < 3; ++j)
    for (int op = 0; op < 3; ++op) CHECK(fixed.proc_time(j, op) == 7);
}

TEST_CASE("generate rejects bad arguments") {
  CHECK_THROWS_AS(jss::generate_instance(0, 3, 1, 9, 1), std::invalid_argument);
  CHECK_THROWS_AS(jss::generate_instance(3, 0, 1, 9, 1), std::invalid_argument);
  CHECK_THROWS_AS(jss::generate_instance(3, 3, 0, 9, 1), std::invalid_argument);
  CHECK_THROWS_AS(jss::generate_instance(3, 3, 5, 4, 1), std::invalid_argument);
}

TEST_CASE("generated processing times are uniform over the range") {
  // 100 instances of 100 jobs x 10 machines with p in 1..10 give 1e5
  // draws; Pearson test at significance 0.01.
  std::vector<long long> counts(10, 0);
  for (int i = 0; i < 100; ++i) {
    const Instance inst = jss::generate_instance(100, 10, 1, 10, jss::derive_seed(11, "chi " + std::to_string(i)));
    for (int j = 0; j < inst.num_jobs(); ++j)
      for (int op = 0; op < inst.num_machines(); ++op) ++counts[inst.proc_time(j, op) - 1];
  }
  const std::vector<double> expected(10, 10000.0);
  const double stat = jss::testing::chi_square_stat(counts, expected);
  CHECK(stat < jss::testing::chi_square_critical(9, jss::testing::kZ99));
}

TEST_CASE("generated routes are uniform over permutations") {
  // Three machines, 6000 single-job instances: each of the 6 permutations
  // should appear about 1000 times.
  std::vector<long long> counts(6, 0);
  for (int i = 0; i < 6000; ++i) {
    const Instance inst =
        jss::generate_instance(1, 3, 1, 1, jss::derive_seed(13, "perm " + std::to_string(i)));
    const int code = inst.machine(0, 0) * 2 + (inst.machine(0, 1) > inst.machine(0, 2) ? 1 : 0);
    ++counts[code];
  }
  const std::vector<double> expected(6, 1000.0);
  const double stat = jss::testing::chi_square_stat(counts, expected);
  CHECK(stat < jss::testing::chi_square_critical(5, jss::testing::kZ99));
}
