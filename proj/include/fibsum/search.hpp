#pragma once

#include <chrono>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "fibsum/baker.hpp"
#include "fibsum/bigint.hpp"
#include "fibsum/interval.hpp"

namespace fibsum {

/// F_n^{(k)} + ... + F_{n+d}^{(k)} = F_m = value.
struct Solution {
  int k = 0;
  int d = 0;
  std::int64_t n = 0;
  std::int64_t m = 0;
  BigInt value;

  bool operator==(const Solution&) const = default;
};

struct SearchReport {
  int k = 0;
  int d = 0;
  std::int64_t n_max = 0;
  /// Sorted by (n, m), no duplicates.
  std::vector<Solution> solutions;
  std::int64_t scanned_count = 0;
  std::chrono::nanoseconds elapsed{0};
  int partition_count = 1;
};

struct SearchOptions {
  int threads = 1;
  /// Number of contiguous index chunks; 0 means one per thread.
  int partitions = 0;
};

/// Every solution with -(k-2) <= n <= n_max, using exact arithmetic only.
SearchReport find_solutions(int k, int d, std::int64_t n_max, SearchOptions options = {});

/// Solutions with n in [n_lo, n_hi], seeded independently of any other range.
std::vector<Solution> find_solutions_in(int k, int d, std::int64_t n_lo, std::int64_t n_hi);

/// Values F_n^{(k)}, n <= n_max, that are Fibonacci numbers.
std::set<BigInt> intersection_scan(int k, std::int64_t n_max);

struct K2Case {
  int d;
  std::int64_t n;
  std::vector<std::int64_t> ms;
};

struct K2Report {
  int d_max = 0;
  std::int64_t n_max = 0;
  std::int64_t cases_checked = 0;
  std::int64_t sandwich_checked = 0;
  /// Every (d, n) that has a solution.
  std::vector<K2Case> solutions;
  /// (d, n) whose solvability disagrees with "d in {0,1} or (d,n) = (2,0)".
  std::vector<K2Case> mismatches;
  /// (d, n), n >= 1, d >= 2, where F_{n+d+1} < S < F_{n+d+2} fails.
  std::vector<K2Case> sandwich_failures;

  bool ok() const { return mismatches.empty() && sandwich_failures.empty(); }
};

K2Report verify_prop_k2(int d_max, std::int64_t n_max);

struct GrowthReport {
  int k = 0;
  std::int64_t n_max = 0;
  Precision precision_bits = kDefaultPrecision;
  std::int64_t checked = 0;
  /// Indices where alpha_1^{n-2} <= F_n <= alpha_1^{n-1} was not certified.
  std::vector<std::int64_t> dominant_failures;
  /// Indices where F_n <= 2^{n-1} fails.
  std::vector<std::int64_t> power_of_two_failures;

  bool ok() const { return dominant_failures.empty() && power_of_two_failures.empty(); }
};

GrowthReport verify_growth(int k, std::int64_t n_max, Precision precision_bits);

/// True iff every solution with n <= n_max satisfies n < N and m < M.
bool bound_consistency(int k, int d, std::int64_t n_max, const BoundReport& report,
                       SearchOptions options = {});

}  // namespace fibsum
