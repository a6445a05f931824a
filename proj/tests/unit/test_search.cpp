#include <doctest.h>

#include <set>

#include "fibsum/baker.hpp"
#include "fibsum/errors.hpp"
#include "fibsum/search.hpp"
#include "fibsum/seq_core.hpp"

using namespace fibsum;

namespace {

// Quadratic oracle: recompute each window from scratch and test against a Fibonacci table.
std::vector<std::pair<std::int64_t, std::int64_t>> brute(int k, int d, std::int64_t n_max) {
  std::vector<BigInt> fib{0, 1, 1};
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  const RecurrenceOrder order(k);
  for (std::int64_t n = order.first_index(); n <= n_max; ++n) {
    BigInt s = 0;
    for (int j = 0; j <= d; ++j) s += kbonacci(order, n + j);
    while (fib.back() < s) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
    for (std::size_t m = 0; m < fib.size(); ++m) {
      if (fib[m] == s) out.emplace_back(n, static_cast<std::int64_t>(m));
    }
  }
  return out;
}

std::vector<std::pair<std::int64_t, std::int64_t>> pairs(const SearchReport& r) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (const auto& s : r.solutions) out.emplace_back(s.n, s.m);
  return out;
}

}  // namespace

TEST_CASE("tribonacci d = 1 solutions") {
  const auto r = find_solutions(3, 1, 500);
  const std::vector<std::pair<std::int64_t, std::int64_t>> expected{
      {-1, 0}, {0, 1}, {0, 2}, {1, 3}, {2, 4}};
  CHECK(pairs(r) == expected);
  CHECK(r.scanned_count == 502);
}

TEST_CASE("agrees with the brute-force oracle") {
  for (int k = 2; k <= 6; ++k) {
    for (int d = 0; d <= 4; ++d) CHECK(pairs(find_solutions(k, d, 120)) == brute(k, d, 120));
  }
}

TEST_CASE("partitioned search is deterministic") {
  for (int k : {3, 4, 5}) {
    for (int d : {0, 1, 2}) {
      const auto seq = find_solutions(k, d, 700);
      for (int parts : {2, 4, 7, 16}) {
        const auto par = find_solutions(k, d, 700, {4, parts});
        CHECK(par.solutions == seq.solutions);
        CHECK(par.partition_count == parts);
      }
    }
  }
}

TEST_CASE("intersection scans") {
  CHECK(intersection_scan(3, 500) == std::set<BigInt>{0, 1, 2, 13});
  for (int k = 4; k <= 10; ++k) CHECK(intersection_scan(k, 500) == std::set<BigInt>{0, 1, 2, 8});
  CHECK_THROWS_AS(intersection_scan(2, 10), DomainError);
}

TEST_CASE("k = 2 characterization") {
  const K2Report r = verify_prop_k2(10, 200);
  CHECK(r.ok());
  CHECK(r.cases_checked == 11 * 201);
  CHECK(r.sandwich_checked == 9 * 200);
  bool saw_d2 = false;
  for (const auto& c : r.solutions) {
    if (c.d == 2) {
      CHECK(c.n == 0);
      CHECK(c.ms == std::vector<std::int64_t>{3});
      saw_d2 = true;
    }
  }
  CHECK(saw_d2);
}

TEST_CASE("growth bounds") {
  for (int k = 2; k <= 5; ++k) CHECK(verify_growth(k, 200, 256).ok());
}

TEST_CASE("bound consistency") {
  const BoundReport r = derive_bounds(3, 1, 256);
  CHECK(bound_consistency(3, 1, 300, r));
  BoundReport tight = r;
  tight.N = 2;
  CHECK_FALSE(bound_consistency(3, 1, 300, tight));
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(find_solutions(3, -1, 10), DomainError);
  CHECK_THROWS_AS(find_solutions(3, 1, -5), DomainError);
  CHECK_THROWS_AS(find_solutions(3, 1, 10, {0, 0}), DomainError);
}
