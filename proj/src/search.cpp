#include "fibsum/search.hpp"

#include <algorithm>
#include <thread>

#include "fibsum/errors.hpp"
#include "fibsum/roots.hpp"
#include "fibsum/seq_core.hpp"

namespace fibsum {

std::vector<Solution> find_solutions_in(int k, int d, std::int64_t n_lo, std::int64_t n_hi) {
  const RecurrenceOrder order(k);
  if (d < 0) throw DomainError("d must be >= 0");
  std::vector<Solution> out;
  if (n_hi < n_lo) return out;

  // tail sits at index n, head at n + d; sum is the window between them.
  KbonacciStream tail(order, n_lo);
  KbonacciStream head(order, n_lo);
  BigInt sum = head.value();
  for (int j = 0; j < d; ++j) {
    head.advance();
    sum += head.value();
  }
  // Fibonacci walker: fm = F_m is the first Fibonacci number >= sum.
  std::int64_t m = 0;
  BigInt fm = 0, fm1 = 1;
  for (std::int64_t n = n_lo;; ++n) {
    while (fm < sum) {
      fm += fm1;
      std::swap(fm, fm1);
      ++m;
    }
    if (fm == sum) {
      out.push_back({k, d, n, m, sum});
      if (fm1 == sum) out.push_back({k, d, n, m + 1, sum});  // F_1 = F_2
    }
    if (n == n_hi) break;
    sum -= tail.value();
    tail.advance();
    head.advance();
    sum += head.value();
  }
  return out;
}

SearchReport find_solutions(int k, int d, std::int64_t n_max, SearchOptions options) {
  const RecurrenceOrder order(k);
  if (d < 0) throw DomainError("d must be >= 0");
  if (n_max < order.first_index()) throw DomainError("n_max below -(k-2)");
  if (options.threads < 1) throw DomainError("threads must be >= 1");
  const auto start = std::chrono::steady_clock::now();

  const std::int64_t first = order.first_index();
  const std::int64_t count = n_max - first + 1;
  const int parts = static_cast<int>(
      std::clamp<std::int64_t>(options.partitions > 0 ? options.partitions : options.threads, 1,
                               count));

  std::vector<std::vector<Solution>> chunks(static_cast<std::size_t>(parts));
  auto run_chunk = [&](int i) {
    const std::int64_t lo = first + count * i / parts;
    const std::int64_t hi = first + count * (i + 1) / parts - 1;
    chunks[static_cast<std::size_t>(i)] = find_solutions_in(k, d, lo, hi);
  };
  const int workers = std::min(options.threads, parts);
  if (workers == 1) {
    for (int i = 0; i < parts; ++i) run_chunk(i);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (int i = w; i < parts; i += workers) run_chunk(i);
      });
    }
  }

  SearchReport report;
  report.k = k;
  report.d = d;
  report.n_max = n_max;
  report.scanned_count = count;
  report.partition_count = parts;
  for (auto& c : chunks) {
    report.solutions.insert(report.solutions.end(), std::make_move_iterator(c.begin()),
                            std::make_move_iterator(c.end()));
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

std::set<BigInt> intersection_scan(int k, std::int64_t n_max) {
  if (k < 3) throw DomainError("intersection_scan needs k >= 3");
  if (n_max < 1) throw DomainError("intersection_scan needs n_max >= 1");
  std::set<BigInt> values;
  for (const auto& s : find_solutions(k, 0, n_max).solutions) values.insert(s.value);
  return values;
}

K2Report verify_prop_k2(int d_max, std::int64_t n_max) {
  if (d_max < 2 || n_max < 1) throw DomainError("verify_prop_k2 needs d_max >= 2, n_max >= 1");
  K2Report report;
  report.d_max = d_max;
  report.n_max = n_max;
  const RecurrenceOrder two(2);
  std::vector<BigInt> fib;
  for (std::int64_t i = 0; i <= n_max + d_max + 2; ++i) {
    fib.push_back(i < 2 ? BigInt(i) : BigInt(fib[i - 1] + fib[i - 2]));
  }
  for (int d = 0; d <= d_max; ++d) {
    for (std::int64_t n = 0; n <= n_max; ++n) {
      const BigInt s = window_sum(two, n, d);
      auto ms = fib_index_of(s);
      const bool expected = d <= 1 || (d == 2 && n == 0);
      ++report.cases_checked;
      if (!ms.empty()) report.solutions.push_back({d, n, ms});
      if (ms.empty() == expected) report.mismatches.push_back({d, n, ms});
      if (n >= 1 && d >= 2) {
        ++report.sandwich_checked;
        if (!(fib[n + d + 1] < s && s < fib[n + d + 2])) {
          report.sandwich_failures.push_back({d, n, ms});
        }
      }
    }
  }
  return report;
}

GrowthReport verify_growth(int k, std::int64_t n_max, Precision precision_bits) {
  if (n_max < 2) throw DomainError("verify_growth needs n_max >= 2");
  GrowthReport report;
  report.k = k;
  report.n_max = n_max;
  report.precision_bits = precision_bits;
  const Interval alpha = dominant_root(k, precision_bits);
  KbonacciStream s(RecurrenceOrder(k), 1);
  BigInt two_power = 1;  // 2^{n-1}
  for (std::int64_t n = 1; n <= n_max; ++n, s.advance(), two_power *= 2) {
    const BigInt& f = s.value();
    if (f > two_power) report.power_of_two_failures.push_back(n);
    if (n < 2) continue;
    ++report.checked;
    const Interval exact(f, precision_bits);
    const bool low = certainly_less_equal(pow(alpha, static_cast<long>(n - 2)), exact);
    const bool high = certainly_less_equal(exact, pow(alpha, static_cast<long>(n - 1)));
    if (!low || !high) report.dominant_failures.push_back(n);
  }
  return report;
}

bool bound_consistency(int k, int d, std::int64_t n_max, const BoundReport& report,
                       SearchOptions options) {
  const auto found = find_solutions(k, d, n_max, options);
  return std::all_of(found.solutions.begin(), found.solutions.end(), [&](const Solution& s) {
    return BigInt(static_cast<long>(s.n)) < report.N && BigInt(static_cast<long>(s.m)) < report.M;
  });
}

}  // namespace fibsum
