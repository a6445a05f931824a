#pragma once

#include <cstdint>
#include <deque>
#include <vector>

#include "fibsum/bigint.hpp"

namespace fibsum {

/// Order k of the k-generalized Fibonacci recurrence (k >= 2).
class RecurrenceOrder {
 public:
  explicit RecurrenceOrder(int k);
  int value() const { return k_; }
  /// Smallest admissible index, -(k-2).
  std::int64_t first_index() const { return -(k_ - 2); }

 private:
  int k_;
};

/// Streams F_n^{(k)} for consecutive n, keeping only the last k values.
class KbonacciStream {
 public:
  /// Positions the stream at index `start` (>= -(k-2)).
  KbonacciStream(RecurrenceOrder k, std::int64_t start);

  std::int64_t index() const { return index_; }
  const BigInt& value() const { return window_.back(); }
  void advance();

 private:
  int k_;
  std::int64_t index_;
  std::deque<BigInt> window_;
  BigInt sum_;
};

BigInt kbonacci(RecurrenceOrder k, std::int64_t n);
BigInt fibonacci(std::int64_t n);

/// F_n^{(k)} + ... + F_{n+d}^{(k)}.
BigInt window_sum(RecurrenceOrder k, std::int64_t n, std::int64_t d);

/// All m >= 0 with F_m = x, ascending. Empty if x is not a Fibonacci number.
std::vector<std::int64_t> fib_index_of(const BigInt& x);

/// F_{n+d+2} - F_{n+1}, the k = 2 window sum in closed form.
BigInt k2_window_closed_form(std::int64_t n, std::int64_t d);

}  // namespace fibsum
