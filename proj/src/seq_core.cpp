#include "fibsum/seq_core.hpp"

#include <string>

#include "fibsum/errors.hpp"

namespace fibsum {

RecurrenceOrder::RecurrenceOrder(int k) : k_(k) {
  if (k < 2) throw DomainError("recurrence order must be >= 2, got " + std::to_string(k));
}

KbonacciStream::KbonacciStream(RecurrenceOrder k, std::int64_t start)
    : k_(k.value()), index_(k.first_index() + k.value() - 1), sum_(1) {
  if (start < k.first_index()) {
    throw DomainError("index " + std::to_string(start) + " below -(k-2) for k=" +
                      std::to_string(k_));
  }
  // Seed window holds indices -(k-2) .. 1: k-1 zeros then a one.
  window_.assign(static_cast<std::size_t>(k_ - 1), BigInt(0));
  window_.emplace_back(1);
  if (start >= index_) {
    while (index_ < start) advance();
  } else {
    // start lies inside the seed window; trim the values past it.
    while (index_ > start) {
      sum_ -= window_.back();
      window_.pop_back();
      window_.emplace_front(0);
      --index_;
    }
  }
}

void KbonacciStream::advance() {
  // sum_ always equals the sum of the k values in the window. Indices up to
  // 1 are initial conditions, not produced by the recurrence.
  BigInt next = index_ + 1 < 1 ? BigInt(0) : (index_ + 1 == 1 ? BigInt(1) : sum_);
  sum_ += next;
  sum_ -= window_.front();
  window_.pop_front();
  window_.push_back(std::move(next));
  ++index_;
}

BigInt kbonacci(RecurrenceOrder k, std::int64_t n) { return KbonacciStream(k, n).value(); }

BigInt fibonacci(std::int64_t n) {
  if (n < 0) throw DomainError("fibonacci index must be >= 0, got " + std::to_string(n));
  return kbonacci(RecurrenceOrder(2), n);
}

BigInt window_sum(RecurrenceOrder k, std::int64_t n, std::int64_t d) {
  if (d < 0) throw DomainError("window length d must be >= 0");
  KbonacciStream s(k, n);
  BigInt total = s.value();
  for (std::int64_t j = 0; j < d; ++j) {
    s.advance();
    total += s.value();
  }
  return total;
}

std::vector<std::int64_t> fib_index_of(const BigInt& x) {
  if (x < 0) return {};
  if (x == 0) return {0};
  if (x == 1) return {1, 2};
  BigInt a = 1, b = 2;  // F_2, F_3
  std::int64_t m = 3;
  while (b < x) {
    a += b;
    std::swap(a, b);
    ++m;
  }
  if (b == x) return {m};
  return {};
}

BigInt k2_window_closed_form(std::int64_t n, std::int64_t d) {
  if (n < 0 || d < 0) throw DomainError("k2_window_closed_form requires n, d >= 0");
  return fibonacci(n + d + 2) - fibonacci(n + 1);
}

}  // namespace fibsum
