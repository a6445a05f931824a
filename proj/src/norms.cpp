#include "fibsum/norms.hpp"

#include <string>

#include "fibsum/errors.hpp"

namespace fibsum {

namespace {

void require_order(int k) {
  if (k < 2) throw DomainError("k must be >= 2, got " + std::to_string(k));
}

BigInt ipow(long base, unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), e);
  return r;
}

}  // namespace

BigInt delta_closed_form(int k) {
  require_order(k);
  const auto uk = static_cast<unsigned long>(k);
  BigInt total = ipow(2 * k, uk - 1) * (k - 1);
  for (unsigned long j = 0; j + 2 <= uk; ++j) total -= ipow(k + 1, uk - j) * ipow(2 * k, j);
  return total;
}

BigInt delta_recursion(int k) {
  require_order(k);
  BigInt delta = 1;
  BigInt power = 1;  // (k+1)^i
  for (int i = 1; i <= k; ++i) {
    power *= (k + 1);
    const BigInt signed_power = (i % 2 == 1) ? power : BigInt(-power);
    delta = signed_power - 2 * k * delta;
  }
  return delta;
}

BigInt delta_resultant(int k) {
  return resultant(char_poly(k), IntPolynomial{-2L * k, k + 1L});
}

int padic_val(long p, const BigInt& x) {
  if (p < 2 || mpz_probab_prime_p(BigInt(p).get_mpz_t(), 30) == 0) {
    throw DomainError(std::to_string(p) + " is not prime");
  }
  if (x == 0) throw DomainError("valuation of zero is infinite");
  BigInt rest;
  const BigInt prime(p);
  return static_cast<int>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t()));
}

std::vector<Mod25Entry> mod25_scan(int k_lo, int k_hi) {
  require_order(k_lo);
  if (k_hi < k_lo) throw DomainError("mod25_scan requires k_lo <= k_hi");
  std::vector<Mod25Entry> out;
  for (int k = k_lo; k <= k_hi; ++k) {
    const auto r = static_cast<unsigned>(mpz_fdiv_ui(delta_closed_form(k).get_mpz_t(), 25));
    out.push_back({k, r, k % 5 != 1 && r == 0});
  }
  return out;
}

bool periodicity_check(int k) {
  require_order(k);
  const BigInt lhs = delta_closed_form(k) * (k - 1);
  const BigInt rhs = delta_closed_form(k + 100) * (k + 99);
  const BigInt diff = lhs - rhs;
  return mpz_divisible_ui_p(diff.get_mpz_t(), 25) != 0;
}

}  // namespace fibsum
