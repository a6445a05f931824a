#pragma once

#include <vector>

#include "fibsum/bigint.hpp"
#include "fibsum/polynomial.hpp"

namespace fibsum {

/// Delta(k) = N((k+1)alpha_1 - 2k) / (-1)^k, evaluated as
/// (2k)^{k-1}(k-1) - sum_{j=0}^{k-2} (k+1)^{k-j} (2k)^j.
BigInt delta_closed_form(int k);

/// delta_k = det of the multiplication-by-((k+1)alpha_1 - 2k) matrix, via
/// delta_i = (-1)^{i+1}(k+1)^i - 2k delta_{i-1}, delta_0 = 1.
BigInt delta_recursion(int k);

/// Res(f_k, (k+1)T - 2k), which equals (-1)^k Delta(k).
BigInt delta_resultant(int k);

/// v_p(x). Throws DomainError for x = 0 or p not prime.
int padic_val(long p, const BigInt& x);

struct Mod25Entry {
  int k;
  unsigned residue;  // Delta(k) mod 25 in [0, 25)
  bool flagged;      // k != 1 (mod 5) and residue == 0
};

std::vector<Mod25Entry> mod25_scan(int k_lo, int k_hi);

/// Delta(k)(k-1) == Delta(k+100)(k+99) (mod 25), exactly.
bool periodicity_check(int k);

}  // namespace fibsum
