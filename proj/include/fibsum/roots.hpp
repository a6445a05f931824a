#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fibsum/complex_box.hpp"
#include "fibsum/interval.hpp"
#include "fibsum/polynomial.hpp"

namespace fibsum {

/// Certified enclosures of all roots of f_k.
struct RootSet {
  int k = 0;
  Precision precision_bits = kDefaultPrecision;
  /// Ordered by decreasing modulus; roots[0] is the dominant root.
  std::vector<ComplexBox> roots;
  Interval dominant;

  /// Certified upper bound on |alpha_2| (0 when k has no second root).
  Interval second_modulus() const;
  /// Names of RootSet invariants that could not be certified; empty when
  /// every invariant holds.
  std::vector<std::string> invariant_violations() const;
};

/// Enclosure of the real root of f_k in (2(1-2^-k), 2), width <= 2^-(bits-8).
Interval dominant_root(int k, Precision precision_bits);

/// All roots of a squarefree polynomial, as pairwise-disjoint certified
/// boxes sorted by decreasing modulus. Real roots get a zero-width
/// imaginary part. Throws InsufficientPrecision when certification fails.
std::vector<ComplexBox> isolate_roots(const IntPolynomial& p, Precision precision_bits);

RootSet all_roots(int k, Precision precision_bits);

/// Binet-type evaluation of F_n^{(k)}; throws InsufficientPrecision when the
/// enclosure is not narrower than 1/2.
Interval binet_eval(const RootSet& roots, std::int64_t n);
Interval binet_eval(int k, std::int64_t n, Precision precision_bits);

/// The unique integer inside an enclosure of width < 1/2.
BigInt nearest_integer(const Interval& x);

/// Weil height of a root of the primitive polynomial g (positive leading
/// coefficient), from certified enclosures of all its roots.
Interval weil_height(const IntPolynomial& g, Precision precision_bits);

}  // namespace fibsum
