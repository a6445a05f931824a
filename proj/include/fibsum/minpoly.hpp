#pragma once

#include <stdexcept>

#include "fibsum/complex_box.hpp"
#include "fibsum/polynomial.hpp"

namespace fibsum {

/// No prime in the ladder proved the candidate irreducible.
class InconclusiveIrreducibility : public std::runtime_error {
 public:
  explicit InconclusiveIrreducibility(IntPolynomial candidate);
  const IntPolynomial& candidate() const { return candidate_; }

 private:
  IntPolynomial candidate_;
};

/// Res_x(f(x), den(x) y - num(x)) as a polynomial in y, by exact evaluation
/// at deg(f)+1 integer points and interpolation.
IntPolynomial eliminate_quotient(const IntPolynomial& f, const IntPolynomial& num,
                                 const IntPolynomial& den);

struct MinimalPolynomial {
  IntPolynomial poly;
  /// Prime modulo which `poly` is irreducible.
  long witness_prime = 0;
};

/// Minimal primitive polynomial (positive leading coefficient) of
/// num(alpha)/den(alpha), where alpha is the root of the irreducible f whose
/// quotient value is enclosed by `root`.
MinimalPolynomial minpoly_of_quotient(const IntPolynomial& f, const IntPolynomial& num,
                                      const IntPolynomial& den, const ComplexBox& root);

}  // namespace fibsum
