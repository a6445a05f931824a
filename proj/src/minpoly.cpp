#include "fibsum/minpoly.hpp"

#include "fibsum/errors.hpp"

namespace fibsum {

InconclusiveIrreducibility::InconclusiveIrreducibility(IntPolynomial candidate)
    : std::runtime_error("irreducibility of " + candidate.to_string() +
                         " not established by the prime ladder"),
      candidate_(std::move(candidate)) {}

IntPolynomial eliminate_quotient(const IntPolynomial& f, const IntPolynomial& num,
                                 const IntPolynomial& den) {
  if (f.degree() < 1) throw DomainError("eliminate_quotient needs deg f >= 1");
  const std::size_t width = std::max(num.coefficients().size(), den.coefficients().size());
  const int points = f.degree() + 1;

  std::vector<BigRational> xs, table;
  for (int i = 0; i < points; ++i) {
    std::vector<BigInt> g(std::max<std::size_t>(width, 1), BigInt(0));
    for (std::size_t j = 0; j < width; ++j) {
      g[j] = den.coefficient(static_cast<int>(j)) * i - num.coefficient(static_cast<int>(j));
    }
    xs.emplace_back(i);
    table.emplace_back(resultant_formal(f.coefficients(), g));
  }
  // Newton divided differences, in place.
  for (int level = 1; level < points; ++level) {
    for (int i = points - 1; i >= level; --i) {
      table[i] = (table[i] - table[i - 1]) / (xs[i] - xs[i - level]);
    }
  }
  // Expand c_0 + c_1 (y - x_0) + c_2 (y - x_0)(y - x_1) + ... by Horner.
  std::vector<BigRational> poly{table[points - 1]};
  for (int i = points - 2; i >= 0; --i) {
    std::vector<BigRational> next(poly.size() + 1, BigRational(0));
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] -= poly[j] * xs[i];
    }
    next[0] += table[i];
    poly = std::move(next);
  }
  std::vector<BigInt> out;
  for (auto& c : poly) {
    c.canonicalize();
    if (c.get_den() != 1) throw DomainError("eliminate_quotient: non-integral interpolant");
    out.push_back(c.get_num());
  }
  return IntPolynomial(std::move(out));
}

MinimalPolynomial minpoly_of_quotient(const IntPolynomial& f, const IntPolynomial& num,
                                      const IntPolynomial& den, const ComplexBox& root) {
  if (den.is_zero() || resultant(f, den) == 0) {
    throw DomainError("denominator vanishes at a root of " + f.to_string());
  }
  IntPolynomial candidate = squarefree_part(eliminate_quotient(f, num, den).primitive_part());
  if (!candidate(root).contains_zero()) {
    throw DomainError("selected value is not a root of " + candidate.to_string());
  }
  auto witness = irreducibility_witness(candidate);
  if (!witness) throw InconclusiveIrreducibility(candidate);
  return {candidate, *witness};
}

}  // namespace fibsum
