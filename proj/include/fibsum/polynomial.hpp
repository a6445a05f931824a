#pragma once

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fibsum/bigint.hpp"
#include "fibsum/complex_box.hpp"
#include "fibsum/interval.hpp"

namespace fibsum {

/// Univariate polynomial with BigInt coefficients in ascending degree order.
/// Trailing zero coefficients are never stored; the zero polynomial has no
/// coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> ascending);
  IntPolynomial(std::initializer_list<long> ascending);

  static IntPolynomial monomial(const BigInt& coefficient, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  /// Coefficient of T^i (zero past the degree).
  BigInt coefficient(int i) const;
  const BigInt& leading() const;

  /// gcd of the coefficients, nonnegative.
  BigInt content() const;
  /// Divides out the content and makes the leading coefficient positive.
  IntPolynomial primitive_part() const;
  IntPolynomial derivative() const;

  BigInt operator()(const BigInt& x) const;
  Interval operator()(const Interval& x) const;
  ComplexBox operator()(const ComplexBox& x) const;

  std::string to_string(char var = 'T') const;

  bool operator==(const IntPolynomial& other) const = default;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const BigInt& c, const IntPolynomial& a);

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

/// f_k(T) = T^k - T^{k-1} - ... - T - 1.
IntPolynomial char_poly(int k);

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
/// Scalar must be an exact integral domain type; every division is exact.
template <class Scalar>
Scalar bareiss_determinant(std::vector<std::vector<Scalar>> m) {
  const std::size_t n = m.size();
  if (n == 0) return Scalar(1);
  int sign = 1;
  Scalar prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k] == 0) ++pivot;
      if (pivot == n) return Scalar(0);
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign < 0 ? Scalar(-m[n - 1][n - 1]) : Scalar(m[n - 1][n - 1]);
}

/// Sylvester matrix of coefficient vectors (ascending) taken at their
/// formal degrees size()-1, leading zeros allowed.
std::vector<std::vector<BigInt>> sylvester_matrix(std::span<const BigInt> f,
                                                  std::span<const BigInt> g);

/// det of the formal-degree Sylvester matrix.
BigInt resultant_formal(std::span<const BigInt> f, std::span<const BigInt> g);

/// Res(f, g) = lc(f)^deg(g) * prod g(alpha) over the roots alpha of f.
BigInt resultant(const IntPolynomial& f, const IntPolynomial& g);

/// Primitive gcd over Z[T] with positive leading coefficient.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// a / b when b divides a exactly in Z[T]; std::nullopt otherwise.
std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b);

/// p / gcd(p, p'), primitive.
IntPolynomial squarefree_part(const IntPolynomial& p);

/// The first 25 primes, used as the irreducibility ladder.
std::span<const long> small_prime_ladder();

/// Rabin's test: is p irreducible over F_q? Requires q prime not dividing
/// the leading coefficient (returns false otherwise).
bool irreducible_mod(const IntPolynomial& p, long q);

/// First prime in `primes` modulo which p is irreducible, which proves p
/// irreducible over Q (p primitive of degree >= 1).
std::optional<long> irreducibility_witness(const IntPolynomial& p,
                                           std::span<const long> primes = small_prime_ladder());

/// Parses "c0,c1,...,cn" (ascending).
IntPolynomial parse_polynomial(const std::string& csv);

}  // namespace fibsum
