#pragma once

#include <span>
#include <string>
#include <vector>

#include "fibsum/bigint.hpp"
#include "fibsum/complex_box.hpp"
#include "fibsum/interval.hpp"
#include "fibsum/polynomial.hpp"

namespace fibsum {

/// One algebraic number gamma_i of a linear form in logarithms.
struct GammaTerm {
  std::string label;
  IntPolynomial minpoly;
  /// False when the mod-p ladder did not prove `minpoly` irreducible; the
  /// polynomial is then the squarefree eliminant, which still gives h(gamma).
  bool minpoly_certified = false;
  ComplexBox value;
  Interval height;
  /// |log |gamma||.
  Interval log_abs;
};

struct LinearFormSpec {
  std::vector<GammaTerm> gammas;
  std::vector<BigRational> exponents;
  int field_degree = 1;
  /// max |b_i|; defaults to 1 until exponents are set.
  Interval B;

  /// Sets b = (1, n-1, -m, 1) for the form c_3 alpha_1^{n-1} alpha^{-m} sqrt5.
  void set_exponents(std::int64_t n, std::int64_t m);
};

/// C_{n,l} = 1.4 * 30^{n+3} * n^{4.5} * l^2 * (1 + log l).
Interval matveev_C(int n_terms, int field_degree, Precision precision_bits);

/// max(l h, |log gamma|, 0.16).
Interval matveev_A(const Interval& height, const Interval& log_abs_gamma, int field_degree);

std::vector<Interval> matveev_A_values(const LinearFormSpec& spec);

/// C * prod A_i.
Interval matveev_lambda(const Interval& C, std::span<const Interval> A);
Interval matveev_lambda(const LinearFormSpec& spec);

/// (eB)^{-lambda}.
Interval matveev_lower_bound(const Interval& B, const Interval& lambda);
Interval matveev_lower_bound(const LinearFormSpec& spec);

/// T^{d+1} - 1 and (k+1)T - 2k: numerator and denominator of c_3.
IntPolynomial c3_numerator(int d);
IntPolynomial c3_denominator(int k);

/// The form {c_3, alpha_1, alpha, sqrt5} over a field of degree 2k, with
/// c_3 = num(alpha_1)/den(alpha_1). Heights come from certified roots of the
/// minimal polynomials.
LinearFormSpec linear_form_spec(int k, const IntPolynomial& c3_num, const IntPolynomial& c3_den,
                                Precision precision_bits);

/// |c_3 alpha_1^{n-1} alpha^{-m} sqrt5 - 1| with a strictly positive lower edge.
Interval nonvanishing_witness(int k, int d, std::int64_t n, std::int64_t m,
                              Precision precision_bits);

/// Effective bound bundle for fixed (k, d): every solution (n, m) has
/// n < N and m < M, and every n >= 1 solution satisfies
/// a + b log(n+2) - c n > 0.
struct BoundReport {
  int k = 0;
  int d = 0;
  Precision precision_bits = kDefaultPrecision;
  int field_degree = 0;
  Interval c1, c2, c3;
  /// Upper bound on |alpha_2|.
  Interval alpha2_bound;
  Interval C;
  std::vector<Interval> A;
  LinearFormSpec spec;
  Interval lambda;
  Interval a, b, c;
  BigInt N, M;
};

BoundReport derive_bounds(int k, int d, Precision precision_bits);

struct ThresholdOptions {
  /// Binary-search the exact crossing between N/2 and N.
  bool refine = false;
};

/// a + b log(n+2) - c n at n.
Interval threshold_inequality(const Interval& a, const Interval& b, const Interval& c,
                              const BigInt& n);

/// First n in 1, 2, 4, ... where the inequality certainly fails and keeps
/// failing (b/(n+2) < c). Throws DomainError unless c > 0.
BigInt threshold_search(const Interval& a, const Interval& b, const Interval& c,
                        ThresholdOptions options = {});

}  // namespace fibsum
