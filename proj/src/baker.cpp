#include "fibsum/baker.hpp"

#include <algorithm>

#include "fibsum/errors.hpp"
#include "fibsum/minpoly.hpp"
#include "fibsum/roots.hpp"

namespace fibsum {

void LinearFormSpec::set_exponents(std::int64_t n, std::int64_t m) {
  exponents = {BigRational(1), BigRational(static_cast<long>(n - 1)),
               BigRational(static_cast<long>(-m)), BigRational(1)};
  BigRational big = 1;
  for (const auto& e : exponents) big = std::max<BigRational>(big, abs(e));
  B = Interval(big, B.precision());
}

Interval matveev_C(int n_terms, int field_degree, Precision precision_bits) {
  if (n_terms < 1 || field_degree < 1) throw DomainError("matveev_C needs n, l >= 1");
  const Interval n(static_cast<long>(n_terms), precision_bits);
  const Interval l(static_cast<long>(field_degree), precision_bits);
  const Interval n_pow = pow(n, 4L) * sqrt(n);
  return Interval::from_string("1.4", precision_bits) *
         pow(Interval(30L, precision_bits), static_cast<long>(n_terms) + 3) * n_pow * pow(l, 2L) *
         (log(l) + 1L);
}

Interval matveev_A(const Interval& height, const Interval& log_abs_gamma, int field_degree) {
  const Precision p = std::max(height.precision(), log_abs_gamma.precision());
  const Interval floor = Interval::from_string("0.16", p);
  return max(max(height * static_cast<long>(field_degree), abs(log_abs_gamma)), floor);
}

std::vector<Interval> matveev_A_values(const LinearFormSpec& spec) {
  std::vector<Interval> out;
  for (const auto& g : spec.gammas) out.push_back(matveev_A(g.height, g.log_abs, spec.field_degree));
  return out;
}

Interval matveev_lambda(const Interval& C, std::span<const Interval> A) {
  Interval total = C;
  for (const auto& a : A) total = total * a;
  return total;
}

Interval matveev_lambda(const LinearFormSpec& spec) {
  if (spec.gammas.empty()) throw DomainError("linear form without terms");
  const Precision p = spec.gammas.front().height.precision();
  const Interval C = matveev_C(static_cast<int>(spec.gammas.size()), spec.field_degree, p);
  const auto A = matveev_A_values(spec);
  return matveev_lambda(C, A);
}

Interval matveev_lower_bound(const Interval& B, const Interval& lambda) {
  return exp(-(lambda * (log(B) + 1L)));
}

Interval matveev_lower_bound(const LinearFormSpec& spec) {
  return matveev_lower_bound(spec.B, matveev_lambda(spec));
}

IntPolynomial c3_numerator(int d) {
  if (d < 0) throw DomainError("d must be >= 0");
  return IntPolynomial::monomial(1, d + 1) - IntPolynomial{1};
}

IntPolynomial c3_denominator(int k) { return IntPolynomial{-2L * k, k + 1L}; }

namespace {

GammaTerm make_term(std::string label, IntPolynomial minpoly, bool certified, Interval value,
                    Precision precision_bits) {
  GammaTerm t;
  t.label = std::move(label);
  t.height = weil_height(minpoly, precision_bits);
  t.minpoly = std::move(minpoly);
  t.minpoly_certified = certified;
  t.log_abs = abs(log(abs(value)));
  t.value = ComplexBox(std::move(value));
  return t;
}

Interval golden_ratio(Precision p) { return (sqrt(Interval(5L, p)) + 1L) / 2L; }

}  // namespace

LinearFormSpec linear_form_spec(int k, const IntPolynomial& c3_num, const IntPolynomial& c3_den,
                                Precision precision_bits) {
  const IntPolynomial f = char_poly(k);
  const Interval alpha1 = dominant_root(k, precision_bits);
  const Interval c3 = c3_num(alpha1) / c3_den(alpha1);

  IntPolynomial c3_poly;
  bool certified = true;
  try {
    c3_poly = minpoly_of_quotient(f, c3_num, c3_den, ComplexBox(c3)).poly;
  } catch (const InconclusiveIrreducibility& e) {
    c3_poly = e.candidate();
    certified = false;
  }

  LinearFormSpec spec;
  spec.field_degree = 2 * k;
  spec.B = Interval(1L, precision_bits);
  spec.gammas.push_back(make_term("c3", c3_poly, certified, c3, precision_bits));
  spec.gammas.push_back(make_term("alpha1", f, irreducibility_witness(f).has_value(), alpha1,
                                  precision_bits));
  spec.gammas.push_back(
      make_term("alpha", IntPolynomial{-1, -1, 1}, true, golden_ratio(precision_bits), precision_bits));
  spec.gammas.push_back(make_term("sqrt5", IntPolynomial{-5, 0, 1}, true,
                                  sqrt(Interval(5L, precision_bits)), precision_bits));
  return spec;
}

Interval nonvanishing_witness(int k, int d, std::int64_t n, std::int64_t m,
                              Precision precision_bits) {
  if (k < 3) throw DomainError("nonvanishing_witness needs k >= 3");
  if (d < 0 || m < 0 || n < -(k - 2)) throw DomainError("nonvanishing_witness: bad (d, n, m)");
  const Interval alpha1 = dominant_root(k, precision_bits);
  const Interval c3 = c3_numerator(d)(alpha1) / c3_denominator(k)(alpha1);
  const Interval s5 = sqrt(Interval(5L, precision_bits));
  const Interval form = c3 * pow(alpha1, static_cast<long>(n - 1)) *
                            pow(golden_ratio(precision_bits), static_cast<long>(-m)) * s5 -
                        1L;
  Interval out = abs(form);
  if (!out.is_positive()) {
    throw InsufficientPrecision("linear form not separated from zero at " +
                                std::to_string(precision_bits) + " bits");
  }
  return out;
}

BoundReport derive_bounds(int k, int d, Precision precision_bits) {
  if (k < 3) throw DomainError("derive_bounds needs k >= 3 (k = 2 is characterized exactly)");
  if (d < 0) throw DomainError("derive_bounds needs d >= 0");
  const RootSet rs = all_roots(k, precision_bits);
  const Precision p = precision_bits;

  BoundReport r;
  r.k = k;
  r.d = d;
  r.precision_bits = precision_bits;
  r.field_degree = 2 * k;

  const Interval& alpha1 = rs.dominant;
  const Interval den1 = (alpha1 - 2L) * static_cast<long>(k + 1) + 2L;
  r.c1 = (alpha1 - 1L) / den1;
  r.c3 = (pow(alpha1, static_cast<long>(d + 1)) - 1L) / den1;
  r.c2 = Interval(0L, p);
  for (std::size_t i = 1; i < rs.roots.size(); ++i) {
    const ComplexBox& a = rs.roots[i];
    const ComplexBox den = (a - Interval(2L, p)) * Interval(static_cast<long>(k + 1), p) +
                           Interval(2L, p);
    r.c2 = r.c2 + ((a - Interval(1L, p)) / den).modulus();
  }
  const Interval r2 = rs.second_modulus();
  r.alpha2_bound = Interval::from_endpoints(r2.upper(), r2.upper(), r2.precision());

  r.spec = linear_form_spec(k, c3_numerator(d), c3_denominator(k), precision_bits);
  r.C = matveev_C(static_cast<int>(r.spec.gammas.size()), r.spec.field_degree, p);
  r.A = matveev_A_values(r.spec);
  r.lambda = matveev_lambda(r.C, r.A);

  // |Lambda| <= K (r/alpha)^n + (1/alpha^2)^n, K = c2 sqrt5 sum_{j<=d} r^j / r.
  const Interval phi = golden_ratio(p);
  Interval geometric(0L, p);
  for (int j = 0; j <= d; ++j) geometric = geometric + pow(r.alpha2_bound, static_cast<long>(j));
  const Interval K = r.c2 * sqrt(Interval(5L, p)) * geometric / r.alpha2_bound;
  const Interval log_K = max(log(K + 1L), Interval(0L, p));
  // log m <= log 2 + log(n + d + 1) <= log 2 + log max(1, (d+1)/2) + log(n+2).
  const Interval spread = max(Interval(1L, p), Interval(BigRational(d + 1, 2), p));
  const Interval shift = log(Interval(2L, p)) + log(spread) + 1L;

  r.a = r.lambda * shift + log_K;
  r.b = r.lambda;
  const Interval c = min(log(phi / r.alpha2_bound), log(phi) * 2L);
  r.c = Interval::from_endpoints(c.lower(), c.lower(), c.precision());
  r.N = threshold_search(r.a, r.b, r.c);
  r.M = 2 * r.N + 2 * d + 2;
  return r;
}

Interval threshold_inequality(const Interval& a, const Interval& b, const Interval& c,
                              const BigInt& n) {
  const Precision p = std::max({a.precision(), b.precision(), c.precision()});
  return a + b * log(Interval(BigInt(n + 2), p)) - c * Interval(n, p);
}

BigInt threshold_search(const Interval& a, const Interval& b, const Interval& c,
                        ThresholdOptions options) {
  if (!c.is_positive()) throw DomainError("threshold_search needs c > 0");
  const Precision p = std::max({a.precision(), b.precision(), c.precision()});
  auto decreasing_at = [&](const BigInt& n) {
    return certainly_less(b / Interval(BigInt(n + 2), p), c);
  };
  BigInt n = 1;
  for (int step = 0; step < 1 << 16; ++step, n *= 2) {
    const Interval v = threshold_inequality(a, b, c, n);
    if (v.is_negative()) {
      if (!decreasing_at(n)) continue;
      if (!options.refine || n == 1) return n;
      BigInt lo = n / 2;  // inequality held there
      BigInt hi = n;
      while (hi - lo > 1) {
        BigInt mid = (lo + hi) / 2;
        const Interval w = threshold_inequality(a, b, c, mid);
        if (w.is_negative() && decreasing_at(mid)) {
          hi = mid;
        } else if (w.is_nonnegative()) {
          lo = mid;
        } else {
          throw InsufficientPrecision("threshold sign uncertain at n=" + mid.get_str());
        }
      }
      return hi;
    }
    if (!v.is_nonnegative()) {
      throw InsufficientPrecision("threshold sign uncertain at n=" + n.get_str());
    }
  }
  throw DomainError("threshold_search: inequality never failed");
}

}  // namespace fibsum
