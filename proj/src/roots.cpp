#include "fibsum/roots.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <complex>
#include <numbers>

#include "fibsum/errors.hpp"

namespace fibsum {

namespace {

constexpr Precision kGuardBits = 32;

void require_precision(Precision bits) {
  if (bits < 64) throw DomainError("precision_bits must be >= 64");
}

// Binary exponent of the largest endpoint magnitude; LONG_MIN for zero.
long magnitude_exponent(const Interval& x) {
  Interval a = abs(x);
  if (mpfr_zero_p(a.upper())) return LONG_MIN;
  return mpfr_get_exp(a.upper());
}

long magnitude_exponent(const ComplexBox& z) {
  return std::max(magnitude_exponent(z.re), magnitude_exponent(z.im));
}

Interval power_of_two(long e, Precision prec) {
  Interval r(1L, prec);
  mpfr_t t;
  mpfr_init2(t, prec);
  mpfr_set_ui_2exp(t, 1, e, MPFR_RNDN);
  r = Interval::from_endpoints(t, t, prec);
  mpfr_clear(t);
  return r;
}

using Approx = std::complex<long double>;

// Aberth-Ehrlich iteration in extended precision, used as a starting point.
std::vector<Approx> aberth_seed(const IntPolynomial& p) {
  const int n = p.degree();
  std::vector<long double> a;
  for (const auto& c : p.coefficients()) a.push_back(static_cast<long double>(c.get_d()));
  auto eval = [&](Approx z, Approx& dp) {
    Approx v = 0;
    dp = 0;
    for (int i = n; i >= 0; --i) {
      dp = dp * z + v;
      v = v * z + a[static_cast<std::size_t>(i)];
    }
    return v;
  };
  long double r0 = 1.0L;
  if (a[0] != 0) r0 = std::pow(std::fabs(a[0] / a[static_cast<std::size_t>(n)]), 1.0L / n);
  std::vector<Approx> z(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const long double theta = 2.0L * std::numbers::pi_v<long double> * j / n + 0.4L;
    z[static_cast<std::size_t>(j)] = std::polar(r0, theta);
  }
  for (int iter = 0; iter < 2000; ++iter) {
    long double worst = 0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      Approx dp;
      Approx v = eval(z[i], dp);
      if (v == Approx(0)) continue;
      Approx ratio = v / dp;
      Approx s = 0;
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j != i) s += 1.0L / (z[i] - z[j]);
      }
      Approx w = ratio / (1.0L - ratio * s);
      z[i] -= w;
      worst = std::max(worst, std::abs(w) / std::max(1.0L, std::abs(z[i])));
    }
    if (worst < 1e-17L) break;
  }
  return z;
}

// Aberth refinement at working precision with point arithmetic.
std::vector<ComplexBox> aberth_refine(const IntPolynomial& p, const std::vector<Approx>& seed,
                                      Precision wp) {
  const IntPolynomial dp = p.derivative();
  std::vector<ComplexBox> z;
  for (const auto& s : seed) {
    z.emplace_back(Interval::from_double(static_cast<double>(s.real()), wp),
                   Interval::from_double(static_cast<double>(s.imag()), wp));
  }
  const Interval one(1L, wp);
  for (int iter = 0; iter < 100; ++iter) {
    long worst = LONG_MIN;
    for (std::size_t i = 0; i < z.size(); ++i) {
      ComplexBox v = p(z[i]).midpoint();
      if (magnitude_exponent(v) == LONG_MIN) continue;
      ComplexBox ratio = (v / dp(z[i]).midpoint()).midpoint();
      ComplexBox s(wp);
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j != i) s = (s + reciprocal(z[i] - z[j])).midpoint();
      }
      ComplexBox denom = (ComplexBox(one) - ratio * s).midpoint();
      ComplexBox w = (ratio / denom).midpoint();
      z[i] = (z[i] - w).midpoint();
      worst = std::max(worst, magnitude_exponent(w) - std::max(0L, magnitude_exponent(z[i])));
    }
    if (worst < -static_cast<long>(wp) + 4) break;
  }
  return z;
}

// Radius of a disk around `centre` certainly containing a root of p:
// deg(p) * |p(c)| / |p'(c)|.
Interval inclusion_radius(const IntPolynomial& p, const IntPolynomial& dp,
                          const ComplexBox& centre) {
  Interval num = p(centre).modulus() * static_cast<long>(p.degree());
  Interval r = num / dp(centre).modulus();
  return Interval::from_endpoints(r.upper(), r.upper(), r.precision());
}

struct Disk {
  ComplexBox centre;
  Interval radius;
  bool real = false;
};

ComplexBox disk_box(const Disk& d) {
  Interval spread = hull(-d.radius, d.radius);
  if (d.real) return ComplexBox(d.centre.re + spread, Interval(0L, spread.precision()));
  return {d.centre.re + spread, d.centre.im + spread};
}

// Orders by decreasing modulus; conjugate pairs by decreasing imaginary part.
void sort_by_modulus(std::vector<ComplexBox>& roots) {
  auto key = [](const ComplexBox& z) {
    return std::llround(z.modulus().to_double() * 1e12);
  };
  std::stable_sort(roots.begin(), roots.end(), [&](const ComplexBox& a, const ComplexBox& b) {
    const auto ka = key(a), kb = key(b);
    if (ka != kb) return ka > kb;
    return a.im.to_double() > b.im.to_double();
  });
}

}  // namespace

Interval RootSet::second_modulus() const {
  if (roots.size() < 2) return Interval(0L, precision_bits);
  Interval m = roots[1].modulus();
  for (std::size_t i = 2; i < roots.size(); ++i) m = max(m, roots[i].modulus());
  return m;
}

std::vector<std::string> RootSet::invariant_violations() const {
  std::vector<std::string> bad;
  if (static_cast<int>(roots.size()) != k) bad.push_back("root count != k");
  if (roots.empty()) return bad;
  const Precision p = dominant.precision();
  const Interval one(1L, p);
  if (!certainly_less(one, roots[0].modulus())) bad.push_back("|alpha_1| > 1");
  const Interval lower_bound = Interval(2L, p) - pow(Interval(2L, p), 1 - k);
  if (!certainly_less(lower_bound, dominant) || !certainly_less(dominant, Interval(2L, p))) {
    bad.push_back("2(1-2^-k) < alpha_1 < 2");
  }
  const Interval floor = pow(Interval(3L, p), -k);
  for (std::size_t i = 1; i < roots.size(); ++i) {
    Interval m = roots[i].modulus();
    if (!certainly_less(m, one)) bad.push_back("|alpha_" + std::to_string(i + 1) + "| < 1");
    if (!certainly_less(floor, m)) bad.push_back("|alpha_" + std::to_string(i + 1) + "| > 3^-k");
    if (i + 1 < roots.size() && certainly_less(m, roots[i + 1].modulus())) {
      bad.push_back("modulus order at " + std::to_string(i + 1));
    }
  }
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (overlaps(roots[i], roots[j])) {
        bad.push_back("enclosures " + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                      " overlap");
      }
    }
  }
  return bad;
}

Interval dominant_root(int k, Precision precision_bits) {
  require_precision(precision_bits);
  const IntPolynomial f = char_poly(k);
  const IntPolynomial df = f.derivative();
  const Precision wp = precision_bits + kGuardBits;
  Interval lo = Interval(2L, wp) - power_of_two(1 - k, wp);
  Interval hi(2L, wp);
  if (!f(lo).is_negative() || !f(hi).is_positive()) {
    throw InsufficientPrecision("dominant root bracket not certified");
  }
  // Bisection down to ~2^-50, then Newton to working precision.
  for (int i = 0; i < 50; ++i) {
    Interval mid = ((lo + hi) / 2L).midpoint();
    if (f(mid).is_negative()) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  Interval x = ((lo + hi) / 2L).midpoint();
  for (int i = 0; i < 64; ++i) {
    Interval step = (f(x) / df(x)).midpoint();
    x = (x - step).midpoint();
    if (magnitude_exponent(step) < -static_cast<long>(wp) + 2) break;
  }
  const Interval eps = power_of_two(-(static_cast<long>(precision_bits) - 6), wp);
  Interval a = (x - eps).midpoint();
  Interval b = (x + eps).midpoint();
  if (!f(a).is_negative() || !f(b).is_positive()) {
    throw InsufficientPrecision("dominant root of f_" + std::to_string(k) +
                                " not certified at " + std::to_string(precision_bits) + " bits");
  }
  return Interval::from_endpoints(a.lower(), b.upper(), precision_bits);
}

std::vector<ComplexBox> isolate_roots(const IntPolynomial& p, Precision precision_bits) {
  require_precision(precision_bits);
  const int n = p.degree();
  if (n < 1) throw DomainError("isolate_roots needs a polynomial of degree >= 1");
  const Precision wp = precision_bits + kGuardBits;
  const IntPolynomial dp = p.derivative();

  std::vector<ComplexBox> centres = aberth_refine(p, aberth_seed(p), wp);
  const long real_cutoff = -static_cast<long>(wp) / 2;
  std::vector<Disk> disks;
  for (auto& c : centres) {
    Disk d{c, Interval(wp)};
    if (magnitude_exponent(c.im) < real_cutoff) {
      Disk r{ComplexBox(c.re), Interval(wp), true};
      r.radius = inclusion_radius(p, dp, r.centre);
      if (magnitude_exponent(r.radius) < real_cutoff) {
        disks.push_back(std::move(r));
        continue;
      }
    }
    d.radius = inclusion_radius(p, dp, d.centre);
    disks.push_back(std::move(d));
  }
  // n pairwise-disjoint disks, each holding a root, hold exactly one each.
  for (std::size_t i = 0; i < disks.size(); ++i) {
    for (std::size_t j = i + 1; j < disks.size(); ++j) {
      Interval dist = (disks[i].centre - disks[j].centre).modulus();
      if (!certainly_less(disks[i].radius + disks[j].radius, dist)) {
        throw InsufficientPrecision("root disks overlap for " + p.to_string());
      }
    }
  }
  std::vector<ComplexBox> roots;
  for (const auto& d : disks) roots.push_back(disk_box(d));

  // Reconstruction: lc * prod (T - root) must enclose p coefficient-wise.
  std::vector<ComplexBox> prod{ComplexBox(Interval(1L, wp))};
  for (const auto& r : roots) {
    std::vector<ComplexBox> next(prod.size() + 1, ComplexBox(wp));
    for (std::size_t i = 0; i < prod.size(); ++i) {
      next[i + 1] = next[i + 1] + prod[i];
      next[i] = next[i] - prod[i] * r;
    }
    prod = std::move(next);
  }
  const Interval lc(p.leading(), wp);
  for (int i = 0; i <= n; ++i) {
    const ComplexBox c = prod[static_cast<std::size_t>(i)] * lc;
    if (!c.re.contains(p.coefficient(i)) || !c.im.contains_zero()) {
      throw InsufficientPrecision("root reconstruction check failed for " + p.to_string());
    }
  }
  sort_by_modulus(roots);
  return roots;
}

RootSet all_roots(int k, Precision precision_bits) {
  require_precision(precision_bits);
  RootSet rs;
  rs.k = k;
  rs.precision_bits = precision_bits;
  rs.roots = isolate_roots(char_poly(k), precision_bits);
  rs.dominant = dominant_root(k, precision_bits);
  if (!rs.roots[0].is_real()) throw InsufficientPrecision("dominant root not certified real");
  rs.roots[0] = ComplexBox(intersect(rs.roots[0].re, rs.dominant));
  rs.dominant = rs.roots[0].re;
  auto bad = rs.invariant_violations();
  if (!bad.empty()) throw InsufficientPrecision("RootSet invariant not certified: " + bad.front());
  return rs;
}

Interval binet_eval(const RootSet& rs, std::int64_t n) {
  if (n < -(rs.k - 2)) throw DomainError("binet_eval index below -(k-2)");
  const long k = rs.k;
  ComplexBox total(rs.roots[0].precision());
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    const ComplexBox& a = rs.roots[i];
    if (i == 0) {
      const Interval& x = rs.dominant;
      const Interval c = (x - 1L) / ((x - 2L) * (k + 1) + 2L);
      total = total + ComplexBox(c * pow(x, static_cast<long>(n - 1)));
      continue;
    }
    const ComplexBox denom = (a - Interval(2L, a.precision())) * Interval(k + 1, a.precision()) +
                             Interval(2L, a.precision());
    const ComplexBox c = (a - Interval(1L, a.precision())) / denom;
    total = total + c * pow(a, static_cast<long>(n - 1));
  }
  if (!total.im.contains_zero()) throw InsufficientPrecision("Binet sum not real");
  if (!(total.re.width() < 0.5)) {
    throw InsufficientPrecision("Binet enclosure wider than 1/2 at n=" + std::to_string(n));
  }
  return total.re;
}

Interval binet_eval(int k, std::int64_t n, Precision precision_bits) {
  return binet_eval(all_roots(k, precision_bits), n);
}

BigInt nearest_integer(const Interval& x) {
  if (!(x.width() < 0.5)) throw InsufficientPrecision("enclosure too wide to round");
  mpfr_t t;
  mpfr_init2(t, x.precision());
  mpfr_set(t, x.midpoint().lower(), MPFR_RNDN);
  mpfr_round(t, t);
  BigInt out;
  mpfr_get_z(out.get_mpz_t(), t, MPFR_RNDN);
  mpfr_clear(t);
  if (!x.contains(out)) throw InsufficientPrecision("enclosure contains no integer");
  return out;
}

Interval weil_height(const IntPolynomial& g, Precision precision_bits) {
  if (g.is_zero() || g.degree() < 1) throw DomainError("weil_height needs degree >= 1");
  if (g.leading() <= 0) throw DomainError("weil_height needs a positive leading coefficient");
  if (g.content() != 1) throw DomainError("weil_height needs a primitive polynomial");
  const auto roots = isolate_roots(g, precision_bits);
  const Precision wp = roots.front().precision();
  const Interval one(1L, wp);
  Interval total = log(Interval(g.leading(), wp));
  for (const auto& r : roots) total = total + log(max(r.modulus(), one));
  return total / static_cast<long>(g.degree());
}

}  // namespace fibsum
