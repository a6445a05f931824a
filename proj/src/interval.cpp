#include "fibsum/interval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "fibsum/errors.hpp"

namespace fibsum {

namespace {

// Scratch MPFR variable with automatic cleanup.
struct Scratch {
  explicit Scratch(Precision p) { mpfr_init2(v, p); }
  ~Scratch() { mpfr_clear(v); }
  Scratch(const Scratch&) = delete;
  Scratch& operator=(const Scratch&) = delete;
  mpfr_t v;
};

std::string format(const char* fmt, int digits, mpfr_srcptr x) {
  char* buf = nullptr;
  mpfr_asprintf(&buf, fmt, digits, x);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

}  // namespace

void ensure_wide_exponent_range() {
  thread_local bool done = false;
  if (!done) {
    mpfr_set_emin(mpfr_get_emin_min());
    mpfr_set_emax(mpfr_get_emax_max());
    done = true;
  }
}

Interval::Interval(Precision prec) : prec_(prec) {
  ensure_wide_exponent_range();
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(long value, Precision prec) : Interval(prec) {
  mpfr_set_si(lo_, value, MPFR_RNDD);
  mpfr_set_si(hi_, value, MPFR_RNDU);
}

Interval::Interval(const BigInt& value, Precision prec) : Interval(prec) {
  mpfr_set_z(lo_, value.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi_, value.get_mpz_t(), MPFR_RNDU);
}

Interval::Interval(const BigRational& value, Precision prec) : Interval(prec) {
  mpfr_set_q(lo_, value.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, value.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Interval& other) : prec_(other.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : prec_(other.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
  if (this != &other) {
    prec_ = other.prec_;
    mpfr_set_prec(lo_, prec_);
    mpfr_set_prec(hi_, prec_);
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  if (this != &other) {
    std::swap(prec_, other.prec_);
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
  }
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::from_string(std::string_view text, Precision prec) {
  std::string s(text);
  Interval r(prec);
  if (s.empty() || mpfr_set_str(r.lo_, s.c_str(), 10, MPFR_RNDD) != 0 ||
      mpfr_set_str(r.hi_, s.c_str(), 10, MPFR_RNDU) != 0) {
    throw DomainError("not a decimal number: '" + s + "'");
  }
  return r;
}

Interval Interval::from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, Precision prec) {
  if (mpfr_cmp(lo, hi) > 0) throw DomainError("interval endpoints out of order");
  Interval r(prec);
  mpfr_set(r.lo_, lo, MPFR_RNDD);
  mpfr_set(r.hi_, hi, MPFR_RNDU);
  return r;
}

Interval Interval::from_double(double value, Precision prec) {
  Interval r(prec);
  mpfr_set_d(r.lo_, value, MPFR_RNDD);
  mpfr_set_d(r.hi_, value, MPFR_RNDU);
  return r;
}

Interval Interval::euler(Precision prec) {
  Interval r(prec);
  mpfr_set_ui(r.lo_, 1, MPFR_RNDN);
  mpfr_exp(r.lo_, r.lo_, MPFR_RNDD);
  mpfr_set_ui(r.hi_, 1, MPFR_RNDN);
  mpfr_exp(r.hi_, r.hi_, MPFR_RNDU);
  return r;
}

double Interval::lower_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::upper_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
double Interval::to_double() const { return mpfr_get_d(midpoint().lo_, MPFR_RNDN); }

Interval Interval::midpoint() const {
  Interval r(prec_);
  mpfr_add(r.lo_, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(r.lo_, r.lo_, 1, MPFR_RNDN);
  mpfr_set(r.hi_, r.lo_, MPFR_RNDN);
  return r;
}

Interval Interval::radius() const {
  Interval mid = midpoint();
  Interval r(prec_);
  Scratch t(prec_);
  mpfr_sub(r.hi_, mid.lo_, lo_, MPFR_RNDU);
  mpfr_sub(t.v, hi_, mid.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t.v, MPFR_RNDU);
  mpfr_set_zero(r.lo_, 1);
  return r;
}

double Interval::width() const {
  Scratch t(prec_);
  mpfr_sub(t.v, hi_, lo_, MPFR_RNDU);
  return mpfr_get_d(t.v, MPFR_RNDU);
}

bool Interval::is_positive() const { return mpfr_sgn(lo_) > 0; }
bool Interval::is_negative() const { return mpfr_sgn(hi_) < 0; }
bool Interval::is_nonnegative() const { return mpfr_sgn(lo_) >= 0; }
bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

bool Interval::contains(const BigInt& x) const {
  return mpfr_cmp_z(lo_, x.get_mpz_t()) <= 0 && mpfr_cmp_z(hi_, x.get_mpz_t()) >= 0;
}

bool Interval::contains(const Interval& x) const {
  return mpfr_cmp(lo_, x.lo_) <= 0 && mpfr_cmp(hi_, x.hi_) >= 0;
}

bool Interval::overlaps(const Interval& x) const {
  return mpfr_cmp(lo_, x.hi_) <= 0 && mpfr_cmp(x.lo_, hi_) <= 0;
}

Interval& Interval::operator+=(const Interval& rhs) { return *this = *this + rhs; }
Interval& Interval::operator-=(const Interval& rhs) { return *this = *this - rhs; }
Interval& Interval::operator*=(const Interval& rhs) { return *this = *this * rhs; }
Interval& Interval::operator/=(const Interval& rhs) { return *this = *this / rhs; }

std::string Interval::to_string(int digits) const {
  return format("%.*Rg", digits, midpoint().lo_);
}

std::string Interval::midpoint_string() const {
  int digits = static_cast<int>(std::ceil(static_cast<double>(prec_) * 0.30103)) + 1;
  return format("%.*Re", digits, midpoint().lo_);
}

std::string Interval::radius_string() const { return format("%.*RUe", 6, radius().hi_); }

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a) {
  Interval r(a.prec_);
  mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  const Precision p = std::max(a.prec_, b.prec_);
  Interval r(p);
  Scratch t(p);
  mpfr_srcptr xs[2] = {a.lo_, a.hi_};
  mpfr_srcptr ys[2] = {b.lo_, b.hi_};
  mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_mul(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (i == 0 && j == 0) continue;
      mpfr_mul(t.v, xs[i], ys[j], MPFR_RNDD);
      mpfr_min(r.lo_, r.lo_, t.v, MPFR_RNDD);
      mpfr_mul(t.v, xs[i], ys[j], MPFR_RNDU);
      mpfr_max(r.hi_, r.hi_, t.v, MPFR_RNDU);
    }
  }
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw InsufficientPrecision("division by an interval containing zero");
  Interval inv(std::max(a.prec_, b.prec_));
  mpfr_ui_div(inv.lo_, 1, b.hi_, MPFR_RNDD);
  mpfr_ui_div(inv.hi_, 1, b.lo_, MPFR_RNDU);
  return a * inv;
}

Interval sqrt(const Interval& x) {
  if (mpfr_sgn(x.hi_) < 0) throw DomainError("sqrt of a negative interval");
  Interval r(x.prec_);
  if (mpfr_sgn(x.lo_) <= 0) {
    mpfr_set_zero(r.lo_, 1);
  } else {
    mpfr_sqrt(r.lo_, x.lo_, MPFR_RNDD);
  }
  mpfr_sqrt(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Interval log(const Interval& x) {
  if (!x.is_positive()) throw InsufficientPrecision("log of an interval not certainly positive");
  Interval r(x.prec_);
  mpfr_log(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_log(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Interval exp(const Interval& x) {
  Interval r(x.prec_);
  mpfr_exp(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Interval pow(const Interval& x, long n) {
  if (n < 0) return Interval(1, x.prec_) / pow(x, -n);
  Interval r(x.prec_);
  const auto un = static_cast<unsigned long>(n);
  if (n == 0) return Interval(1, x.prec_);
  if (mpfr_sgn(x.lo_) >= 0) {
    mpfr_pow_ui(r.lo_, x.lo_, un, MPFR_RNDD);
    mpfr_pow_ui(r.hi_, x.hi_, un, MPFR_RNDU);
  } else if (mpfr_sgn(x.hi_) <= 0) {
    // x^n = (-1)^n |x|^n with |x| in [-hi, -lo].
    Interval m = pow(-x, n);
    return (n % 2 == 0) ? m : -m;
  } else if (n % 2 == 0) {
    Interval m = abs(x);
    mpfr_set_zero(r.lo_, 1);
    mpfr_pow_ui(r.hi_, m.hi_, un, MPFR_RNDU);
  } else {
    mpfr_pow_ui(r.lo_, x.lo_, un, MPFR_RNDD);
    mpfr_pow_ui(r.hi_, x.hi_, un, MPFR_RNDU);
  }
  return r;
}

Interval abs(const Interval& x) {
  if (mpfr_sgn(x.lo_) >= 0) return x;
  if (mpfr_sgn(x.hi_) <= 0) return -x;
  Interval r(x.prec_);
  mpfr_set_zero(r.lo_, 1);
  Scratch t(x.prec_);
  mpfr_neg(t.v, x.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, t.v, x.hi_, MPFR_RNDU);
  return r;
}

Interval max(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval min(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval hull(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval intersect(const Interval& a, const Interval& b) {
  if (!a.overlaps(b)) throw DomainError("intersection of disjoint intervals");
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator+(const Interval& a, long b) { return a + Interval(b, a.precision()); }
Interval operator-(const Interval& a, long b) { return a - Interval(b, a.precision()); }
Interval operator-(long a, const Interval& b) { return Interval(a, b.precision()) - b; }
Interval operator*(const Interval& a, long b) { return a * Interval(b, a.precision()); }
Interval operator/(const Interval& a, long b) { return a / Interval(b, a.precision()); }
Interval operator/(long a, const Interval& b) { return Interval(a, b.precision()) / b; }

Interval pow(const Interval& x, const Interval& y) { return exp(y * log(x)); }

Interval log(const BigInt& x, Precision prec) {
  if (x <= 0) throw DomainError("log of a non-positive integer");
  return log(Interval(x, prec));
}

bool certainly_less(const Interval& a, const Interval& b) {
  return mpfr_cmp(a.upper(), b.lower()) < 0;
}

bool certainly_less_equal(const Interval& a, const Interval& b) {
  return mpfr_cmp(a.upper(), b.lower()) <= 0;
}

}  // namespace fibsum
