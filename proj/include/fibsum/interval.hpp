#pragma once

#include <mpfr.h>

#include <string>
#include <string_view>

#include "fibsum/bigint.hpp"

namespace fibsum {

using Precision = mpfr_prec_t;
inline constexpr Precision kDefaultPrecision = 256;

/// Closed real interval [lower, upper] with MPFR endpoints.
///
/// Every operation rounds the lower endpoint toward -inf and the upper
/// endpoint toward +inf, so the exact result of the corresponding real
/// operation on any members of the operands is contained in the result.
/// The precision of a result is the maximum precision of its operands.
class Interval {
 public:
  explicit Interval(Precision prec = kDefaultPrecision);
  Interval(long value, Precision prec);
  Interval(const BigInt& value, Precision prec);
  Interval(const BigRational& value, Precision prec);
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  /// Smallest interval containing the decimal number `text` (e.g. "1.46e17").
  static Interval from_string(std::string_view text, Precision prec);
  static Interval from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, Precision prec);
  static Interval from_double(double value, Precision prec);
  /// Encloses e = exp(1).
  static Interval euler(Precision prec);

  Precision precision() const { return prec_; }
  mpfr_srcptr lower() const { return lo_; }
  mpfr_srcptr upper() const { return hi_; }
  double lower_double() const;
  double upper_double() const;
  /// Midpoint rounded to the nearest double.
  double to_double() const;

  /// Degenerate interval at the (rounded) midpoint.
  Interval midpoint() const;
  /// Upper bound on max(mid - lower, upper - mid).
  Interval radius() const;
  /// Upper bound on upper - lower.
  double width() const;

  bool is_positive() const;  // lower > 0
  bool is_negative() const;  // upper < 0
  bool is_nonnegative() const;
  bool contains_zero() const;
  bool contains(const BigInt& x) const;
  bool contains(const Interval& x) const;
  bool overlaps(const Interval& x) const;

  Interval& operator+=(const Interval& rhs);
  Interval& operator-=(const Interval& rhs);
  Interval& operator*=(const Interval& rhs);
  Interval& operator/=(const Interval& rhs);

  /// Midpoint printed with `digits` significant decimal digits.
  std::string to_string(int digits = 20) const;
  /// Midpoint printed with enough digits to be exact at this precision.
  std::string midpoint_string() const;
  std::string radius_string() const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a);
  friend Interval sqrt(const Interval& x);
  friend Interval log(const Interval& x);
  friend Interval exp(const Interval& x);
  friend Interval pow(const Interval& x, long n);
  friend Interval abs(const Interval& x);
  friend Interval max(const Interval& a, const Interval& b);
  friend Interval min(const Interval& a, const Interval& b);
  friend Interval hull(const Interval& a, const Interval& b);
  friend Interval intersect(const Interval& a, const Interval& b);

 private:
  Precision prec_;
  mpfr_t lo_;
  mpfr_t hi_;
};

Interval operator+(const Interval& a, long b);
Interval operator-(const Interval& a, long b);
Interval operator-(long a, const Interval& b);
Interval operator*(const Interval& a, long b);
Interval operator/(const Interval& a, long b);
Interval operator/(long a, const Interval& b);

/// x^y = exp(y log x) for x > 0.
Interval pow(const Interval& x, const Interval& y);
/// Natural log of a positive integer.
Interval log(const BigInt& x, Precision prec);

/// Certified comparisons: true only when every member satisfies the relation.
bool certainly_less(const Interval& a, const Interval& b);
bool certainly_less_equal(const Interval& a, const Interval& b);

/// Sets MPFR's exponent range to its maximum for the calling thread, so
/// numbers like exp(-1e17) stay representable. Interval constructors call it.
void ensure_wide_exponent_range();

}  // namespace fibsum
