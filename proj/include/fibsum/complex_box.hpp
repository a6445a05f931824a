#pragma once

#include "fibsum/interval.hpp"

namespace fibsum {

/// Rectangular complex enclosure re x im.
struct ComplexBox {
  Interval re;
  Interval im;

  explicit ComplexBox(Precision prec = kDefaultPrecision) : re(prec), im(prec) {}
  ComplexBox(Interval real, Interval imag) : re(std::move(real)), im(std::move(imag)) {}
  explicit ComplexBox(Interval real) : re(std::move(real)), im(0L, re.precision()) {}

  Precision precision() const { return std::max(re.precision(), im.precision()); }
  bool is_real() const { return im.contains_zero() && im.width() == 0.0; }
  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
  ComplexBox midpoint() const { return {re.midpoint(), im.midpoint()}; }
  ComplexBox conj() const { return {re, -im}; }
  /// |z|^2 and |z|.
  Interval norm() const;
  Interval modulus() const;
};

ComplexBox operator+(const ComplexBox& a, const ComplexBox& b);
ComplexBox operator-(const ComplexBox& a, const ComplexBox& b);
ComplexBox operator-(const ComplexBox& a);
ComplexBox operator*(const ComplexBox& a, const ComplexBox& b);
ComplexBox operator*(const ComplexBox& a, const Interval& b);
ComplexBox operator/(const ComplexBox& a, const ComplexBox& b);
ComplexBox operator+(const ComplexBox& a, const Interval& b);
ComplexBox operator-(const ComplexBox& a, const Interval& b);
ComplexBox reciprocal(const ComplexBox& z);
ComplexBox pow(const ComplexBox& z, long n);
bool overlaps(const ComplexBox& a, const ComplexBox& b);

}  // namespace fibsum
