#include "fibsum/complex_box.hpp"

namespace fibsum {

Interval ComplexBox::norm() const { return pow(re, 2) + pow(im, 2); }
Interval ComplexBox::modulus() const { return sqrt(norm()); }

ComplexBox operator+(const ComplexBox& a, const ComplexBox& b) { return {a.re + b.re, a.im + b.im}; }
ComplexBox operator-(const ComplexBox& a, const ComplexBox& b) { return {a.re - b.re, a.im - b.im}; }
ComplexBox operator-(const ComplexBox& a) { return {-a.re, -a.im}; }
ComplexBox operator+(const ComplexBox& a, const Interval& b) { return {a.re + b, a.im}; }
ComplexBox operator-(const ComplexBox& a, const Interval& b) { return {a.re - b, a.im}; }

ComplexBox operator*(const ComplexBox& a, const ComplexBox& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexBox operator*(const ComplexBox& a, const Interval& b) { return {a.re * b, a.im * b}; }

ComplexBox reciprocal(const ComplexBox& z) {
  Interval n = z.norm();
  return {z.re / n, -z.im / n};
}

ComplexBox operator/(const ComplexBox& a, const ComplexBox& b) { return a * reciprocal(b); }

ComplexBox pow(const ComplexBox& z, long n) {
  if (n < 0) return reciprocal(pow(z, -n));
  ComplexBox result(Interval(1L, z.precision()));
  ComplexBox base = z;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

bool overlaps(const ComplexBox& a, const ComplexBox& b) {
  return a.re.overlaps(b.re) && a.im.overlaps(b.im);
}

}  // namespace fibsum
