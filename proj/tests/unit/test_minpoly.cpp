#include <doctest.h>

#include "fibsum/baker.hpp"
#include "fibsum/errors.hpp"
#include "fibsum/minpoly.hpp"
#include "fibsum/roots.hpp"

using namespace fibsum;

namespace {

ComplexBox quotient_at_dominant(int k, const IntPolynomial& num, const IntPolynomial& den) {
  const Interval a = dominant_root(k, 256);
  return ComplexBox(num(a) / den(a));
}

}  // namespace

TEST_CASE("identity maps") {
  const IntPolynomial golden{-1, -1, 1};
  const IntPolynomial t{0, 1};
  const IntPolynomial one{1};
  const Interval phi = (sqrt(Interval(5L, 256)) + 1L) / 2L;
  CHECK(minpoly_of_quotient(golden, t, one, ComplexBox(phi)).poly == golden);
  const IntPolynomial five{-5, 0, 1};
  CHECK(minpoly_of_quotient(five, t, one, ComplexBox(sqrt(Interval(5L, 256)))).poly == five);
}

TEST_CASE("c3 with denominator 4T - 2") {
  const IntPolynomial num{-1, 0, 1};
  const IntPolynomial den{-2, 4};
  const auto mp = minpoly_of_quotient(char_poly(3), num, den, quotient_at_dominant(3, num, den));
  CHECK(mp.poly == (IntPolynomial{-1, 6, -20, 26}));
  CHECK(mp.witness_prime > 0);
}

TEST_CASE("general c3 formula") {
  const IntPolynomial num = c3_numerator(1);
  const IntPolynomial den = c3_denominator(3);
  CHECK(den == (IntPolynomial{-6, 4}));
  const auto mp = minpoly_of_quotient(char_poly(3), num, den, quotient_at_dominant(3, num, den));
  CHECK(mp.poly == (IntPolynomial{-1, 10, -44, 22}));
}

TEST_CASE("minimal polynomial vanishes at every conjugate quotient") {
  for (int k = 3; k <= 6; ++k) {
    for (int d = 0; d <= 2; ++d) {
      const IntPolynomial num = c3_numerator(d);
      const IntPolynomial den = c3_denominator(k);
      const auto mp = minpoly_of_quotient(char_poly(k), num, den, quotient_at_dominant(k, num, den));
      CHECK(mp.poly.degree() <= k);
      CHECK(mp.poly.leading() > 0);
      CHECK(mp.poly.content() == 1);
      for (const auto& z : all_roots(k, 256).roots) {
        const ComplexBox q = num(z) / den(z);
        CHECK(mp.poly(q).contains_zero());
      }
    }
  }
}

TEST_CASE("eliminant of a rational degree drop") {
  // (alpha^2)/1 with alpha^2 = 2: the eliminant is (y - 2)^2, squarefree part y - 2.
  const IntPolynomial f{-2, 0, 1};
  const IntPolynomial elim = eliminate_quotient(f, IntPolynomial{0, 0, 1}, IntPolynomial{1});
  CHECK(elim.primitive_part() == (IntPolynomial{-2, 1} * IntPolynomial{-2, 1}));
  const auto mp = minpoly_of_quotient(f, IntPolynomial{0, 0, 1}, IntPolynomial{1},
                                      ComplexBox(Interval(2L, 128)));
  CHECK(mp.poly == (IntPolynomial{-2, 1}));
}

TEST_CASE("errors") {
  const IntPolynomial f = char_poly(3);
  // den vanishes nowhere on roots of f but the box is not a root.
  CHECK_THROWS_AS(minpoly_of_quotient(f, IntPolynomial{0, 1}, IntPolynomial{1},
                                      ComplexBox(Interval(5L, 128))),
                  DomainError);
  CHECK_THROWS_AS(minpoly_of_quotient(IntPolynomial{-1, 1}, IntPolynomial{0, 1}, IntPolynomial{-1, 1},
                                      ComplexBox(Interval(1L, 128))),
                  DomainError);
}
