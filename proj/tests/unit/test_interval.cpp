#include <doctest.h>

#include <mpfr.h>

#include "fibsum/complex_box.hpp"
#include "fibsum/errors.hpp"
#include "fibsum/interval.hpp"

using namespace fibsum;

TEST_CASE("exact integers are point intervals") {
  const Interval x(BigInt("123456789012345678901234567890"), 256);
  CHECK(x.contains(BigInt("123456789012345678901234567890")));
  CHECK(x.width() == 0.0);
}

TEST_CASE("outward rounding encloses the true value") {
  const Interval third = Interval(1L, 64) / Interval(3L, 64);
  CHECK(third.width() > 0.0);
  const Interval back = third * 3L;
  CHECK(back.contains(BigInt(1)));
  const Interval r = Interval(BigRational(1, 3), 64);
  CHECK(r.contains(third.midpoint()) == true);
}

TEST_CASE("elementary functions") {
  const Precision p = 200;
  const Interval two(2L, p);
  const Interval s = sqrt(two);
  CHECK((s * s).contains(BigInt(2)));
  CHECK(exp(log(two)).contains(BigInt(2)));
  CHECK(log(Interval(1L, p)).contains(BigInt(0)));
  CHECK(pow(Interval(-2L, p), 3L).contains(BigInt(-8)));
  CHECK(pow(Interval::from_endpoints(Interval(-1L, p).lower(), Interval(2L, p).upper(), p), 2L)
            .contains(BigInt(0)));
  const Interval e = Interval::euler(p);
  CHECK(log(e).contains(BigInt(1)));
}

TEST_CASE("huge exponents stay representable") {
  const Interval tiny = exp(Interval::from_string("-1e17", 128));
  CHECK(tiny.is_positive());
  CHECK(log(tiny).contains(Interval::from_string("-1e17", 128)));
}

TEST_CASE("comparisons are certified") {
  const Interval a = Interval::from_string("1.5", 64);
  const Interval b = Interval::from_string("1.6", 64);
  CHECK(certainly_less(a, b));
  CHECK_FALSE(certainly_less(b, a));
  CHECK_FALSE(certainly_less(hull(a, b), b));
  CHECK(certainly_less_equal(a, a));
  CHECK(hull(a, b).overlaps(a));
  CHECK_THROWS_AS(intersect(a, b), DomainError);
}

TEST_CASE("errors") {
  const Interval z = hull(Interval(-1L, 64), Interval(1L, 64));
  CHECK_THROWS_AS(Interval(1L, 64) / z, InsufficientPrecision);
  CHECK_THROWS_AS(log(z), InsufficientPrecision);
}

TEST_CASE("complex boxes") {
  const Precision p = 128;
  const ComplexBox i{Interval(0L, p), Interval(1L, p)};
  const ComplexBox m = i * i;
  CHECK(m.re.contains(BigInt(-1)));
  CHECK(m.im.contains(BigInt(0)));
  const ComplexBox z{Interval(3L, p), Interval(4L, p)};
  CHECK(z.modulus().contains(BigInt(5)));
  const ComplexBox one = z * reciprocal(z);
  CHECK(one.re.contains(BigInt(1)));
  CHECK(one.im.contains(BigInt(0)));
  CHECK(pow(z, 3).re.contains(BigInt(-117)));
  CHECK(pow(z, 3).im.contains(BigInt(44)));
  CHECK(ComplexBox(Interval(2L, p)).is_real());
}
