#include <doctest.h>

#include <cmath>

#include "fibsum/baker.hpp"
#include "fibsum/errors.hpp"
#include "fibsum/roots.hpp"

using namespace fibsum;

namespace {

double C_double(int n, int l) {
  return 1.4 * std::pow(30.0, n + 3) * std::pow(n, 4.5) * l * l * (1 + std::log(l));
}

}  // namespace

TEST_CASE("C constant") {
  const Interval C = matveev_C(4, 6, 256);
  CHECK(C.to_double() == doctest::Approx(1.5755e15).epsilon(1e-4));
  for (int n = 1; n <= 5; ++n) {
    for (int l : {1, 2, 6, 10}) {
      CHECK(matveev_C(n, l, 128).to_double() == doctest::Approx(C_double(n, l)).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(matveev_C(0, 6, 128), DomainError);
}

TEST_CASE("A values") {
  const Precision p = 128;
  const Interval A2 = matveev_A(Interval::from_string("0.2", p), log(dominant_root(3, p)), 6);
  CHECK(A2.to_double() == doctest::Approx(1.2).epsilon(1e-12));
  const Interval floor = matveev_A(Interval(0L, p), Interval(0L, p), 6);
  CHECK(floor.to_double() == doctest::Approx(0.16));
  const Interval log_dominated =
      matveev_A(Interval::from_string("0.01", p), Interval::from_string("-3", p), 2);
  CHECK(log_dominated.to_double() == doctest::Approx(3.0));
}

TEST_CASE("lambda and lower bound") {
  const Precision p = 256;
  const Interval C = matveev_C(4, 6, p);
  const std::vector<Interval> rounded{Interval::from_string("6.42", p), Interval::from_string("1.22", p),
                                      Interval::from_string("1.44", p), Interval::from_string("4.83", p)};
  const Interval lambda = matveev_lambda(C, rounded);
  CHECK(lambda.to_double() == doctest::Approx(8.58e16).epsilon(2e-3));
  const Interval lb = matveev_lower_bound(Interval(10L, p), lambda);
  CHECK(lb.is_positive());
  CHECK(log(lb).to_double() == doctest::Approx(-lambda.to_double() * (1 + std::log(10.0))));
}

TEST_CASE("linear form spec for k = 3, d = 1") {
  const LinearFormSpec spec = linear_form_spec(3, c3_numerator(1), c3_denominator(3), 256);
  REQUIRE(spec.gammas.size() == 4);
  CHECK(spec.field_degree == 6);
  CHECK(spec.gammas[0].minpoly == (IntPolynomial{-1, 10, -44, 22}));
  CHECK(spec.gammas[0].minpoly_certified);
  CHECK(spec.gammas[0].value.re.to_double() == doctest::Approx(1.7558714946020217));
  CHECK(spec.gammas[1].height.to_double() == doctest::Approx(0.2031259544786688));
  CHECK(spec.gammas[3].height.to_double() == doctest::Approx(std::log(5.0) / 2));
  LinearFormSpec s = spec;
  s.set_exponents(10, 12);
  CHECK(s.B.to_double() == 12.0);
  CHECK(matveev_lower_bound(s).is_positive());
}

TEST_CASE("nonvanishing witnesses") {
  CHECK(nonvanishing_witness(3, 1, 2, 4, 256).is_positive());
  CHECK(nonvanishing_witness(4, 0, 10, 10, 256).is_positive());
  CHECK(nonvanishing_witness(3, 1, 1, 3, 256).is_positive());
  CHECK_THROWS_AS(nonvanishing_witness(2, 1, 1, 3, 256), DomainError);
}

TEST_CASE("threshold search") {
  const Precision p = 256;
  const Interval a = Interval::from_string("1.46e17", p);
  const Interval b = Interval::from_string("85.53e15", p);
  const Interval c = Interval::from_string("0.78", p);
  const BigInt two63 = BigInt(1) << 63;
  CHECK(threshold_search(a, b, c) == two63);
  CHECK(threshold_inequality(a, b, c, two63 / 2).is_positive());
  CHECK(threshold_inequality(a, b, c, two63).is_negative());
  const BigInt refined = threshold_search(a, b, c, {true});
  CHECK(refined > two63 / 2);
  CHECK(refined <= two63);
  CHECK(threshold_inequality(a, b, c, refined).is_negative());
  CHECK(threshold_inequality(a, b, c, refined - 1).is_nonnegative());
  // Small case checked by hand: 10 + log(n+2) - n < 0 first at n = 16 among powers of 2.
  CHECK(threshold_search(Interval(10L, p), Interval(1L, p), Interval(1L, p)) == 16);
  CHECK_THROWS_AS(threshold_search(a, b, Interval(0L, p)), DomainError);
  CHECK_THROWS_AS(threshold_search(a, b, c.midpoint() - c), DomainError);
}

TEST_CASE("derive_bounds") {
  const BoundReport r = derive_bounds(3, 1, 256);
  CHECK(r.field_degree == 6);
  CHECK(r.N == BigInt(1) << 63);
  CHECK(r.M == 2 * r.N + 4);
  CHECK(r.c.to_double() == doctest::Approx(0.7859).epsilon(1e-3));
  CHECK(r.alpha2_bound.to_double() == doctest::Approx(0.7373527057603).epsilon(1e-10));
  // 1.57 with the 4 alpha - 2 denominator; 0.857 with 4 alpha - 6.
  CHECK((r.c2 * sqrt(Interval(5L, 256))).to_double() == doctest::Approx(0.857328).epsilon(1e-5));
  CHECK(r.lambda.to_double() == doctest::Approx(9.78e16).epsilon(0.01));
  CHECK(threshold_inequality(r.a, r.b, r.c, r.N).is_negative());
  CHECK_THROWS_AS(derive_bounds(2, 1, 256), DomainError);
  CHECK_THROWS_AS(derive_bounds(3, -1, 256), DomainError);
}
