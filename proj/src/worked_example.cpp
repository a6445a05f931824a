#include "fibsum/worked_example.hpp"

#include <cmath>

#include "fibsum/baker.hpp"
#include "fibsum/minpoly.hpp"
#include "fibsum/roots.hpp"
#include "fibsum/search.hpp"

namespace fibsum {

namespace {

bool within(const Interval& x, const char* lo, const char* hi) {
  const Precision p = x.precision();
  return certainly_less_equal(Interval::from_string(lo, p), x) &&
         certainly_less_equal(x, Interval::from_string(hi, p));
}

bool within_relative(const Interval& x, const char* reference, double rel) {
  const Interval ref = Interval::from_string(reference, x.precision());
  const Interval err = abs(x - ref) / ref;
  return err.upper_double() <= rel;
}

std::string pct(double rel) { return "+-" + std::to_string(static_cast<int>(rel * 100)) + "%"; }

}  // namespace

std::vector<ExampleCheck> reproduce_tribonacci_example(Precision bits) {
  std::vector<ExampleCheck> out;
  auto add = [&](std::string name, std::string computed, std::string reference,
                 std::string tolerance, bool gating, bool pass) {
    out.push_back({std::move(name), std::move(computed), std::move(reference),
                   std::move(tolerance), gating, !gating || pass});
  };

  // The reference c_3 uses the denominator 4 alpha_1 - 2.
  const IntPolynomial f3 = char_poly(3);
  const IntPolynomial num = c3_numerator(1);
  const IntPolynomial den{-2, 4};
  const LinearFormSpec spec = linear_form_spec(3, num, den, bits);
  const GammaTerm& c3 = spec.gammas[0];
  const IntPolynomial expected{-1, 6, -20, 26};
  add("minpoly(c3)", c3.minpoly.to_string(), expected.to_string(), "exact", true,
      c3.minpoly == expected && c3.minpoly_certified);

  const auto conj = isolate_roots(c3.minpoly, bits);
  add("|z1| = |z2|", conj[1].modulus().to_string(6), "0.29", "2 decimals", false, true);

  add("h(c3)", spec.gammas[0].height.to_string(8), "1.07", "[1.07, 1.09]", true,
      within(spec.gammas[0].height, "1.07", "1.09"));
  add("h(alpha1)", spec.gammas[1].height.to_string(8), "0.2", "[0.20, 0.21]", true,
      within(spec.gammas[1].height, "0.20", "0.21"));
  add("h(alpha)", spec.gammas[2].height.to_string(8), "0.24", "[0.24, 0.245]", true,
      within(spec.gammas[2].height, "0.24", "0.245"));
  add("h(sqrt5)", spec.gammas[3].height.to_string(8), "0.8", "[0.80, 0.81]", true,
      within(spec.gammas[3].height, "0.80", "0.81"));

  const Interval C = matveev_C(4, spec.field_degree, bits);
  add("C_{4,6}", C.to_string(6), "1.57e15", pct(0.01), true, within_relative(C, "1.57e15", 0.01));

  const auto A = matveev_A_values(spec);
  const char* a_ref[] = {"6.42", "1.22", "1.44", "4.83"};
  for (std::size_t i = 0; i < A.size(); ++i) {
    add("A_" + std::to_string(i + 1), A[i].to_string(6), a_ref[i], pct(0.01), false, true);
  }
  const Interval lambda = matveev_lambda(C, A);
  add("lambda", lambda.to_string(6), "85.53e15", pct(0.05), true,
      within_relative(lambda, "85.53e15", 0.05));

  const RootSet rs = all_roots(3, bits);
  add("|alpha2|", rs.second_modulus().to_string(6), "< 0.74", "informational", false, true);

  const Interval a = Interval::from_string("1.46e17", bits);
  const Interval b = Interval::from_string("85.53e15", bits);
  const Interval c = Interval::from_string("0.78", bits);
  const BigInt N = threshold_search(a, b, c);
  const BigInt two63 = BigInt(1) << 63;
  add("threshold N", N.get_str(), two63.get_str(), "exact", true, N == two63);
  const bool holds62 = threshold_inequality(a, b, c, two63 / 2).is_positive();
  const bool fails63 = threshold_inequality(a, b, c, two63).is_negative();
  add("inequality at 2^62", holds62 ? "holds" : "not certified", "holds", "certified sign", true,
      holds62);
  add("inequality at 2^63", fails63 ? "fails" : "not certified", "fails", "certified sign", true,
      fails63);

  // Pipeline with c_3 = (alpha_1^2 - 1)/(4 alpha_1 - 6), the general formula.
  const BoundReport r = derive_bounds(3, 1, bits);
  add("corrected minpoly(c3)", r.spec.gammas[0].minpoly.to_string(), "-", "informational", false,
      true);
  add("corrected h(c3)", r.spec.gammas[0].height.to_string(6), "-", "informational", false, true);
  add("corrected lambda", r.lambda.to_string(6), "85.53e15", "informational", false, true);
  add("corrected a", r.a.to_string(6), "1.46e17", "informational", false, true);
  add("corrected c", r.c.to_string(6), "0.78", "informational", false, true);
  add("corrected N", r.N.get_str(), two63.get_str(), "informational", false, true);
  add("corrected M", r.M.get_str(), "2N + 4", "informational", false, true);

  const auto found = find_solutions(3, 1, 500);
  std::string list;
  for (const auto& s : found.solutions) {
    list += "(" + std::to_string(s.n) + "," + std::to_string(s.m) + ")";
  }
  add("solutions n <= 500", list, "(-1,0)(0,1)(0,2)(1,3)(2,4)", "informational", false, true);
  return out;
}

}  // namespace fibsum
