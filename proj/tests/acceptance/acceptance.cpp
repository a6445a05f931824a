// Acceptance suite: one PASS/FAIL line per criterion. Tolerances and
// runtime limits are fixed here.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "fibsum/baker.hpp"
#include "fibsum/minpoly.hpp"
#include "fibsum/norms.hpp"
#include "fibsum/roots.hpp"
#include "fibsum/search.hpp"
#include "fibsum/seq_core.hpp"

using namespace fibsum;

namespace {

constexpr Precision kBits = 256;

struct Criterion {
  int id;
  const char* name;
  double time_limit_s;  // 0 = no limit
  std::function<std::string()> body;  // empty string = pass, else failure detail
};

bool within(const Interval& x, const char* lo, const char* hi) {
  return certainly_less_equal(Interval::from_string(lo, x.precision()), x) &&
         certainly_less_equal(x, Interval::from_string(hi, x.precision()));
}

bool within_relative(const Interval& x, const char* ref, const char* rel) {
  const Interval r = Interval::from_string(ref, x.precision());
  return certainly_less_equal(abs(x - r) / r, Interval::from_string(rel, x.precision()));
}

std::string sequence_golden() {
  const RecurrenceOrder three(3), five(5);
  if (kbonacci(three, 6) != 13 || kbonacci(three, 7) != 24) return "tribonacci values";
  if (kbonacci(five, 5) != 8 || kbonacci(five, 6) != 16 || kbonacci(five, 7) != 31) {
    return "pentanacci values";
  }
  struct Identity {
    int k;
    std::int64_t n, d, m;
  };
  const Identity ids[] = {{3, -1, 1, 0}, {3, 0, 1, 1}, {3, 0, 1, 2}, {3, 1, 1, 3},
                          {3, 2, 1, 4},  {3, 1, 3, 6}, {5, 5, 2, 10}};
  for (const auto& id : ids) {
    if (window_sum(RecurrenceOrder(id.k), id.n, id.d) != fibonacci(id.m)) {
      return "identity k=" + std::to_string(id.k) + " n=" + std::to_string(id.n);
    }
  }
  return {};
}

std::string k2_exhaustive() {
  const K2Report r = verify_prop_k2(10, 200);
  if (r.cases_checked != 11 * 201) return "case count";
  if (!r.mismatches.empty()) return std::to_string(r.mismatches.size()) + " characterization mismatches";
  if (!r.sandwich_failures.empty()) return std::to_string(r.sandwich_failures.size()) + " sandwich failures";
  return {};
}

std::string three_way_delta() {
  if (delta_closed_form(2) != -5 || delta_closed_form(3) != -88) return "Delta(2), Delta(3)";
  for (int k = 2; k <= 30; ++k) {
    const BigInt closed = delta_closed_form(k);
    const BigInt res = delta_resultant(k);
    const BigInt signed_closed = k % 2 == 0 ? closed : BigInt(-closed);
    if (delta_recursion(k) != res || res != signed_closed) return "disagreement at k=" + std::to_string(k);
  }
  return {};
}

std::string mod25_scans() {
  for (const auto& e : mod25_scan(2, 100)) {
    if (e.k % 5 != 1 && e.residue == 0) return "Delta = 0 mod 25 at k=" + std::to_string(e.k);
    if (!periodicity_check(e.k)) return "periodicity fails at k=" + std::to_string(e.k);
  }
  for (int k : {6, 11, 16, 21, 26, 51, 101, 126}) {
    if (padic_val(5, delta_closed_form(k)) != padic_val(5, BigInt(k - 1))) {
      return "v_5 mismatch at k=" + std::to_string(k);
    }
  }
  return {};
}

std::string binet_agreement() {
  int failures = 0;
  for (int k = 2; k <= 10; ++k) {
    const RootSet rs = all_roots(k, kBits);
    KbonacciStream s(RecurrenceOrder(k), 1);
    for (int n = 1; n <= 200; ++n, s.advance()) {
      if (nearest_integer(binet_eval(rs, n)) != s.value()) ++failures;
    }
  }
  return failures == 0 ? std::string{} : std::to_string(failures) + " failures";
}

std::string growth() {
  for (int k = 2; k <= 10; ++k) {
    if (!verify_growth(k, 400, kBits).ok()) return "k=" + std::to_string(k);
  }
  return {};
}

std::string example_constants() {
  const IntPolynomial num{-1, 0, 1};
  const IntPolynomial den{-2, 4};
  const LinearFormSpec spec = linear_form_spec(3, num, den, kBits);
  if (spec.gammas[0].minpoly != IntPolynomial{-1, 6, -20, 26}) {
    return "minpoly " + spec.gammas[0].minpoly.to_string();
  }
  if (!within(spec.gammas[3].height, "0.80", "0.81")) return "h(sqrt5)";
  if (!within(spec.gammas[2].height, "0.24", "0.245")) return "h(alpha)";
  if (!within(spec.gammas[1].height, "0.20", "0.21")) return "h(alpha1)";
  if (!within(spec.gammas[0].height, "1.07", "1.09")) return "h(c3) = " + spec.gammas[0].height.to_string(6);
  const Interval C = matveev_C(4, 6, kBits);
  if (!within_relative(C, "1.57e15", "0.01")) return "C = " + C.to_string(6);
  const Interval lambda = matveev_lambda(spec);
  if (!within_relative(lambda, "85.53e15", "0.05")) return "lambda = " + lambda.to_string(6);
  return {};
}

std::string example_threshold() {
  const Interval a = Interval::from_string("1.46e17", kBits);
  const Interval b = Interval::from_string("85.53e15", kBits);
  const Interval c = Interval::from_string("0.78", kBits);
  const BigInt N = threshold_search(a, b, c);
  if (N != BigInt("9223372036854775808")) return "N = " + N.get_str();
  if (!threshold_inequality(a, b, c, BigInt(1) << 62).is_positive()) return "not certified at 2^62";
  if (!threshold_inequality(a, b, c, BigInt(1) << 63).is_negative()) return "not certified at 2^63";
  return {};
}

std::string search_reproduction() {
  const auto r = find_solutions(3, 1, 500);
  std::vector<std::pair<std::int64_t, std::int64_t>> got;
  for (const auto& s : r.solutions) got.emplace_back(s.n, s.m);
  const std::vector<std::pair<std::int64_t, std::int64_t>> want{{-1, 0}, {0, 1}, {0, 2}, {1, 3}, {2, 4}};
  if (got != want) return "find_solutions(3, 1, 500)";
  if (intersection_scan(3, 500) != std::set<BigInt>{0, 1, 2, 13}) return "intersection k=3";
  for (int k = 4; k <= 10; ++k) {
    if (intersection_scan(k, 500) != std::set<BigInt>{0, 1, 2, 8}) return "intersection k=" + std::to_string(k);
  }
  return {};
}

std::string cross_module() {
  for (auto [k, d] : {std::pair{3, 1}, std::pair{4, 0}, std::pair{5, 2}}) {
    const BoundReport r = derive_bounds(k, d, kBits);
    if (!bound_consistency(k, d, 1000, r, {4, 0})) {
      return "k=" + std::to_string(k) + " d=" + std::to_string(d);
    }
  }
  return {};
}

std::string determinism() {
  for (int k : {2, 3, 4, 7}) {
    for (int d : {0, 1, 3}) {
      const auto seq = find_solutions(k, d, 2000);
      for (int parts : {4, 8, 13}) {
        if (find_solutions(k, d, 2000, {4, parts}).solutions != seq.solutions) {
          return "k=" + std::to_string(k) + " d=" + std::to_string(d) + " partitions=" + std::to_string(parts);
        }
      }
    }
  }
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "sequence golden set and worked identities", 1, sequence_golden},
      {2, "k = 2 exhaustive characterization and sandwich", 5, k2_exhaustive},
      {3, "Delta(k) closed form / recursion / resultant, k in [2,30]", 10, three_way_delta},
      {4, "mod 25 scan, periodicity, 5-adic valuations", 30, mod25_scans},
      {5, "Binet agreement k in [2,10], n in [1,200]", 30, binet_agreement},
      {6, "growth bounds k in [2,10], n in [2,400]", 30, growth},
      {7, "k = 3, d = 1 example constants", 5, example_constants},
      {8, "k = 3, d = 1 example threshold", 1, example_threshold},
      {9, "search reproduction and intersection scans", 10, search_reproduction},
      {10, "bounds consistent with search to n = 1000", 60, cross_module},
      {11, "parallel and sequential search agree", 0, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = c.body();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (detail.empty() && c.time_limit_s > 0 && secs >= c.time_limit_s) {
      detail = "runtime over " + std::to_string(c.time_limit_s) + " s";
    }
    const bool pass = detail.empty();
    failed += pass ? 0 : 1;
    std::printf("%s criterion %2d: %s (%.3f s)%s%s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs,
                pass ? "" : " -- ", detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
