#include "fibsum/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <sstream>

#include "fibsum/baker.hpp"
#include "fibsum/errors.hpp"
#include "fibsum/minpoly.hpp"
#include "fibsum/norms.hpp"
#include "fibsum/report.hpp"
#include "fibsum/roots.hpp"
#include "fibsum/search.hpp"
#include "fibsum/seq_core.hpp"
#include "fibsum/worked_example.hpp"

namespace fibsum::cli {

namespace {

struct Globals {
  long precision = kDefaultPrecision;
  std::string format = "text";
  int threads = 1;
};

long default_precision() {
  if (const char* env = std::getenv("FIBSUM_PRECISION")) {
    try {
      return std::stol(env);
    } catch (const std::exception&) {
      throw DomainError("FIBSUM_PRECISION is not an integer");
    }
  }
  return kDefaultPrecision;
}

std::string solutions_text(const SearchReport& r) {
  std::ostringstream s;
  s << "k=" << r.k << " d=" << r.d << " n<=" << r.n_max << ": " << r.solutions.size()
    << " solution(s)\n";
  for (const auto& x : r.solutions) {
    s << "  n=" << x.n << " m=" << x.m << " value=" << x.value.get_str() << "\n";
  }
  return s.str();
}

std::string bound_text(const BoundReport& r) {
  std::ostringstream s;
  s << "k=" << r.k << " d=" << r.d << " field degree " << r.field_degree << "\n";
  s << "c1 = " << r.c1.to_string(12) << "\nc2 = " << r.c2.to_string(12)
    << "\nc3 = " << r.c3.to_string(12) << "\n|alpha2| <= " << r.alpha2_bound.to_string(12) << "\n";
  for (std::size_t i = 0; i < r.spec.gammas.size(); ++i) {
    const auto& g = r.spec.gammas[i];
    s << g.label << ": minpoly " << g.minpoly.to_string()
      << (g.minpoly_certified ? "" : " (irreducibility not certified)")
      << ", h = " << g.height.to_string(10) << ", A = " << r.A[i].to_string(10) << "\n";
  }
  s << "C = " << r.C.to_string(10) << "\nlambda = " << r.lambda.to_string(10) << "\n";
  s << "a + b log(n+2) - c n > 0 with a = " << r.a.to_string(10)
    << ", b = " << r.b.to_string(10) << ", c = " << r.c.to_string(10) << "\n";
  s << "N = " << r.N.get_str() << "\nM = " << r.M.get_str() << "\n";
  return s.str();
}

Interval parse_interval(const std::string& text, Precision p) { return Interval::from_string(text, p); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Globals g;
  try {
    g.precision = default_precision();
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  CLI::App app{"Exact and certified computations for k-generalized Fibonacci window sums"};
  app.name(args.empty() ? "fibsum" : args[0]);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--precision", g.precision, "Interval precision in bits (>= 64)")
      ->envname("FIBSUM_PRECISION")
      ->check(CLI::Range(64L, 1L << 24));
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::PositiveNumber);

  // Each handler returns an exit code.
  std::function<int()> action;
  auto bits = [&] { return static_cast<Precision>(g.precision); };
  auto json = [&] { return g.format == "json"; };
  auto emit = [&](const Json& j) { out << j.dump(2) << "\n"; };

  // seq
  int k = 3;
  std::int64_t n = 0;
  auto* seq = app.add_subcommand("seq", "Print F_n^(k)");
  seq->add_option("--k", k, "Order k >= 2");
  seq->add_option("--n", n, "Index n >= -(k-2)")->required();
  seq->callback([&] {
    action = [&] {
      const BigInt v = kbonacci(RecurrenceOrder(k), n);
      if (json()) {
        emit(Json{{"k", std::to_string(k)}, {"n", std::to_string(n)}, {"value", v.get_str()}});
      } else {
        out << v.get_str() << "\n";
      }
      return kOk;
    };
  });

  // roots
  auto* roots = app.add_subcommand("roots", "Certified roots of the characteristic polynomial");
  roots->add_option("--k", k, "Order k >= 2");
  roots->callback([&] {
    action = [&] {
      const RootSet rs = all_roots(k, bits());
      if (json()) {
        emit(to_json(rs));
      } else {
        out << "alpha1 = " << rs.dominant.to_string(30) << "\n";
        for (std::size_t i = 0; i < rs.roots.size(); ++i) {
          const auto& z = rs.roots[i];
          out << "root " << i + 1 << ": " << z.re.to_string(20) << " + " << z.im.to_string(20)
              << "i  |z| = " << z.modulus().to_string(12) << "\n";
        }
      }
      return kOk;
    };
  });

  // binet-check
  std::int64_t n_min = 1, n_max = 200;
  auto* binet = app.add_subcommand("binet-check", "Compare the Binet form with the recurrence");
  binet->add_option("--k", k, "Order k >= 2");
  binet->add_option("--n-min", n_min, "First index");
  binet->add_option("--n-max", n_max, "Last index");
  binet->callback([&] {
    action = [&] {
      const RootSet rs = all_roots(k, bits());
      std::vector<std::int64_t> bad;
      for (std::int64_t i = n_min; i <= n_max; ++i) {
        const BigInt exact = kbonacci(RecurrenceOrder(k), i);
        if (!binet_eval(rs, i).contains(exact)) bad.push_back(i);
      }
      if (json()) {
        emit(Json{{"k", std::to_string(k)},
                  {"n_min", std::to_string(n_min)},
                  {"n_max", std::to_string(n_max)},
                  {"mismatches", bad}});
      } else {
        out << "k=" << k << " n in [" << n_min << ", " << n_max << "]: "
            << (bad.empty() ? "all enclosures contain F_n" : std::to_string(bad.size()) + " mismatches")
            << "\n";
      }
      return bad.empty() ? kOk : kVerificationFailed;
    };
  });

  // norm
  int k_lo = 2, k_hi = 0;
  auto* norm = app.add_subcommand("norm", "Delta(k) by closed form, recursion and resultant");
  norm->add_option("--k", k_lo, "Order (or first order of a range)");
  norm->add_option("--k-max", k_hi, "Last order of the range");
  norm->callback([&] {
    action = [&] {
      const int hi = std::max(k_lo, k_hi);
      Json rows = Json::array();
      bool ok = true;
      for (int kk = k_lo; kk <= hi; ++kk) {
        const BigInt closed = delta_closed_form(kk);
        const BigInt rec = delta_recursion(kk);
        const BigInt res = delta_resultant(kk);
        const BigInt sign = kk % 2 == 0 ? 1 : -1;
        const bool agree = rec == res && res == sign * closed;
        ok = ok && agree;
        if (json()) {
          rows.push_back({{"k", std::to_string(kk)},
                          {"delta", closed.get_str()},
                          {"delta_recursion", rec.get_str()},
                          {"resultant", res.get_str()},
                          {"agree", agree}});
        } else {
          out << "k=" << kk << " Delta=" << closed.get_str() << " resultant=" << res.get_str()
              << (agree ? "" : "  MISMATCH") << "\n";
        }
      }
      if (json()) emit(rows);
      return ok ? kOk : kVerificationFailed;
    };
  });

  // scan-mod25
  int scan_lo = 2, scan_hi = 100;
  auto* scan = app.add_subcommand("scan-mod25", "Delta(k) mod 25 and the period-100 check");
  scan->add_option("--k-lo", scan_lo, "First order");
  scan->add_option("--k-hi", scan_hi, "Last order");
  scan->callback([&] {
    action = [&] {
      const auto entries = mod25_scan(scan_lo, scan_hi);
      bool ok = true;
      Json rows = Json::array();
      for (const auto& e : entries) {
        const bool periodic = periodicity_check(e.k);
        ok = ok && !e.flagged && periodic;
        if (json()) {
          rows.push_back({{"k", std::to_string(e.k)},
                          {"residue", std::to_string(e.residue)},
                          {"flagged", e.flagged},
                          {"periodic", periodic}});
        } else {
          out << "k=" << e.k << " Delta mod 25 = " << e.residue << (e.flagged ? "  FLAGGED" : "")
              << (periodic ? "" : "  PERIODICITY FAILS") << "\n";
        }
      }
      if (json()) emit(rows);
      return ok ? kOk : kVerificationFailed;
    };
  });

  // v5-check
  std::vector<int> v5_ks{6, 11, 16, 21, 26, 51, 101, 126};
  auto* v5 = app.add_subcommand("v5-check", "Confirm v_5(Delta(k)) = v_5(k - 1)");
  v5->add_option("--k", v5_ks, "Orders to check")->delimiter(',');
  v5->callback([&] {
    action = [&] {
      bool ok = true;
      Json rows = Json::array();
      for (int kk : v5_ks) {
        const int v = padic_val(5, delta_closed_form(kk));
        const int expected = padic_val(5, BigInt(kk - 1));
        ok = ok && v == expected;
        if (json()) {
          rows.push_back({{"k", std::to_string(kk)},
                          {"v5_delta", std::to_string(v)},
                          {"v5_k_minus_1", std::to_string(expected)}});
        } else {
          out << "k=" << kk << " v_5(Delta) = " << v << ", v_5(k-1) = " << expected
              << (v == expected ? "" : "  MISMATCH") << "\n";
        }
      }
      if (json()) emit(rows);
      return ok ? kOk : kVerificationFailed;
    };
  });

  // minpoly
  int d = 1;
  std::string f_csv, num_csv, den_csv, root_re, root_im = "0";
  auto* minpoly = app.add_subcommand("minpoly", "Minimal polynomial of num(alpha)/den(alpha)");
  minpoly->add_option("--k", k, "Use f = characteristic polynomial of order k");
  minpoly->add_option("--d", d, "Use num = T^(d+1) - 1");
  minpoly->add_option("--f", f_csv, "Override f (ascending coefficients c0,c1,...)");
  minpoly->add_option("--num", num_csv, "Override the numerator");
  minpoly->add_option("--den", den_csv, "Override the denominator (default (k+1)T - 2k)");
  minpoly->add_option("--root", root_re, "Real part of the quotient value (required with --f)");
  minpoly->add_option("--root-im", root_im, "Imaginary part of the quotient value");
  minpoly->callback([&] {
    action = [&] {
      const IntPolynomial f = f_csv.empty() ? char_poly(k) : parse_polynomial(f_csv);
      const IntPolynomial num = num_csv.empty() ? c3_numerator(d) : parse_polynomial(num_csv);
      const IntPolynomial den = den_csv.empty() ? c3_denominator(k) : parse_polynomial(den_csv);
      ComplexBox root;
      if (!root_re.empty()) {
        root = ComplexBox{parse_interval(root_re, bits()), parse_interval(root_im, bits())};
      } else if (f_csv.empty()) {
        const Interval a1 = dominant_root(k, bits());
        root = ComplexBox(num(a1) / den(a1));
      } else {
        throw DomainError("--root is required with --f");
      }
      IntPolynomial poly;
      long prime = 0;
      bool certified = true;
      try {
        const auto mp = minpoly_of_quotient(f, num, den, root);
        poly = mp.poly;
        prime = mp.witness_prime;
      } catch (const InconclusiveIrreducibility& e) {
        poly = e.candidate();
        certified = false;
      }
      if (json()) {
        emit(Json{{"polynomial", to_json(poly)},
                  {"text", poly.to_string()},
                  {"certified", certified},
                  {"witness_prime", std::to_string(prime)}});
      } else {
        out << poly.to_string() << "\n";
        if (certified) {
          out << "irreducible mod " << prime << "\n";
        } else {
          out << "irreducibility inconclusive over the prime ladder\n";
        }
      }
      return certified ? kOk : kVerificationFailed;
    };
  });

  // height
  std::string poly_csv;
  auto* height = app.add_subcommand("height", "Logarithmic Weil height from a minimal polynomial");
  height->add_option("--poly", poly_csv, "Ascending coefficients c0,c1,...")->required();
  height->callback([&] {
    action = [&] {
      const Interval h = weil_height(parse_polynomial(poly_csv), bits());
      if (json()) {
        emit(to_json(h));
      } else {
        out << h.to_string(30) << "\n";
      }
      return kOk;
    };
  });

  // matveev
  int n_terms = 0, degree = 0;
  auto* matveev = app.add_subcommand("matveev", "Matveev constants C, A_i and lambda");
  matveev->add_option("--k", k, "Order k >= 3");
  matveev->add_option("--d", d, "Window length d");
  matveev->add_option("--den", den_csv, "Override the c3 denominator");
  matveev->add_option("--n-terms", n_terms, "Only print C for this many terms");
  matveev->add_option("--degree", degree, "Field degree for --n-terms");
  matveev->callback([&] {
    action = [&] {
      if (n_terms > 0) {
        const Interval C = matveev_C(n_terms, degree > 0 ? degree : 1, bits());
        if (json()) {
          emit(Json{{"C", to_json(C)}});
        } else {
          out << "C = " << C.to_string(12) << "\n";
        }
        return kOk;
      }
      const IntPolynomial den = den_csv.empty() ? c3_denominator(k) : parse_polynomial(den_csv);
      const LinearFormSpec spec = linear_form_spec(k, c3_numerator(d), den, bits());
      const Interval C = matveev_C(static_cast<int>(spec.gammas.size()), spec.field_degree, bits());
      const auto A = matveev_A_values(spec);
      const Interval lambda = matveev_lambda(C, A);
      if (json()) {
        Json terms = Json::array();
        for (std::size_t i = 0; i < A.size(); ++i) terms.push_back(to_json(spec.gammas[i], A[i]));
        emit(Json{{"field_degree", std::to_string(spec.field_degree)},
                  {"C", to_json(C)},
                  {"gammas", terms},
                  {"lambda", to_json(lambda)}});
      } else {
        out << "C = " << C.to_string(12) << "\n";
        for (std::size_t i = 0; i < A.size(); ++i) {
          out << spec.gammas[i].label << ": h = " << spec.gammas[i].height.to_string(10)
              << ", A = " << A[i].to_string(10) << "\n";
        }
        out << "lambda = " << lambda.to_string(12) << "\n";
      }
      return kOk;
    };
  });

  // bound
  auto* bound = app.add_subcommand("bound", "Effective bounds N, M for fixed (k, d)");
  bound->add_option("--k", k, "Order k >= 3");
  bound->add_option("--d", d, "Window length d >= 0");
  bound->callback([&] {
    action = [&] {
      const BoundReport r = derive_bounds(k, d, bits());
      if (json()) {
        emit(to_json(r));
      } else {
        out << bound_text(r);
      }
      return kOk;
    };
  });

  // threshold
  std::string a_text, b_text, c_text;
  bool refine = false;
  auto* threshold = app.add_subcommand("threshold", "First n = 2^j where a + b log(n+2) - c n < 0");
  threshold->add_option("--a", a_text)->required();
  threshold->add_option("--b", b_text)->required();
  threshold->add_option("--c", c_text)->required();
  threshold->add_flag("--refine", refine, "Binary-search the exact crossing");
  threshold->callback([&] {
    action = [&] {
      const BigInt N = threshold_search(parse_interval(a_text, bits()), parse_interval(b_text, bits()),
                                        parse_interval(c_text, bits()), {refine});
      if (json()) {
        emit(Json{{"N", N.get_str()}, {"refined", refine}});
      } else {
        out << N.get_str() << "\n";
      }
      return kOk;
    };
  });

  // search
  int partitions = 0;
  bool timing = false;
  std::int64_t search_n_max = 500;
  auto* search = app.add_subcommand("search", "Exhaustive search for window sums equal to F_m");
  search->add_option("--k", k, "Order k >= 2");
  search->add_option("--d", d, "Window length d >= 0");
  search->add_option("--n-max", search_n_max, "Largest start index");
  search->add_option("--partitions", partitions, "Index chunks (default: one per thread)");
  search->add_flag("--timing", timing, "Include elapsed time in the output");
  search->callback([&] {
    action = [&] {
      const auto r = find_solutions(k, d, search_n_max, {g.threads, partitions});
      if (g.format == "json") {
        emit(to_json(r, timing));
      } else if (g.format == "csv") {
        out << to_csv(r);
      } else {
        out << solutions_text(r);
        if (timing) out << "elapsed " << r.elapsed.count() << " ns\n";
      }
      return kOk;
    };
  });

  // intersect
  auto* intersect = app.add_subcommand("intersect", "k-bonacci values that are Fibonacci numbers");
  intersect->add_option("--k", k, "Order k >= 3");
  intersect->add_option("--n-max", search_n_max, "Largest index");
  intersect->callback([&] {
    action = [&] {
      const auto values = intersection_scan(k, search_n_max);
      Json arr = Json::array();
      for (const auto& v : values) arr.push_back(v.get_str());
      if (json()) {
        emit(Json{{"k", std::to_string(k)}, {"n_max", std::to_string(search_n_max)}, {"values", arr}});
      } else {
        for (const auto& v : values) out << v.get_str() << "\n";
      }
      return kOk;
    };
  });

  // verify-k2
  int d_max = 10;
  auto* k2 = app.add_subcommand("verify-k2", "Check the complete k = 2 characterization");
  k2->add_option("--d-max", d_max, "Largest window length");
  k2->add_option("--n-max", n_max, "Largest start index");
  k2->callback([&] {
    action = [&] {
      const K2Report r = verify_prop_k2(d_max, n_max);
      if (json()) {
        emit(to_json(r));
      } else {
        out << "checked " << r.cases_checked << " cases, " << r.sandwich_checked
            << " sandwich bounds: " << (r.ok() ? "consistent" : "MISMATCH") << "\n";
        for (const auto& c : r.mismatches) out << "  mismatch d=" << c.d << " n=" << c.n << "\n";
      }
      return r.ok() ? kOk : kVerificationFailed;
    };
  });

  // verify-growth
  auto* growth = app.add_subcommand("verify-growth", "Check alpha^(n-2) <= F_n <= alpha^(n-1)");
  growth->add_option("--k", k, "Order k >= 2");
  growth->add_option("--n-max", n_max, "Largest index");
  growth->callback([&] {
    action = [&] {
      const GrowthReport r = verify_growth(k, n_max, bits());
      if (json()) {
        emit(to_json(r));
      } else {
        out << "k=" << k << " checked " << r.checked << " indices: "
            << (r.ok() ? "all bounds certified" : "FAILURES") << "\n";
      }
      return r.ok() ? kOk : kVerificationFailed;
    };
  });

  // nonvanishing
  std::int64_t m = 0;
  auto* nonvanishing = app.add_subcommand("nonvanishing", "Certified |Lambda| > 0 for one (n, m)");
  nonvanishing->add_option("--k", k, "Order k >= 3");
  nonvanishing->add_option("--d", d, "Window length");
  nonvanishing->add_option("--n", n, "Start index")->required();
  nonvanishing->add_option("--m", m, "Fibonacci index")->required();
  nonvanishing->callback([&] {
    action = [&] {
      const Interval w = nonvanishing_witness(k, d, n, m, bits());
      if (json()) {
        emit(Json{{"abs_lambda", to_json(w)}});
      } else {
        out << "|Lambda| in " << w.to_string(20) << "\n";
      }
      return kOk;
    };
  });

  // repro-example-3-4
  auto* repro = app.add_subcommand("repro-example-3-4", "Reproduce the k = 3, d = 1 worked example");
  repro->callback([&] {
    action = [&] {
      const auto rows = reproduce_tribonacci_example(bits());
      bool ok = true;
      Json arr = Json::array();
      for (const auto& r : rows) {
        ok = ok && r.pass;
        if (json()) {
          arr.push_back({{"name", r.name},
                         {"computed", r.computed},
                         {"reference", r.reference},
                         {"tolerance", r.tolerance},
                         {"gating", r.gating},
                         {"pass", r.pass}});
        } else {
          out << std::left << std::setw(24) << r.name << std::setw(34) << r.computed << " ref "
              << std::setw(28) << r.reference << " " << std::setw(14) << r.tolerance << " "
              << (r.gating ? (r.pass ? "PASS" : "FAIL") : "info") << "\n";
        }
      }
      if (json()) emit(arr);
      return ok ? kOk : kVerificationFailed;
    };
  });

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("fibsum");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    return action ? action() : kUsage;
  } catch (const InsufficientPrecision& e) {
    err << "insufficient precision: " << e.what() << " (retry with a larger --precision)\n";
    return kInsufficientPrecision;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailed;
  }
}

}  // namespace fibsum::cli
