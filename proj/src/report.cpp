#include "fibsum/report.hpp"

#include <sstream>

#include "fibsum/errors.hpp"

namespace fibsum {

namespace {

std::string str(std::int64_t v) { return std::to_string(v); }

Json k2_cases(const std::vector<K2Case>& cases) {
  Json out = Json::array();
  for (const auto& c : cases) {
    Json ms = Json::array();
    for (auto m : c.ms) ms.push_back(str(m));
    out.push_back({{"d", str(c.d)}, {"n", str(c.n)}, {"m", ms}});
  }
  return out;
}

Json index_list(const std::vector<std::int64_t>& xs) {
  Json out = Json::array();
  for (auto x : xs) out.push_back(str(x));
  return out;
}

}  // namespace

Json to_json(const Interval& x) {
  return {{"value", x.midpoint_string()},
          {"radius", x.radius_string()},
          {"bits", std::to_string(x.precision())}};
}

Json to_json(const ComplexBox& z) { return {{"re", to_json(z.re)}, {"im", to_json(z.im)}}; }

Json to_json(const IntPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(c.get_str());
  return out;
}

IntPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("polynomial JSON must be an array");
  std::vector<BigInt> coeffs;
  for (const auto& item : j) {
    BigInt c;
    if (!item.is_string() || c.set_str(item.get<std::string>(), 10) != 0) {
      throw DomainError("polynomial coefficients must be decimal strings");
    }
    coeffs.push_back(c);
  }
  return IntPolynomial(std::move(coeffs));
}

Json to_json(const RootSet& rs) {
  Json roots = Json::array();
  for (const auto& r : rs.roots) {
    Json entry = to_json(r);
    entry["modulus"] = to_json(r.modulus());
    roots.push_back(entry);
  }
  return {{"k", str(rs.k)},
          {"precision_bits", std::to_string(rs.precision_bits)},
          {"polynomial", to_json(char_poly(rs.k))},
          {"dominant", to_json(rs.dominant)},
          {"roots", roots}};
}

Json to_json(const GammaTerm& g, const Interval& A) {
  return {{"label", g.label},
          {"minpoly", to_json(g.minpoly)},
          {"minpoly_certified", g.minpoly_certified},
          {"value", to_json(g.value.re)},
          {"height", to_json(g.height)},
          {"log_abs", to_json(g.log_abs)},
          {"A", to_json(A)}};
}

Json to_json(const BoundReport& r) {
  Json gammas = Json::array();
  for (std::size_t i = 0; i < r.spec.gammas.size(); ++i) {
    gammas.push_back(to_json(r.spec.gammas[i], r.A[i]));
  }
  return {{"k", str(r.k)},
          {"d", str(r.d)},
          {"precision_bits", std::to_string(r.precision_bits)},
          {"rounding", "outward"},
          {"inequality", "a + b*ln(n+2) - c*n > 0"},
          {"field_degree", str(r.field_degree)},
          {"c1", to_json(r.c1)},
          {"c2", to_json(r.c2)},
          {"c3", to_json(r.c3)},
          {"alpha2_bound", to_json(r.alpha2_bound)},
          {"C", to_json(r.C)},
          {"gammas", gammas},
          {"lambda", to_json(r.lambda)},
          {"a", to_json(r.a)},
          {"b", to_json(r.b)},
          {"c", to_json(r.c)},
          {"N", r.N.get_str()},
          {"M", r.M.get_str()}};
}

Json to_json(const SearchReport& r, bool include_timing) {
  Json sols = Json::array();
  for (const auto& s : r.solutions) {
    sols.push_back({str(s.k), str(s.d), str(s.n), str(s.m), s.value.get_str()});
  }
  Json out = {{"k", str(r.k)},
              {"d", str(r.d)},
              {"n_max", str(r.n_max)},
              {"scanned_count", str(r.scanned_count)},
              {"partition_count", str(r.partition_count)},
              {"solution_fields", {"k", "d", "n", "m", "value"}},
              {"solutions", sols}};
  if (include_timing) out["elapsed_ns"] = str(r.elapsed.count());
  return out;
}

Json to_json(const K2Report& r) {
  return {{"d_max", str(r.d_max)},
          {"n_max", str(r.n_max)},
          {"cases_checked", str(r.cases_checked)},
          {"sandwich_checked", str(r.sandwich_checked)},
          {"ok", r.ok()},
          {"solutions", k2_cases(r.solutions)},
          {"mismatches", k2_cases(r.mismatches)},
          {"sandwich_failures", k2_cases(r.sandwich_failures)}};
}

Json to_json(const GrowthReport& r) {
  return {{"k", str(r.k)},
          {"n_max", str(r.n_max)},
          {"precision_bits", std::to_string(r.precision_bits)},
          {"checked", str(r.checked)},
          {"ok", r.ok()},
          {"dominant_failures", index_list(r.dominant_failures)},
          {"power_of_two_failures", index_list(r.power_of_two_failures)}};
}

std::string to_csv(const SearchReport& r) {
  std::ostringstream os;
  os << "k,d,n,m,value\n";
  for (const auto& s : r.solutions) {
    os << s.k << ',' << s.d << ',' << s.n << ',' << s.m << ',' << s.value.get_str() << '\n';
  }
  return os.str();
}

}  // namespace fibsum
