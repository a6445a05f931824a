#pragma once

#include <json.hpp>
#include <string>

#include "fibsum/baker.hpp"
#include "fibsum/norms.hpp"
#include "fibsum/polynomial.hpp"
#include "fibsum/roots.hpp"
#include "fibsum/search.hpp"

namespace fibsum {

using Json = nlohmann::ordered_json;

/// {"value": midpoint, "radius": upper bound, "bits": precision}, decimal strings.
Json to_json(const Interval& x);
Json to_json(const ComplexBox& z);
/// Array of decimal coefficient strings, ascending degree.
Json to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const Json& j);
Json to_json(const RootSet& rs);
Json to_json(const GammaTerm& g, const Interval& A);
Json to_json(const BoundReport& r);
Json to_json(const SearchReport& r, bool include_timing = false);
Json to_json(const K2Report& r);
Json to_json(const GrowthReport& r);

/// Header row then one "k,d,n,m,value" row per solution.
std::string to_csv(const SearchReport& r);

}  // namespace fibsum
