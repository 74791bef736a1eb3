#pragma once

#include "hsym/invariants.hpp"
#include "hsym/weight_search.hpp"

#include <json.hpp>

namespace hsym {

using Json = nlohmann::ordered_json;

// Integers are emitted as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; rationals always as "p/q" strings.
Json integer_to_json(const Integer& z);
Integer integer_from_json(const Json& j);

Json to_json(const Weight& w);
Weight weight_from_json(const Json& j);

Json to_json(const HermitianSpace& space);
HermitianSpace hermitian_space_from_json(const Json& j);

// {family, klein_label, ambient, node, weight, rank, h0, xi_k, xi_k_ad,
//  c1_ratio, j, lambda1_reference, sharp}; j is null when undefined.
Json to_json(const BundleReport& report);
BundleReport bundle_report_from_json(const Json& j);

Json to_json(const SearchOutcome& outcome);
SearchOutcome search_outcome_from_json(const Json& j);

}  // namespace hsym
