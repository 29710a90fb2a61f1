#pragma once

#include "json.hpp"
#include "lsc/virtualize.hpp"

namespace lsc {

using Json = nlohmann::ordered_json;

// Weights encode as arrays; integral coordinates as numbers, the rest as
// exact strings such as "3/2".
Json weight_to_json(const Weight& w);
Weight weight_from_json(const Json& j, int expected_rank = -1);

// Root data encode as {"type": label, "matrix": [[...]]} and decode from
// either key, matrix taking precedence.
Json gcm_to_json(const RootDatum& g);
RootDatum gcm_from_json(const Json& j);

Json decomposition_to_json(const RootDatum& g, const Decomposition& d);

Json monomial_to_json(const Monomial& m);
Monomial monomial_from_json(const Json& j);

// Folding schema with 1-based node numbers:
// {"child": "B2", "parent": "D3", "psi": {"1": [1], "2": [2, 3]},
//  "gamma": {"1": 2, "2": 1}}.
Json folding_to_json(const Folding& f);
Folding folding_from_json(const Json& j);

}  // namespace lsc
