#pragma once

#include <string>

#include <json.hpp>

#include "toepmin/moments.hpp"
#include "toepmin/ratio_search.hpp"
#include "toepmin/solver.hpp"

namespace toepmin {

using json = nlohmann::json;

// Matrix JSON: {"n": N, "coefficients": [[re, im], ...]} for a_0..a_N.
json to_json(const HermitianToeplitzSpec& spec);
HermitianToeplitzSpec spec_from_json(const json& j);

// Step-function JSON: {"height": c, "jumps_radians": [...], "first_sign": 1|-1}.
json to_json(const AlternatingStepFunction& psi);
AlternatingStepFunction step_from_json(const json& j);

// RationalInner JSON: {"order": n, "numerator": [[re, im], ...], "denominator": ...}.
json to_json(const RationalInner& w);
RationalInner inner_from_json(const json& j);

json to_json(const MinimizerResult& res, const Certificate& cert);

json to_json(const BoundReport& rep);
std::string bound_csv_header();
std::string bound_csv_row(const BoundReport& rep, std::size_t max_params);

}  // namespace toepmin
