#pragma once

#include <string>

#include "json.hpp"
#include "lynperm/flag.hpp"
#include "lynperm/independence.hpp"
#include "lynperm/lyndon.hpp"
#include "lynperm/permuton.hpp"
#include "lynperm/polynomial.hpp"
#include "lynperm/reduction.hpp"
#include "lynperm/verify.hpp"

namespace lynperm {

using Json = nlohmann::json;

// Rationals cross the JSON boundary as "p/q" strings, never floats.
Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json perm_sum_to_json(const PermSum& s);
Json word_sum_to_json(const WordSum& s);
Json polynomial_to_json(const Polynomial& p);
Json table_to_json(const ReductionTable& table);

Json permuton_to_json(const BlowupPermuton& P);
BlowupPermuton permuton_from_json(const Json& j);
BlowupPermuton read_permuton_spec(const std::string& path);

Json certificate_to_json(const JacobianCertificate& cert);
Json estimate_to_json(const DensityEstimate& est);
Json check_results_to_json(const std::vector<CheckResult>& results);

}  // namespace lynperm
