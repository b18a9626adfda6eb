#pragma once

#include <json.hpp>

#include "cheby/degree.hpp"
#include "cheby/dynamics.hpp"
#include "cheby/lambda_family.hpp"
#include "cheby/render.hpp"

namespace cheby {

using Json = nlohmann::json;

/// Polynomials travel as arrays of [re, im] pairs, ascending powers.
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

Json to_json(Complex z);
Json to_json(const SpherePoint& z);  // [re, im] or "inf"

Json to_json(const RationalMap& r);  // {num, den, degree, lead_ratio}
Json to_json(const DegreeBreakdown& b);
Json to_json(const FixedPointRecord& rec);
Json to_json(const std::vector<FixedPointRecord>& recs);
Json to_json(const BoundCheck& c);
Json to_json(const LambdaFamilyRecord& rec);
Json to_json(const CriticalOrbitReport& rep);
Json to_json(const RayProbeReport& rep);
Json to_json(const PoleProbeReport& rep);
Json to_json(const ConnectivityEvidence& ev);

/// Fixed-point table formatted for terminal output.
std::string fixed_point_table(const std::vector<FixedPointRecord>& recs);

/// Parse "1:2,-2:1" / "1+2i:1,0.5-0.5i:3" into (root, multiplicity) pairs.
std::vector<std::pair<Complex, int>> parse_root_spec(const std::string& spec);

}  // namespace cheby
