#pragma once

#include <string_view>
#include <variant>

#include <json.hpp>

#include "graphlie/cohomology.hpp"
#include "graphlie/lie_algebra.hpp"
#include "graphlie/rigidity.hpp"

namespace graphlie {

using Json = nlohmann::json;

/// {"n","k","grading","basis":[{"label","degree","multidegree"}],
///  "brackets":[{"i","j","terms":[{"l","c"}]}]}, 0-based indices, i < j,
/// coefficients as "p/q".
Json algebra_to_json(const GradedLieAlgebra& a);
/// Ungraded algebra: {"n","brackets"}.
Json algebra_to_json(const LieAlgebra& a);

/// Accepts both shapes above. Labels that parse as bracket words are kept as
/// words. Throws DomainError on malformed input.
std::variant<GradedLieAlgebra, LieAlgebra> algebra_from_json(const Json& doc);
GradedLieAlgebra graded_algebra_from_json(const Json& doc);

Json vector_to_json(const Vector& v);
Json h2_report_to_json(const H2NilReport& r);
Json certificate_to_json(const Certificate& c);
/// {"graph6","m","k","dim","verdict","certificate"[, "h2_nil"]}
Json sweep_row_to_json(const SweepRow& r);

}  // namespace graphlie
