#pragma once

#include <string>

#include <json.hpp>

#include "qsphere/diamond.hpp"

namespace qsphere {

/// [[exponent, coefficient], ...] in descending exponent order. Coefficients
/// outside int64 are emitted as decimal strings.
nlohmann::json to_json(const LaurentPoly& c);

/// ["x1*", "x3", ...]
nlohmann::json to_json(const Word& w);

/// [{"coeff": [...], "monomial": [...]}, ...] in canonical term order.
nlohmann::json to_json(const NCPolynomial& p);

nlohmann::json to_json(const MetricVector& m);

/// {"lhs": [...], "type": "T3(2)", "rhs": [...]}
nlohmann::json to_json(const Rule& rule);

/// {"n": N, "count": K, "rules": [...]}
nlohmann::json rules_json(const ReductionSystem& system);

/// {"n", "ambiguities", "resolved", "unresolved", "elapsed_ms"}; elapsed_ms
/// is omitted when include_elapsed is false. Aborted runs also carry
/// "checked" and "error".
nlohmann::json report_json(const Report& report, bool include_elapsed = true);

/// "x1 x2 -> q^-1·x2 x1"
std::string rule_text(const Rule& rule);

/// Summary line followed by one line per unresolved ambiguity.
std::string report_text(const Report& report);

}  // namespace qsphere
