#pragma once

#include <string>

#include <json.hpp>

#include "adhm/classify.hpp"
#include "adhm/datum.hpp"
#include "adhm/monad.hpp"
#include "adhm/strata.hpp"
#include "adhm/uhlenbeck.hpp"

namespace adhm {

using Json = nlohmann::json;

// Datum document format:
//   {"c": 2, "r": 1, "A": [["0","1"],["0","0"]], "B": ..., "I": ..., "J": ...}
// Matrices are row-major arrays of arrays of rational strings ("p" or
// "p/q"). Parse errors name the offending field and position.

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols,
                        const std::string& field);

Json datum_to_json(const AdhmDatum& x);
AdhmDatum datum_from_json(const Json& j);

std::string serialize_datum(const AdhmDatum& x);
AdhmDatum parse_datum(const std::string& text);
AdhmDatum load_datum(const std::string& path);

// Report rendering. Text form is "key: value" lines with keys sorted
// alphabetically; JSON form carries the same keys.
Json classification_to_json(const ClassificationReport& report);
Json fiber_to_json(const FiberReport& report, const PointP2& point);
Json support_to_json(const SupportReport& report);
Json invariants_to_json(const PerverseInvariants& invariants);
Json uhlenbeck_to_json(const UhlenbeckImage& image);
Json audit_to_json(const std::vector<DimensionAudit>& audits);

std::string render_text(const Json& report);

std::string format_point(const SupportPoint& point);

}  // namespace adhm
