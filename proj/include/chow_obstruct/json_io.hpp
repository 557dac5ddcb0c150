#pragma once

#include <json.hpp>

#include <string>
#include <string_view>

#include "chow_obstruct/abelian.hpp"
#include "chow_obstruct/complement.hpp"
#include "chow_obstruct/obstruction.hpp"

namespace chowob {

using Json = nlohmann::json;

// Integers are serialized as decimal strings; readers also accept JSON integers.
Json to_json(const Integer& x);
Json to_json(const IntegerVector& v);
Json to_json(const IntegerMatrix& m);
Json to_json(const ExactnessCertificate& c);
Json to_json(const GroupElement& e);
Json to_json(const AbelianPresentation& g);
Json to_json(const ObstructionReport& r);
Json to_json(const ClosedFormReport& r);

Integer integer_from_json(const Json& j);
IntegerMatrix matrix_from_json(const Json& j);
IntegerMatrix parse_matrix(std::string_view text);

/// {"generators": [...], "relations": [[...]]}
PresentationPtr presentation_from_json(const Json& j);

/// {"degree": 3, "direction": "contains_image" | "contained_in_image", "generators": ["2*x1*x2^2", ...]}
PushforwardAssumption custom_assumption_from_json(const AmbientSpace& ambient, const Json& j);

/// naive | even-degree | nori | custom:<path>
PushforwardAssumption parse_assumption(const AmbientSpace& ambient, std::string_view text);

Json read_json_file(const std::string& path);

}  // namespace chowob
