#pragma once

// JSON encodings shared by the document parsers and the command-line reports.

#include <json.hpp>

#include "normlab/budget.hpp"
#include "normlab/linalg.hpp"
#include "normlab/norm_spec.hpp"
#include "normlab/verification.hpp"

namespace normlab {

// Insertion-ordered, so reports list fields in the order they are written.
using Json = nlohmann::ordered_json;

Json json_of(const VectorNormSpec& spec);
Json json_of(const MatrixNormSpec& spec);
Json json_of(const OptBudget& budget);
Json json_of(Complex z);
Json json_of(const Matrix& m);   // {"rows": [[{"re", "im"}, ...], ...]}
Json json_of(const Vector& v);   // {"entries": [{"re", "im"}, ...]}
Json json_of(const Witness& w);  // {"name", "kind": "matrix" | "vector", "rows" | "entries"}
Json json_of(const SuiteReport& report);

}  // namespace normlab
