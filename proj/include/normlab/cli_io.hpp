#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "normlab/linalg.hpp"
#include "normlab/norm_spec.hpp"
#include "normlab/sphere_opt.hpp"
#include "normlab/verification.hpp"

namespace normlab {

using AnyNormSpec = std::variant<VectorNormSpec, MatrixNormSpec>;

/// Parses a tagged-tree JSON norm document:
///   {"kind": "lp", "p": 2}             p may be the string "inf"
///   {"kind": "weighted-lp", "p": 1, "weights": [1, 2]}
///   {"kind": "scaled", "gamma": 2, "inner": {...}}
///   {"kind": "maxof", "inner": [{...}, ...]}
///   {"kind": "extracted", "role": 1, "source": {...}, "budget": {...}}
///   {"kind": "sigma" | "entrywise-max" | "maxcolsum" | "maxrowsum" | "spectral"}
///   {"kind": "gind", "norm1": {...}, "norm2": {...}}
/// "scaled" and "maxof" take their vector/matrix flavour from their members.
/// Throws ParseError whose message starts with the JSON pointer of the
/// offending node (or line and column for syntax errors).
AnyNormSpec parse_norm_spec(std::string_view json_text);

/// JSON text or a shorthand: l1, l2, linf, l<p> (e.g. l1.5), <gamma>*<name>.
VectorNormSpec parse_vector_norm(std::string_view text);

/// JSON text or a shorthand: sigma, entrywise-max (m), maxcolsum (C),
/// maxrowsum (R), spectral (S), <gamma>*<name>.
MatrixNormSpec parse_matrix_norm(std::string_view text);

/// Compact JSON; parse_norm_spec(to_json(s)) == s.
std::string to_json(const VectorNormSpec& spec);
std::string to_json(const MatrixNormSpec& spec);

/// One complex literal: optional real part, optional signed imaginary part
/// ending in "i" ("1", "-2.5e3", "3i", "-i", "1+2i", "1-i"). Surrounding
/// whitespace is ignored.
Complex parse_complex(std::string_view literal);

/// Shortest literal that parse_complex reads back to the same value.
std::string format_complex(Complex z);

/// CSV rows of complex literals, or JSON {"rows": [[{"re": 1, "im": 0}, ...], ...]}
/// (a bare number is accepted for a real cell). The format is detected from
/// the first non-blank character. Ragged, non-square and malformed input
/// throws ParseError.
Matrix parse_matrix(std::string_view text);

/// Comma-separated complex literals, or JSON {"entries": [...]}.
Vector parse_vector(std::string_view text);

/// Report document for a suite run (the "result" part of `verify --report`).
std::string suite_report_json(const SuiteReport& report);

/// The `normlab` command line. Returns the process exit code:
/// 0 success, 1 mathematical failure (with witness), 2 usage or input error,
/// 3 numerical non-convergence.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace normlab
