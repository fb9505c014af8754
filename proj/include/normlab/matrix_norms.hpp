#pragma once

#include <cstddef>

#include "normlab/budget.hpp"
#include "normlab/linalg.hpp"
#include "normlab/norm_spec.hpp"

namespace normlab {

/// N(A). Closed forms for the entrywise and column/row-sum norms, power
/// iteration on A*A for Spectral, gind_eval (a lower bound) for GInd.
/// Throws ConvergenceError if the spectral power iteration stalls.
double mnorm_eval(const MatrixNormSpec& spec, const Matrix& a, const OptBudget& budget);

/// As above with OptBudget::defaults(a.dim()).
double mnorm_eval(const MatrixNormSpec& spec, const Matrix& a);

/// sqrt of the top eigenvalue of A*A.
double spectral_norm(const Matrix& a);

enum class AlgebraClass { KnownYes, KnownNo, Unknown };

const char* to_string(AlgebraClass c) noexcept;

/// Whether N is submultiplicative. Catalog kinds use the classical answers
/// (entrywise max is the only "no"); MaxOf is "yes" when every member is;
/// a positive scaling of a "yes" norm by gamma >= 1 stays "yes". GInd pairs
/// are classified by a dominance check ||.||_1 <= ||.||_2 at dimension n
/// (the pair is submultiplicative exactly when that holds); a counterexample
/// with margin above 1e-6 gives "no", a borderline one gives "unknown".
AlgebraClass mnorm_is_algebra_candidate(const MatrixNormSpec& spec, std::size_t n = 2);

}  // namespace normlab
