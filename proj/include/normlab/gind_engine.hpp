#pragma once

#include "normlab/budget.hpp"
#include "normlab/linalg.hpp"
#include "normlab/norm_spec.hpp"
#include "normlab/sphere_opt.hpp"

namespace normlab {

/// (domain norm, codomain norm) of a generalized induced norm.
struct GIndPair {
  VectorNormSpec norm1;
  VectorNormSpec norm2;

  MatrixNormSpec as_matrix_norm() const { return MatrixNormSpec::gind(norm1, norm2); }
  std::string describe() const { return "(" + norm1.describe() + ", " + norm2.describe() + ")"; }
};

/// ||A||_{1,2} = max { ||Ax||_norm2 : ||x||_norm1 = 1 }.
///
/// Scalings on the codomain are factored out before the search, so pairs that
/// differ by a common factor run the same optimization. Exactness follows the
/// sphere_opt dispatch.
ComputationResult gind_eval(const GIndPair& pair, const Matrix& a, const OptBudget& budget,
                            Strategy strategy = Strategy::Auto);

/// The four operator norms obtainable from a pair, named by (domain, codomain).
struct ChainReport {
  double v21 = 0.0;  // norm2 -> norm1
  double v11 = 0.0;  // norm1 -> norm1
  double v22 = 0.0;  // norm2 -> norm2
  double v12 = 0.0;  // norm1 -> norm2
  bool chain_holds = false;
  /// Smallest (rhs - lhs) over the four inequalities; negative when violated.
  double slack = 0.0;
};

inline constexpr double kChainSlack = 1e-9;

/// v21 <= v11 <= v12 and v21 <= v22 <= v12, each up to 1e-9 relative slack.
/// The chain is guaranteed when ||.||_1 <= ||.||_2; it is computed regardless.
ChainReport chain_compare(const GIndPair& pair, const Matrix& a, const OptBudget& budget);

}  // namespace normlab
