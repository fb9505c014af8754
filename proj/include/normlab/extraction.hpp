#pragma once

#include <cstddef>

#include "normlab/budget.hpp"
#include "normlab/gind_engine.hpp"
#include "normlab/linalg.hpp"
#include "normlab/norm_spec.hpp"
#include "normlab/random.hpp"
#include "normlab/sphere_opt.hpp"

namespace normlab {

/// C_{x,j}: x in column j (0-based), zeros elsewhere, so C_{x,j} y = y_j x.
Matrix column_embed(const Vector& x, std::size_t j);

/// C_x: every column equal to x (the sum of column_embed over all j).
Matrix column_replicate(const Vector& x);

/// ||x||_2 := N(C_x). Exact whenever N is.
VectorNormSpec extract_norm2(const MatrixNormSpec& source,
                             const OptBudget& budget = OptBudget::defaults(2));

/// ||x||_1 := max { N(C_{Ax}) : N(A) = 1 }, evaluated by matrix-sphere ascent
/// with `budget` (a lower bound).
VectorNormSpec extract_norm1(const MatrixNormSpec& source, const OptBudget& budget);

/// The role-1 optimization itself; the witness is the maximizing A.
///
/// x is reduced to a canonical representative (unit l_2 length, largest entry
/// real positive) before the search, and results are memoized per
/// (source, budget, representative rounded to 1e-12) because probes revisit the
/// same points. The memo is thread-safe.
ComputationResult evaluate_extracted_norm1(const MatrixNormSpec& source, const Vector& x,
                                           const OptBudget& budget);

void clear_extraction_cache();
std::size_t extraction_cache_size();

struct ExtractionResult {
  MatrixNormSpec source;
  VectorNormSpec norm1;
  VectorNormSpec norm2;
  OptBudget budget;

  GIndPair pair() const { return {norm1, norm2}; }
};

ExtractionResult extract(const MatrixNormSpec& source, const OptBudget& budget);

struct AlphaIdentityReport {
  double lhs = 0.0;  // ||C_x||_{1,2}
  double rhs = 0.0;  // alpha(norm1) * ||x||_norm2
  bool holds = false;
};

inline constexpr double kAlphaIdentityTol = 1e-6;

AlphaIdentityReport alpha_identity_check(const GIndPair& pair, const Vector& x,
                                         const OptBudget& budget);

enum class ProbeVerdict { GapFound, NoGapFound };

const char* to_string(ProbeVerdict v) noexcept;

struct ProbeReport {
  /// min over tested A of ||A||_{1,2} / N(A) for the extracted pair.
  double max_gap_ratio = 1.0;
  Matrix witness;
  /// max over tested A of the same ratio; the upper-bound law keeps it <= 1.
  double upper_ratio = 0.0;
  Matrix upper_witness;
  int trials = 0;
  ProbeVerdict verdict = ProbeVerdict::NoGapFound;
};

inline constexpr double kGapThreshold = 1e-4;

/// Deterministic probe matrices: identity, every E_ij, the all-ones matrix,
/// and (n >= 2) [[1,1],[1,-1]] and [[1,0],[1,0]] in the top-left corner.
std::vector<Matrix> probe_matrices(std::size_t n);

/// Searches for A with reconstruction ||A||_{1,2} < N(A), which certifies
/// that N is not minimal. Evaluates the probe matrices, then `trials` random
/// ones; the earliest matrix wins ties. `budget` drives both the role-1
/// evaluations and the outer g-ind maximization.
ProbeReport minimality_probe(const MatrixNormSpec& source, std::size_t n, int trials,
                             const OptBudget& budget, RandomStream& rng);

}  // namespace normlab
