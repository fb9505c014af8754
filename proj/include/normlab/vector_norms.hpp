#pragma once

#include <cstddef>
#include <optional>

#include "normlab/budget.hpp"
#include "normlab/linalg.hpp"
#include "normlab/norm_spec.hpp"
#include "normlab/random.hpp"
#include "normlab/sphere_opt.hpp"

namespace normlab {

/// ||x||_spec. Exact for every kind except Extracted role 1, which returns the
/// optimizer's lower bound for max { N(C_{Ax}) : N(A) = 1 }.
double vnorm_eval(const VectorNormSpec& spec, const Vector& x);

/// Dual norm max { |<v, x>| : ||x||_spec = 1 } with <v, x> = sum conj(v_i) x_i.
/// Closed form (Hoelder conjugate) for l_p, weighted l_p and scalings;
/// sphere_opt lower bound for MaxOf and Extracted.
ComputationResult dual_norm(const VectorNormSpec& spec, const Vector& v, const OptBudget& budget);

inline double vnorm_dual_eval(const VectorNormSpec& spec, const Vector& v,
                              const OptBudget& budget) {
  return dual_norm(spec, v, budget).value;
}

/// alpha = max { |sum_j y_j| : ||y||_spec = 1 }, the dual norm of the all-ones vector.
double sum_functional_alpha(const VectorNormSpec& spec, std::size_t n, const OptBudget& budget);

/// Outcome of a sampled test of ||x||_a <= ||x||_b on C^n.
struct DominanceReport {
  bool dominated = true;
  /// Present iff !dominated; satisfies ||x||_a > ||x||_b (1 + 1e-9).
  std::optional<Vector> counterexample;
  int samples_used = 0;
  /// sup of ||x||_a / ||x||_b over everything evaluated.
  double max_ratio = 0.0;
};

/// Sampled dominance test. Probes, in order: the all-ones vector, the basis
/// vectors, n all-ones vectors with random phases, then `samples` complex
/// Gaussian directions; the best point is refined by sphere ascent of ||.||_a
/// over the ||.||_b sphere. A verdict of "dominated" is evidence, not proof.
DominanceReport dominance_check(const VectorNormSpec& a, const VectorNormSpec& b, std::size_t n,
                                int samples, RandomStream& rng);

}  // namespace normlab
