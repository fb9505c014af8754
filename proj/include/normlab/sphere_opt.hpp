#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <variant>

#include "normlab/budget.hpp"
#include "normlab/linalg.hpp"
#include "normlab/norm_spec.hpp"

namespace normlab {

enum class Exactness { ExactClosedForm, ExactVertex, LowerBound };

const char* to_string(Exactness e) noexcept;

/// Value of an optimized quantity together with the point attaining it.
///
/// For sphere maximization the witness lies on the unit sphere of the domain
/// norm and objective(witness) == value. `LowerBound` results never exceed
/// the true maximum (up to rounding); exact labels are only issued by the
/// closed-form and vertex dispatch paths.
struct ComputationResult {
  double value = 0.0;
  std::variant<Vector, Matrix> witness;
  Exactness exactness = Exactness::LowerBound;
  long evaluations = 0;

  const Vector& vector_witness() const { return std::get<Vector>(witness); }
  const Matrix& matrix_witness() const { return std::get<Matrix>(witness); }
};

/// Objective of the form x -> ||M x||_codomain.
struct LinearNormStructure {
  Matrix map;
  VectorNormSpec codomain;
};

/// Continuous, absolutely homogeneous objective on C^n.
struct VectorObjective {
  std::function<double(const Vector&)> fn;
  /// Set when the objective is a norm of a linear map; unlocks closed forms.
  std::optional<LinearNormStructure> linear;
  /// Caller's assertion that fn is convex; required for vertex dispatch.
  bool convex = true;

  static VectorObjective linear_norm(Matrix map, VectorNormSpec codomain);
};

/// Continuous, absolutely homogeneous objective on M_n.
struct MatrixObjective {
  std::function<double(const Matrix&)> fn;
  bool convex = true;
};

enum class Strategy {
  Auto,        // closed-form / vertex dispatch where it applies, ascent otherwise
  AscentOnly,  // always run the multi-start ascent (used to cross-check dispatch)
};

/// max { objective(x) : ||x||_domain = 1, x in C^n }.
///
/// Dispatch (Strategy::Auto), after peeling Scaled wrappers off the domain:
///   - l_1 or weighted l_1 domain with a convex objective: the maximum sits at a
///     phase multiple of a basis vector, and by homogeneity the phase drops out,
///     so the basis columns are enumerated (ExactVertex);
///   - l_2 domain with objective c * l_2(M x): c * sigma_max(M) (ExactClosedForm);
///   - anything else: multi-start ascent (LowerBound).
///
/// The ascent seeds `samples` complex-Gaussian points plus the basis vectors,
/// the all-ones vector and random phase vectors (and, for x -> ||Mx||, the
/// conj-phase rows, conjugated rows and top right singular vector of M), keeps
/// the best `multistarts` of them, and from each runs a random-direction hill
/// climb (step x1.3 on success, x0.7 on failure, stop below tol) followed by
/// linearized ascent steps through the domain's linear maximization oracle
/// (when the domain has one in closed form). Unless the objective is convex
/// and an oracle exists, a compass search over the modulus and phase of each
/// coordinate follows. Every accepted move renormalizes to the domain sphere. Starts use independent child streams and are merged by
/// value with ties broken by start index.
///
/// Throws HomogeneityError when 10 random probes find objective(a x) !=
/// |a| objective(x) beyond 1e-6 relative.
ComputationResult maximize_on_sphere(const VectorObjective& objective,
                                     const VectorNormSpec& domain, std::size_t n,
                                     const OptBudget& budget, Strategy strategy = Strategy::Auto);

/// max { objective(A) : N(A) = 1, A in M_n } with the same machinery over the
/// n^2 entries. Seeds add the identity, every single-entry matrix E_ij and the
/// all-ones matrix. EntrywiseSum domains with a convex objective are solved by
/// enumerating E_ij (ExactVertex); everything else is a LowerBound.
ComputationResult maximize_on_matrix_sphere(const MatrixObjective& objective,
                                            const MatrixNormSpec& domain, std::size_t n,
                                            const OptBudget& budget,
                                            Strategy strategy = Strategy::Auto);

/// Maximizer of Re <g, y> over the unit ball of `domain`, when it has a closed
/// form (l_p, weighted l_p, scalings). Exposed for tests.
std::optional<Vector> linear_maximizer(const VectorNormSpec& domain, const Vector& g);

/// Matrix counterpart of linear_maximizer (entrywise, column/row sum, spectral).
std::optional<Matrix> linear_maximizer(const MatrixNormSpec& domain, const Matrix& g);

}  // namespace normlab
