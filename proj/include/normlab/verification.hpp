#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "normlab/budget.hpp"
#include "normlab/gind_engine.hpp"
#include "normlab/linalg.hpp"
#include "normlab/norm_spec.hpp"
#include "normlab/random.hpp"

namespace normlab {

enum class CaseStatus { Pass, Fail, Inconclusive };

const char* to_string(CaseStatus s) noexcept;

struct Witness {
  std::string name;
  std::variant<Vector, Matrix> value;
};

struct SuiteCase {
  std::string description;
  CaseStatus status = CaseStatus::Pass;
  /// Empty only for passes and inconclusive results; a fail always carries
  /// the certificate(s) that make it checkable by hand.
  std::vector<Witness> witnesses;
  std::vector<std::pair<std::string, double>> values;

  std::optional<double> value(const std::string& name) const;
};

struct SuiteReport {
  std::string suite_name;
  std::vector<SuiteCase> cases;
  std::uint64_t seed = 0;
  double elapsed_seconds = 0.0;

  /// fail if any case failed, else inconclusive if any was, else pass.
  CaseStatus overall() const noexcept;
  const SuiteCase* find(const std::string& description_prefix) const;
};

inline constexpr double kSubmultSlack = 1e-9;
inline constexpr double kProportionalTol = 1e-6;
inline constexpr double kGIndEqualTol = 1e-9;
inline constexpr double kUpperBoundTol = 1e-6;
inline constexpr double kRoundTripTol = 1e-6;

/// The g-ind norm of `pair` is submultiplicative iff norm1 <= norm2.
///
/// Runs dominance_check; when dominated, tests ||AB|| <= ||A|| ||B|| on
/// `trials` random products; otherwise searches for a violating product,
/// starting from A = B = x0 v* built from the dominance counterexample x0.
/// A violation under dominance is a fail (with A, B attached) when every value
/// involved is exact, inconclusive otherwise. `budget` defaults to
/// OptBudget::defaults(n).
SuiteReport verify_submultiplicativity(const GIndPair& pair, std::size_t n, int trials,
                                      RandomStream& rng,
                                      std::optional<OptBudget> budget = std::nullopt);

/// Two pairs give the same g-ind norm iff they agree up to one common factor.
///
/// Estimates gamma at `reference` (all-ones by default; the zero vector is
/// rejected with SpecError), tests proportionality of both slots at `trials`
/// random points, and compares g-ind values on J_n followed by `trials` random
/// matrices. Verdicts: scaled-and-equal, not-scaled-and-unequal (with the
/// matrix where values differ) or a fail when proportional pairs disagree.
SuiteReport verify_scaling_uniqueness(const GIndPair& pair_a, const GIndPair& pair_b,
                                      std::size_t n, int trials, RandomStream& rng,
                                      std::optional<OptBudget> budget = std::nullopt,
                                      std::optional<Vector> reference = std::nullopt);

/// Extraction applied to N: upper-bound law on the probe matrices, the
/// minimality probe, and, when no gap is found, the round trip
/// gind(extracted pair) = N plus (for algebra norms) norm1 = norm2 at `trials`
/// random points. `budget` drives both the role-1 inner search and the outer
/// g-ind search.
SuiteReport verify_extraction(const MatrixNormSpec& source, std::size_t n, int trials,
                              const OptBudget& budget, RandomStream& rng);

/// The standard worked examples, in six parts: algebra and non-algebra
/// catalog norms, the three induced closed forms, a g-ind norm strictly below
/// another one, minimality probes, the alpha identity, and the four-norm chain.
SuiteReport demo_suite(std::uint64_t seed);

}  // namespace normlab
