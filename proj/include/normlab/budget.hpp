#pragma once

#include <cstddef>
#include <cstdint>

namespace normlab {

/// Effort knobs for the sphere optimizer.
struct OptBudget {
  int multistarts = 16;
  int max_iters = 400;
  int samples = 128;
  double step_init = 0.5;
  double tol = 1e-7;
  std::uint64_t seed = 0;

  /// multistarts = 8n, max_iters = 400, samples = 64n, step_init = 0.5, tol = 1e-7.
  static OptBudget defaults(std::size_t n, std::uint64_t seed = 0);

  /// Lighter budget for nested searches (extraction, minimality probes), where
  /// every outer evaluation runs an inner optimization: multistarts = 2,
  /// max_iters = 40, samples = 4n, step_init = 0.5, tol = 1e-7.
  static OptBudget nested(std::size_t n, std::uint64_t seed = 0);

  /// Throws SpecError unless all fields are positive and tol lies in (0, 1e-2).
  void validate() const;

  friend bool operator==(const OptBudget&, const OptBudget&) = default;
};

}  // namespace normlab
