#include "normlab/matrix_norms.hpp"

#include <algorithm>
#include <cmath>

#include "normlab/error.hpp"
#include "normlab/gind_engine.hpp"
#include "normlab/random.hpp"
#include "normlab/vector_norms.hpp"

namespace normlab {

double spectral_norm(const Matrix& a) {
  // A fixed stream keeps the value a pure function of A.
  RandomStream rng(0x5350454354524cULL);
  const EigResult eig =
      hermitian_top_eig(a.adjoint() * a, kDefaultEigTol, kDefaultEigMaxIter, rng);
  return std::sqrt(eig.eigenvalue);
}

double mnorm_eval(const MatrixNormSpec& spec, const Matrix& a, const OptBudget& budget) {
  const std::size_t n = a.dim();
  switch (spec.kind()) {
    case MatrixNormSpec::Kind::EntrywiseSum: {
      double s = 0.0;
      for (const auto& e : a.entries()) s += std::abs(e);
      return s;
    }
    case MatrixNormSpec::Kind::EntrywiseMax:
      return a.max_abs();
    case MatrixNormSpec::Kind::MaxColSum: {
      double best = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += std::abs(a(i, j));
        best = std::max(best, s);
      }
      return best;
    }
    case MatrixNormSpec::Kind::MaxRowSum: {
      double best = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s += std::abs(a(i, j));
        best = std::max(best, s);
      }
      return best;
    }
    case MatrixNormSpec::Kind::Spectral:
      return spectral_norm(a);
    case MatrixNormSpec::Kind::MaxOf: {
      double best = 0.0;
      for (const auto& m : spec.members()) best = std::max(best, mnorm_eval(m, a, budget));
      return best;
    }
    case MatrixNormSpec::Kind::Scaled:
      return spec.gamma() * mnorm_eval(spec.inner(), a, budget);
    case MatrixNormSpec::Kind::GInd:
      return gind_eval(GIndPair{spec.norm1(), spec.norm2()}, a, budget).value;
  }
  return 0.0;
}

double mnorm_eval(const MatrixNormSpec& spec, const Matrix& a) {
  return mnorm_eval(spec, a, OptBudget::defaults(a.dim()));
}

const char* to_string(AlgebraClass c) noexcept {
  switch (c) {
    case AlgebraClass::KnownYes:
      return "known_yes";
    case AlgebraClass::KnownNo:
      return "known_no";
    case AlgebraClass::Unknown:
      return "unknown";
  }
  return "?";
}

AlgebraClass mnorm_is_algebra_candidate(const MatrixNormSpec& spec, std::size_t n) {
  switch (spec.kind()) {
    case MatrixNormSpec::Kind::EntrywiseSum:
    case MatrixNormSpec::Kind::MaxColSum:
    case MatrixNormSpec::Kind::MaxRowSum:
    case MatrixNormSpec::Kind::Spectral:
      return AlgebraClass::KnownYes;
    case MatrixNormSpec::Kind::EntrywiseMax:
      return AlgebraClass::KnownNo;
    case MatrixNormSpec::Kind::MaxOf: {
      for (const auto& m : spec.members())
        if (mnorm_is_algebra_candidate(m, n) != AlgebraClass::KnownYes) return AlgebraClass::Unknown;
      return AlgebraClass::KnownYes;
    }
    case MatrixNormSpec::Kind::Scaled:
      if (spec.gamma() >= 1.0 &&
          mnorm_is_algebra_candidate(spec.inner(), n) == AlgebraClass::KnownYes)
        return AlgebraClass::KnownYes;
      return AlgebraClass::Unknown;
    case MatrixNormSpec::Kind::GInd: {
      const std::size_t dim = spec.norm1().dim().value_or(spec.norm2().dim().value_or(n));
      RandomStream rng(0x616c67ULL);
      const DominanceReport rep = dominance_check(spec.norm1(), spec.norm2(), dim, 256, rng);
      if (rep.dominated) return AlgebraClass::KnownYes;
      if (rep.max_ratio > 1.0 + 1e-6) return AlgebraClass::KnownNo;
      return AlgebraClass::Unknown;
    }
  }
  return AlgebraClass::Unknown;
}

}  // namespace normlab
