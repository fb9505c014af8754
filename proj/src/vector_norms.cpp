#include "normlab/vector_norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "normlab/error.hpp"
#include "normlab/extraction.hpp"
#include "normlab/matrix_norms.hpp"

namespace normlab {

namespace {

double lp_of_moduli(const Vector& x, double p, const std::vector<double>* weights) {
  auto modulus = [&](std::size_t i) {
    const double a = std::abs(x[i]);
    return weights ? a * (*weights)[i] : a;
  };
  const std::size_t n = x.dim();
  if (std::isinf(p)) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, modulus(i));
    return m;
  }
  if (p == 1.0) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += modulus(i);
    return s;
  }
  if (p == 2.0) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += modulus(i) * modulus(i);
    return std::sqrt(s);
  }
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, modulus(i));
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += std::pow(modulus(i) / m, p);
  return m * std::pow(s, 1.0 / p);
}

double conjugate_exponent(double p) {
  if (p == 1.0) return std::numeric_limits<double>::infinity();
  if (std::isinf(p)) return 1.0;
  return p / (p - 1.0);
}

void check_dim(const VectorNormSpec& spec, const Vector& x) {
  if (auto d = spec.dim(); d && *d != x.dim()) {
    throw DimensionError("norm " + spec.describe() + " expects dimension " + std::to_string(*d) +
                         ", got " + std::to_string(x.dim()));
  }
}

}  // namespace

double vnorm_eval(const VectorNormSpec& spec, const Vector& x) {
  check_dim(spec, x);
  switch (spec.kind()) {
    case VectorNormSpec::Kind::Lp:
      return lp_of_moduli(x, spec.p(), nullptr);
    case VectorNormSpec::Kind::Scaled:
      return spec.gamma() * vnorm_eval(spec.inner(), x);
    case VectorNormSpec::Kind::MaxOf: {
      double m = 0.0;
      for (const auto& member : spec.members()) m = std::max(m, vnorm_eval(member, x));
      return m;
    }
    case VectorNormSpec::Kind::WeightedLp:
      return lp_of_moduli(x, spec.p(), &spec.weights());
    case VectorNormSpec::Kind::Extracted:
      if (spec.role() == ExtractionRole::Norm2)
        return mnorm_eval(spec.source(), column_replicate(x), spec.budget());
      return evaluate_extracted_norm1(spec.source(), x, spec.budget()).value;
  }
  return 0.0;
}

ComputationResult dual_norm(const VectorNormSpec& spec, const Vector& v, const OptBudget& budget) {
  check_dim(spec, v);
  const std::size_t n = v.dim();
  switch (spec.kind()) {
    case VectorNormSpec::Kind::Lp:
    case VectorNormSpec::Kind::WeightedLp: {
      // Hoelder: sup Re <v, x> over l_p(w x) <= 1 equals l_q(v / w), attained
      // at the linear maximizer.
      const double q = conjugate_exponent(spec.p());
      Vector scaled = v;
      if (spec.kind() == VectorNormSpec::Kind::WeightedLp)
        for (std::size_t i = 0; i < n; ++i) scaled[i] /= spec.weights()[i];
      ComputationResult r;
      r.value = lp_of_moduli(scaled, q, nullptr);
      Vector w = v.is_zero() ? Vector::basis(n, 0) : *linear_maximizer(spec, v);
      w /= vnorm_eval(spec, w);
      r.witness = std::move(w);
      r.exactness = Exactness::ExactClosedForm;
      r.evaluations = 1;
      return r;
    }
    case VectorNormSpec::Kind::Scaled: {
      ComputationResult r = dual_norm(spec.inner(), v, budget);
      r.value /= spec.gamma();
      std::get<Vector>(r.witness) /= spec.gamma();
      return r;
    }
    default: {
      // |<v, x>| as the norm of a rank-one map whose only nonzero row is v*.
      Matrix functional(n);
      for (std::size_t j = 0; j < n; ++j) functional(0, j) = std::conj(v[j]);
      return maximize_on_sphere(VectorObjective::linear_norm(std::move(functional), l1()), spec,
                                n, budget);
    }
  }
}

double sum_functional_alpha(const VectorNormSpec& spec, std::size_t n, const OptBudget& budget) {
  if (n == 0) throw DimensionError("sum_functional_alpha: n must be positive");
  return dual_norm(spec, Vector::ones(n), budget).value;
}

DominanceReport dominance_check(const VectorNormSpec& a, const VectorNormSpec& b, std::size_t n,
                                int samples, RandomStream& rng) {
  if (n == 0) throw DimensionError("dominance_check: n must be positive");
  for (const auto* s : {&a, &b})
    if (auto d = s->dim(); d && *d != n) throw DimensionError("dominance_check: dimension mismatch");

  DominanceReport rep;
  Vector arg;
  auto consider = [&](const Vector& x) {
    const double nb = vnorm_eval(b, x);
    if (!(nb > 0.0)) return;
    const double ratio = vnorm_eval(a, x) / nb;
    ++rep.samples_used;
    // Earlier probes win near-ties so simple witnesses are reported.
    if (arg.dim() == 0 || ratio > rep.max_ratio * (1.0 + 1e-12)) {
      rep.max_ratio = ratio;
      arg = x / nb;
    }
  };

  consider(Vector::ones(n));
  for (std::size_t j = 0; j < n; ++j) consider(Vector::basis(n, j));
  for (std::size_t j = 0; j < n; ++j) {
    Vector ph(n);
    for (auto& e : ph) e = rng.phase();
    consider(ph);
  }
  for (int s = 0; s < samples; ++s) consider(Vector::random_gaussian(n, rng));

  // Ascent refinement of ||x||_a over the ||.||_b sphere.
  OptBudget refine = OptBudget::defaults(n, rng.next_u64());
  refine.multistarts = 2;
  refine.samples = 8;
  VectorObjective obj;
  obj.fn = [&a](const Vector& x) { return vnorm_eval(a, x); };
  const ComputationResult r = maximize_on_sphere(obj, b, n, refine);
  rep.samples_used += 1;
  const double nb = vnorm_eval(b, r.vector_witness());
  if (nb > 0.0) {
    const double ratio = r.value / nb;
    if (ratio > rep.max_ratio * (1.0 + 1e-12)) {
      rep.max_ratio = ratio;
      arg = r.vector_witness() / nb;
    }
  }

  rep.dominated = !(rep.max_ratio > 1.0 + 1e-9);
  if (!rep.dominated) rep.counterexample = arg;
  return rep;
}

}  // namespace normlab
