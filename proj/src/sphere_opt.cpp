#include "normlab/sphere_opt.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "normlab/error.hpp"
#include "normlab/matrix_norms.hpp"
#include "normlab/vector_norms.hpp"

namespace normlab {

const char* to_string(Exactness e) noexcept {
  switch (e) {
    case Exactness::ExactClosedForm:
      return "exact_closed_form";
    case Exactness::ExactVertex:
      return "exact_vertex";
    case Exactness::LowerBound:
      return "lower_bound";
  }
  return "?";
}

VectorObjective VectorObjective::linear_norm(Matrix map, VectorNormSpec codomain) {
  VectorObjective obj;
  obj.fn = [map, codomain](const Vector& x) { return vnorm_eval(codomain, mat_apply(map, x)); };
  obj.linear = LinearNormStructure{std::move(map), std::move(codomain)};
  obj.convex = true;
  return obj;
}

namespace {

using Flat = std::vector<Complex>;

// Stream indices reserved for the optimizer's internal draws.
constexpr std::uint64_t kProbeStream = 0x686f6d6fULL;
constexpr std::uint64_t kSeedStream = 0x73656564ULL;
constexpr std::uint64_t kEigStream = 0x65696721ULL;

// Relative margin a candidate has to beat to count as progress; keeps
// rounding noise from being chased forever.
constexpr double kProgress = 1e-15;

Complex unit_phase(Complex z) {
  const double r = std::abs(z);
  return r > 0.0 ? z / r : Complex{1.0, 0.0};
}

double max_modulus(const Flat& x) {
  double m = 0.0;
  for (const auto& e : x) m = std::max(m, std::abs(e));
  return m;
}

double euclid(const Flat& x) {
  double acc = 0.0;
  for (const auto& e : x) acc += std::norm(e);
  return std::sqrt(acc);
}

struct Point {
  Flat x;
  double value = -1.0;
};

// A sphere-maximization problem over C^dim in flattened coordinates.
struct Problem {
  std::size_t dim = 0;
  std::function<double(const Flat&)> objective;
  std::function<double(const Flat&)> norm;
  std::function<std::optional<Flat>(const Flat&)> lmo;  // empty if unavailable
  bool convex = false;
  long evaluations = 0;

  double eval(const Flat& x) {
    ++evaluations;
    return objective(x);
  }

  std::optional<Point> normalized(Flat x) {
    const double d = norm(x);
    if (!(d > 0.0) || !std::isfinite(d)) return std::nullopt;
    for (auto& e : x) e /= d;
    const double v = eval(x);
    if (!std::isfinite(v)) return std::nullopt;
    return Point{std::move(x), v};
  }

  bool better(const Point& cand, const Point& cur) const {
    return cand.value > cur.value + kProgress * std::abs(cur.value);
  }

  // Central differences of the (unnormalized) objective; by homogeneity this
  // is also the gradient direction on the sphere.
  Flat gradient(const Flat& x) {
    const double h = 1e-6 * std::max(max_modulus(x), 1e-300);
    Flat g(x.size());
    Flat probe = x;
    for (std::size_t k = 0; k < x.size(); ++k) {
      probe[k] = x[k] + h;
      const double fp = eval(probe);
      probe[k] = x[k] - h;
      const double fm = eval(probe);
      probe[k] = x[k] + Complex{0.0, h};
      const double gp = eval(probe);
      probe[k] = x[k] - Complex{0.0, h};
      const double gm = eval(probe);
      probe[k] = x[k];
      g[k] = Complex{(fp - fm) / (2 * h), (gp - gm) / (2 * h)};
    }
    return g;
  }
};

void hill_climb(Problem& prob, Point& cur, const OptBudget& budget, RandomStream& rng) {
  double step = budget.step_init;
  for (int it = 0; it < budget.max_iters && step >= budget.tol; ++it) {
    Flat d(prob.dim);
    for (auto& e : d) e = rng.complex_normal();
    const double dl = euclid(d);
    if (!(dl > 0.0)) continue;
    const double scale = step * euclid(cur.x) / dl;
    Flat cand = cur.x;
    for (std::size_t k = 0; k < prob.dim; ++k) cand[k] += scale * d[k];
    auto next = prob.normalized(std::move(cand));
    if (next && prob.better(*next, cur)) {
      cur = std::move(*next);
      step = std::min(step * 1.3, 2.0);
    } else {
      step *= 0.7;
    }
  }
}

// Linearized ascent: for convex objectives f(y) >= Re <grad f(x), y>, so
// jumping to the ball's maximizer of the linearization never loses value
// (with an exact gradient). Moves are still only taken when they improve,
// which covers the finite-difference gradient.
// Returns true if the point moved.
bool linearized_ascent(Problem& prob, Point& cur) {
  if (!prob.lmo) return false;
  bool moved = false;
  for (int round = 0; round < 25; ++round) {
    const Flat g = prob.gradient(cur.x);
    if (max_modulus(g) == 0.0) break;
    auto y = prob.lmo(g);
    if (!y) break;
    auto next = prob.normalized(std::move(*y));
    if (!next || !prob.better(*next, cur)) break;
    cur = std::move(*next);
    moved = true;
  }
  return moved;
}

// Compass search over polar coordinates: rotate each coordinate's phase or
// push its modulus, halving the step after a sweep without progress.
void compass(Problem& prob, Point& cur, const OptBudget& budget) {
  double s = std::max(1e-2, budget.tol);
  int sweeps = 0;
  while (s >= budget.tol && sweeps < budget.max_iters) {
    ++sweeps;
    bool improved = false;
    const Complex turn_p{std::cos(s), std::sin(s)};
    const Complex turn_m{std::cos(s), -std::sin(s)};
    for (std::size_t k = 0; k < prob.dim; ++k) {
      const double scale = s * max_modulus(cur.x);
      const Complex xk = cur.x[k];
      Complex moves[4];
      int count = 0;
      if (std::abs(xk) > 0.0) {
        moves[count++] = xk * turn_p;
        moves[count++] = xk * turn_m;
      }
      const Complex u = unit_phase(xk);
      moves[count++] = xk + scale * u;
      moves[count++] = xk - scale * u;
      for (int m = 0; m < count; ++m) {
        Flat cand = cur.x;
        cand[k] = moves[m];
        auto next = prob.normalized(std::move(cand));
        if (next && prob.better(*next, cur)) {
          cur = std::move(*next);
          improved = true;
          break;
        }
      }
    }
    if (!improved) s *= 0.5;
  }
}

struct AscentOutcome {
  Point best;
  long evaluations = 0;
};

AscentOutcome run_ascent(Problem& prob, const std::vector<Flat>& fixed_seeds,
                         const OptBudget& budget) {
  budget.validate();
  RandomStream seed_rng = RandomStream(budget.seed).child(kSeedStream);

  std::vector<Point> seeds;
  seeds.reserve(fixed_seeds.size() + static_cast<std::size_t>(budget.samples));
  for (const auto& s : fixed_seeds) {
    if (auto p = prob.normalized(s)) seeds.push_back(std::move(*p));
  }
  for (int i = 0; i < budget.samples; ++i) {
    Flat x(prob.dim);
    for (auto& e : x) e = seed_rng.complex_normal();
    if (auto p = prob.normalized(std::move(x))) seeds.push_back(std::move(*p));
  }
  if (seeds.empty()) throw std::runtime_error("sphere ascent: no admissible seed point");

  std::vector<std::size_t> order(seeds.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return seeds[a].value > seeds[b].value; });

  const std::size_t starts =
      std::min<std::size_t>(order.size(), static_cast<std::size_t>(budget.multistarts));
  Point best = seeds[order.front()];
  const RandomStream root(budget.seed);
  for (std::size_t s = 0; s < starts; ++s) {
    Point cur = seeds[order[s]];
    RandomStream rng = root.child(s + 1);
    hill_climb(prob, cur, budget, rng);
    linearized_ascent(prob, cur);
    // A convex objective with an LMO has already been pushed to a vertex-type
    // stationary point; the compass polish is only needed without one.
    if (!(prob.lmo && prob.convex)) {
      compass(prob, cur, budget);
      linearized_ascent(prob, cur);
    }
    if (cur.value > best.value) best = std::move(cur);
  }
  return {std::move(best), prob.evaluations};
}

template <class Fn, class Sample>
void check_homogeneity(const Fn& fn, const Sample& sample, std::uint64_t seed, long& evals) {
  RandomStream rng = RandomStream(seed).child(kProbeStream);
  for (int t = 0; t < 10; ++t) {
    auto x = sample(rng);
    const Complex alpha = rng.complex_normal();
    const double fx = fn(x);
    x *= alpha;
    const double fa = fn(x);
    evals += 2;
    const double expect = std::abs(alpha) * fx;
    if (std::abs(fa - expect) > 1e-6 * std::max(std::abs(expect), std::abs(fa)) + 1e-13) {
      throw HomogeneityError("objective is not absolutely homogeneous: f(a x) = " +
                             std::to_string(fa) + " but |a| f(x) = " + std::to_string(expect));
    }
  }
}

Vector to_vector(const Flat& f) { return Vector(f); }

Flat to_flat(const Vector& v) { return Flat(v.begin(), v.end()); }

Matrix to_matrix(const Flat& f, std::size_t n) {
  Matrix m(n);
  std::copy(f.begin(), f.end(), m.entries().begin());
  return m;
}

Flat to_flat(const Matrix& m) { return Flat(m.entries().begin(), m.entries().end()); }

Flat lmo_lp(const Flat& g, double p) {
  Flat y(g.size());
  if (p == 1.0) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < g.size(); ++i)
      if (std::abs(g[i]) > std::abs(g[best])) best = i;
    y[best] = unit_phase(g[best]);
  } else if (std::isinf(p)) {
    for (std::size_t i = 0; i < g.size(); ++i) y[i] = unit_phase(g[i]);
  } else {
    const double q = p / (p - 1.0);
    double sum = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const double a = std::abs(g[i]);
      y[i] = unit_phase(g[i]) * std::pow(a, q - 1.0);
      sum += std::pow(a, q);
    }
    // ||y||_p = (sum |g_i|^q)^(1/p)
    if (sum > 0.0) {
      const double norm = std::pow(sum, 1.0 / p);
      for (auto& e : y) e /= norm;
    }
  }
  return y;
}

}  // namespace

std::optional<Vector> linear_maximizer(const VectorNormSpec& domain, const Vector& g) {
  switch (domain.kind()) {
    case VectorNormSpec::Kind::Lp:
      return to_vector(lmo_lp(to_flat(g), domain.p()));
    case VectorNormSpec::Kind::Scaled: {
      auto y = linear_maximizer(domain.inner(), g);
      if (y) *y /= Complex(domain.gamma());
      return y;
    }
    case VectorNormSpec::Kind::WeightedLp: {
      const auto& w = domain.weights();
      if (w.size() != g.dim()) throw DimensionError("weighted norm dimension mismatch");
      Flat scaled_g = to_flat(g);
      for (std::size_t i = 0; i < w.size(); ++i) scaled_g[i] /= w[i];
      Flat z = lmo_lp(scaled_g, domain.p());
      for (std::size_t i = 0; i < w.size(); ++i) z[i] /= w[i];
      return to_vector(z);
    }
    default:
      return std::nullopt;
  }
}

std::optional<Matrix> linear_maximizer(const MatrixNormSpec& domain, const Matrix& g) {
  const std::size_t n = g.dim();
  Matrix y(n);
  switch (domain.kind()) {
    case MatrixNormSpec::Kind::EntrywiseSum: {
      std::size_t bi = 0, bj = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (std::abs(g(i, j)) > std::abs(g(bi, bj))) bi = i, bj = j;
      y(bi, bj) = unit_phase(g(bi, bj));
      return y;
    }
    case MatrixNormSpec::Kind::EntrywiseMax:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) y(i, j) = unit_phase(g(i, j));
      return y;
    case MatrixNormSpec::Kind::MaxColSum:
      for (std::size_t j = 0; j < n; ++j) {
        std::size_t bi = 0;
        for (std::size_t i = 1; i < n; ++i)
          if (std::abs(g(i, j)) > std::abs(g(bi, j))) bi = i;
        y(bi, j) = unit_phase(g(bi, j));
      }
      return y;
    case MatrixNormSpec::Kind::MaxRowSum:
      for (std::size_t i = 0; i < n; ++i) {
        std::size_t bj = 0;
        for (std::size_t j = 1; j < n; ++j)
          if (std::abs(g(i, j)) > std::abs(g(i, bj))) bj = j;
        y(i, bj) = unit_phase(g(i, bj));
      }
      return y;
    case MatrixNormSpec::Kind::Spectral: {
      // Polar factor U V* of g, built one singular pair at a time.
      Matrix rest = g;
      const double top = g.max_abs();
      if (top == 0.0) return Matrix::identity(n);
      RandomStream rng = RandomStream(0).child(kEigStream);
      for (std::size_t k = 0; k < n; ++k) {
        if (rest.max_abs() <= 1e-12 * top) break;
        const Matrix h = rest.adjoint() * rest;
        const EigResult eig = hermitian_top_eig(h, kDefaultEigTol, kDefaultEigMaxIter, rng);
        const double sigma = std::sqrt(eig.eigenvalue);
        if (!(sigma > 1e-12 * top)) break;
        const Vector& v = eig.eigenvector;
        const Vector u = mat_apply(rest, v) / sigma;
        y += Matrix::outer(u, v);
        rest -= sigma * Matrix::outer(u, v);
      }
      return y;
    }
    case MatrixNormSpec::Kind::Scaled:
      return linear_maximizer(domain.inner(), g);
    default:
      return std::nullopt;
  }
}

ComputationResult maximize_on_sphere(const VectorObjective& objective,
                                     const VectorNormSpec& domain, std::size_t n,
                                     const OptBudget& budget, Strategy strategy) {
  if (n == 0) throw DimensionError("maximize_on_sphere: n must be positive");
  if (auto d = domain.dim(); d && *d != n) throw DimensionError("domain norm dimension mismatch");
  budget.validate();

  long evals = 0;
  check_homogeneity(
      objective.fn, [n](RandomStream& rng) { return Vector::random_gaussian(n, rng); },
      budget.seed, evals);

  // Peel scalings off the domain: the gamma-sphere is the inner sphere / gamma.
  double factor = 1.0;
  const VectorNormSpec* inner = &domain;
  while (inner->kind() == VectorNormSpec::Kind::Scaled) {
    factor *= inner->gamma();
    inner = &inner->inner();
  }
  auto finish = [&](Vector w, Exactness ex, long count) {
    w /= factor;
    ComputationResult r;
    r.value = objective.fn(w);
    r.witness = std::move(w);
    r.exactness = ex;
    r.evaluations = count + 1;
    return r;
  };

  if (strategy == Strategy::Auto) {
    const bool l1_domain = inner->kind() == VectorNormSpec::Kind::Lp && inner->p() == 1.0;
    const bool wl1_domain =
        inner->kind() == VectorNormSpec::Kind::WeightedLp && inner->p() == 1.0;
    if (objective.convex && (l1_domain || wl1_domain)) {
      double best = -1.0;
      Vector arg;
      for (std::size_t j = 0; j < n; ++j) {
        Vector e = Vector::basis(n, j);
        if (wl1_domain) e /= inner->weights()[j];
        const double v = objective.fn(e);
        ++evals;
        if (v > best) best = v, arg = std::move(e);
      }
      return finish(std::move(arg), Exactness::ExactVertex, evals);
    }
    if (objective.linear && inner->kind() == VectorNormSpec::Kind::Lp && inner->p() == 2.0) {
      const VectorNormSpec* cod = &objective.linear->codomain;
      while (cod->kind() == VectorNormSpec::Kind::Scaled) cod = &cod->inner();
      if (cod->kind() == VectorNormSpec::Kind::Lp && cod->p() == 2.0) {
        const Matrix& m = objective.linear->map;
        if (m.dim() != n) throw DimensionError("objective map dimension mismatch");
        RandomStream rng = RandomStream(budget.seed).child(kEigStream);
        const EigResult eig =
            hermitian_top_eig(m.adjoint() * m, kDefaultEigTol, kDefaultEigMaxIter, rng);
        Vector w = eig.eigenvector;
        w /= euclidean(w);
        return finish(std::move(w), Exactness::ExactClosedForm, evals);
      }
    }
  }

  Problem prob;
  prob.dim = n;
  prob.convex = objective.convex;
  prob.objective = [&](const Flat& x) { return objective.fn(to_vector(x)); };
  prob.norm = [inner](const Flat& x) { return vnorm_eval(*inner, to_vector(x)); };
  if (linear_maximizer(*inner, Vector::ones(n))) {
    prob.lmo = [inner](const Flat& g) -> std::optional<Flat> {
      auto y = linear_maximizer(*inner, to_vector(g));
      if (!y) return std::nullopt;
      return to_flat(*y);
    };
  }

  std::vector<Flat> fixed;
  for (std::size_t j = 0; j < n; ++j) fixed.push_back(to_flat(Vector::basis(n, j)));
  fixed.push_back(to_flat(Vector::ones(n)));
  RandomStream phase_rng = RandomStream(budget.seed).child(kSeedStream + 1);
  for (std::size_t j = 0; j < n; ++j) {
    Flat ph(n);
    for (auto& e : ph) e = phase_rng.phase();
    fixed.push_back(std::move(ph));
  }
  if (objective.linear) {
    // Maximizers of ||Ax|| for the standard domains: conj-phase rows (l_inf),
    // conjugated rows and the top right singular vector (l_2).
    const Matrix& m = objective.linear->map;
    for (std::size_t i = 0; i < m.dim(); ++i) {
      const Vector r = m.row(i).conj();
      Flat ph(n);
      for (std::size_t j = 0; j < n; ++j) ph[j] = unit_phase(r[j]);
      fixed.push_back(std::move(ph));
      fixed.push_back(to_flat(r));
    }
    try {
      RandomStream rng = RandomStream(budget.seed).child(kEigStream);
      fixed.push_back(to_flat(
          hermitian_top_eig(m.adjoint() * m, kDefaultEigTol, kDefaultEigMaxIter, rng).eigenvector));
    } catch (const ConvergenceError&) {
      // Only a seed; the random starts still cover this case.
    }
  }

  AscentOutcome out = run_ascent(prob, fixed, budget);
  return finish(to_vector(out.best.x), Exactness::LowerBound, evals + out.evaluations);
}

ComputationResult maximize_on_matrix_sphere(const MatrixObjective& objective,
                                            const MatrixNormSpec& domain, std::size_t n,
                                            const OptBudget& budget, Strategy strategy) {
  if (n == 0) throw DimensionError("maximize_on_matrix_sphere: n must be positive");
  budget.validate();

  long evals = 0;
  check_homogeneity(
      objective.fn, [n](RandomStream& rng) { return Matrix::random_gaussian(n, rng); },
      budget.seed, evals);

  double factor = 1.0;
  const MatrixNormSpec* inner = &domain;
  while (inner->kind() == MatrixNormSpec::Kind::Scaled) {
    factor *= inner->gamma();
    inner = &inner->inner();
  }
  auto finish = [&](Matrix w, Exactness ex, long count) {
    w /= factor;
    ComputationResult r;
    r.value = objective.fn(w);
    r.witness = std::move(w);
    r.exactness = ex;
    r.evaluations = count + 1;
    return r;
  };

  if (strategy == Strategy::Auto && objective.convex &&
      inner->kind() == MatrixNormSpec::Kind::EntrywiseSum) {
    double best = -1.0;
    Matrix arg;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Matrix e = Matrix::single_entry(n, i, j);
        const double v = objective.fn(e);
        ++evals;
        if (v > best) best = v, arg = std::move(e);
      }
    return finish(std::move(arg), Exactness::ExactVertex, evals);
  }

  const OptBudget norm_budget = budget;
  Problem prob;
  prob.dim = n * n;
  prob.convex = objective.convex;
  prob.objective = [&](const Flat& x) { return objective.fn(to_matrix(x, n)); };
  prob.norm = [inner, n, norm_budget](const Flat& x) {
    return mnorm_eval(*inner, to_matrix(x, n), norm_budget);
  };
  if (linear_maximizer(*inner, Matrix::identity(n))) {
    prob.lmo = [inner, n](const Flat& g) -> std::optional<Flat> {
      auto y = linear_maximizer(*inner, to_matrix(g, n));
      if (!y) return std::nullopt;
      return to_flat(*y);
    };
  }

  std::vector<Flat> fixed;
  fixed.push_back(to_flat(Matrix::identity(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) fixed.push_back(to_flat(Matrix::single_entry(n, i, j)));
  fixed.push_back(to_flat(Matrix::ones(n)));

  AscentOutcome out = run_ascent(prob, fixed, budget);
  return finish(to_matrix(out.best.x, n), Exactness::LowerBound, evals + out.evaluations);
}

}  // namespace normlab
