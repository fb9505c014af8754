#include "normlab/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "normlab/error.hpp"
#include "normlab/extraction.hpp"
#include "normlab/matrix_norms.hpp"
#include "normlab/vector_norms.hpp"

namespace normlab {

const char* to_string(CaseStatus s) noexcept {
  switch (s) {
    case CaseStatus::Pass:
      return "pass";
    case CaseStatus::Fail:
      return "fail";
    case CaseStatus::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

std::optional<double> SuiteCase::value(const std::string& name) const {
  for (const auto& [k, v] : values)
    if (k == name) return v;
  return std::nullopt;
}

CaseStatus SuiteReport::overall() const noexcept {
  CaseStatus worst = CaseStatus::Pass;
  for (const auto& c : cases) {
    if (c.status == CaseStatus::Fail) return CaseStatus::Fail;
    if (c.status == CaseStatus::Inconclusive) worst = CaseStatus::Inconclusive;
  }
  return worst;
}

const SuiteCase* SuiteReport::find(const std::string& description_prefix) const {
  for (const auto& c : cases)
    if (c.description.rfind(description_prefix, 0) == 0) return &c;
  return nullptr;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool exact(const ComputationResult& r) { return r.exactness != Exactness::LowerBound; }

double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale > 0.0 ? std::abs(a - b) / scale : 0.0;
}

OptBudget stronger(OptBudget b) {
  b.multistarts *= 2;
  b.samples *= 2;
  b.max_iters *= 2;
  return b;
}

std::string dim_label(std::size_t n) { return "n = " + std::to_string(n); }

// Supporting functional of `spec` at x by central differences: Re <g, h> is
// the first-order change of ||x + h||.
Vector support_direction(const VectorNormSpec& spec, const Vector& x) {
  const double h = 1e-6 * std::max(euclidean(x), 1e-300);
  Vector g(x.dim());
  Vector probe = x;
  for (std::size_t k = 0; k < x.dim(); ++k) {
    const Complex xk = x[k];
    probe[k] = xk + h;
    const double fp = vnorm_eval(spec, probe);
    probe[k] = xk - h;
    const double fm = vnorm_eval(spec, probe);
    probe[k] = xk + Complex{0.0, h};
    const double gp = vnorm_eval(spec, probe);
    probe[k] = xk - Complex{0.0, h};
    const double gm = vnorm_eval(spec, probe);
    probe[k] = xk;
    g[k] = Complex{(fp - fm) / (2 * h), (gp - gm) / (2 * h)};
  }
  return g;
}

struct Product {
  double lhs = 0.0;  // ||AB||
  double rhs = 0.0;  // ||A|| ||B||
  bool all_exact = true;

  double ratio() const { return rhs > 0.0 ? lhs / rhs : 0.0; }
};

Product product_check(const GIndPair& pair, const Matrix& a, const Matrix& b,
                      const OptBudget& budget) {
  const ComputationResult ab = gind_eval(pair, a * b, budget);
  const ComputationResult na = gind_eval(pair, a, budget);
  const ComputationResult nb = gind_eval(pair, b, budget);
  return {ab.value, na.value * nb.value, exact(ab) && exact(na) && exact(nb)};
}

}  // namespace

// ---------------------------------------------------------------- submultiplicativity

SuiteReport verify_submultiplicativity(const GIndPair& pair, std::size_t n, int trials,
                                      RandomStream& rng, std::optional<OptBudget> budget) {
  const auto t0 = Clock::now();
  if (n == 0) throw DimensionError("verify_submultiplicativity: n must be positive");
  if (trials < 1) throw SpecError("verify_submultiplicativity: trials must be at least 1");
  const OptBudget b = budget.value_or(OptBudget::defaults(n, rng.seed()));

  SuiteReport rep;
  rep.suite_name = "submultiplicativity";
  rep.seed = rng.seed();

  RandomStream dom_rng = rng.child(1);
  const DominanceReport dom = dominance_check(pair.norm1, pair.norm2, n, 256, dom_rng);
  {
    SuiteCase c;
    c.description = "dominance " + pair.norm1.describe() + " <= " + pair.norm2.describe() +
                    " on C^n, " + dim_label(n) + ": " +
                    (dom.dominated ? "dominated" : "not dominated");
    c.values = {{"dominated", dom.dominated ? 1.0 : 0.0},
                {"max_ratio", dom.max_ratio},
                {"samples", static_cast<double>(dom.samples_used)}};
    if (dom.counterexample) c.witnesses.push_back({"counterexample", *dom.counterexample});
    rep.cases.push_back(std::move(c));
  }

  RandomStream draws = rng.child(2);
  if (dom.dominated) {
    SuiteCase c;
    c.description = "submultiplicativity on " + std::to_string(trials) + " random products";
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
      const Matrix a = random_test_matrix(n, draws);
      const Matrix bm = random_test_matrix(n, draws);
      Product p = product_check(pair, a, bm, b);
      if (p.ratio() > 1.0 + kSubmultSlack) p = product_check(pair, a, bm, stronger(b));
      worst = std::max(worst, p.ratio());
      if (p.ratio() > 1.0 + kSubmultSlack) {
        c.status = p.all_exact ? CaseStatus::Fail : CaseStatus::Inconclusive;
        c.description += p.all_exact ? ": violated although dominated"
                                     : ": apparent violation from lower-bound values";
        c.witnesses = {{"A", a}, {"B", bm}};
        c.values = {{"lhs", p.lhs}, {"rhs", p.rhs}, {"ratio", p.ratio()}};
        break;
      }
    }
    if (c.status == CaseStatus::Pass) c.values = {{"worst_ratio", worst}};
    c.values.push_back({"products", static_cast<double>(trials)});
    rep.cases.push_back(std::move(c));
  } else {
    const Vector& x0 = *dom.counterexample;
    std::vector<std::pair<Matrix, Matrix>> candidates;
    // x0 v* squared violates the bound when <v, x0> = ||x0||_1 ||v||_1*; try
    // v = all-ones (C_x0) first, then the numerical supporting functional.
    candidates.emplace_back(column_replicate(x0), column_replicate(x0));
    const Matrix hoelder = Matrix::outer(x0, support_direction(pair.norm1, x0));
    candidates.emplace_back(hoelder, hoelder);
    candidates.emplace_back(Matrix::outer(x0, x0), Matrix::outer(x0, x0));
    for (int t = 0; t < trials; ++t) {
      candidates.emplace_back(random_test_matrix(n, draws), random_test_matrix(n, draws));
    }

    SuiteCase c;
    double best = -1.0;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      const auto& [a, bm] = candidates[k];
      const Product p = product_check(pair, a, bm, b);
      if (p.ratio() > best) {
        best = p.ratio();
        c.witnesses = {{"A", a}, {"B", bm}};
        c.values = {{"lhs", p.lhs}, {"rhs", p.rhs}, {"ratio", p.ratio()}};
      }
      if (best > 1.0 + kSubmultSlack) break;
    }
    if (best > 1.0 + kSubmultSlack) {
      c.description = "submultiplicativity violated, as expected without dominance";
    } else {
      c.status = CaseStatus::Inconclusive;
      c.description = "no submultiplicativity violation found although not dominated";
    }
    rep.cases.push_back(std::move(c));
  }

  rep.elapsed_seconds = seconds_since(t0);
  return rep;
}

// ---------------------------------------------------------------- scaling uniqueness

SuiteReport verify_scaling_uniqueness(const GIndPair& pair_a, const GIndPair& pair_b,
                                      std::size_t n, int trials, RandomStream& rng,
                                      std::optional<OptBudget> budget,
                                      std::optional<Vector> reference) {
  const auto t0 = Clock::now();
  if (n == 0) throw DimensionError("verify_scaling_uniqueness: n must be positive");
  if (trials < 1) throw SpecError("verify_scaling_uniqueness: trials must be at least 1");
  const OptBudget b = budget.value_or(OptBudget::defaults(n, rng.seed()));
  const Vector ref = reference.value_or(Vector::ones(n));
  if (ref.dim() != n) throw DimensionError("verify_scaling_uniqueness: reference dimension");
  if (ref.is_zero()) {
    throw SpecError("verify_scaling_uniqueness: degenerate reference point (zero vector)");
  }

  SuiteReport rep;
  rep.suite_name = "scaling-uniqueness";
  rep.seed = rng.seed();

  const double gamma1 = vnorm_eval(pair_a.norm1, ref) / vnorm_eval(pair_b.norm1, ref);
  const double gamma2 = vnorm_eval(pair_a.norm2, ref) / vnorm_eval(pair_b.norm2, ref);
  rep.cases.push_back(
      {"reference ratios " + pair_a.describe() + " / " + pair_b.describe(),
       CaseStatus::Pass,
       {{"reference", ref}},
       {{"gamma1_hat", gamma1}, {"gamma2_hat", gamma2}}});

  // Both slots must scale by the same gamma.
  bool proportional = rel_diff(gamma1, gamma2) <= kProportionalTol;
  double worst_dev = rel_diff(gamma1, gamma2);
  std::optional<Vector> off_point;
  if (!proportional) off_point = ref;
  RandomStream points = rng.child(1);
  for (int t = 0; t < trials && proportional; ++t) {
    const Vector x = Vector::random_gaussian(n, points);
    const double d1 = rel_diff(vnorm_eval(pair_a.norm1, x), gamma1 * vnorm_eval(pair_b.norm1, x));
    const double d2 = rel_diff(vnorm_eval(pair_a.norm2, x), gamma1 * vnorm_eval(pair_b.norm2, x));
    worst_dev = std::max({worst_dev, d1, d2});
    if (std::max(d1, d2) > kProportionalTol) {
      proportional = false;
      off_point = x;
    }
  }
  {
    SuiteCase c;
    c.description = proportional ? "proportional with a common factor"
                                 : "not proportional with a common factor";
    c.values = {{"proportional", proportional ? 1.0 : 0.0}, {"worst_deviation", worst_dev}};
    if (off_point) c.witnesses.push_back({"point", *off_point});
    rep.cases.push_back(std::move(c));
  }

  // g-ind comparison: J_n first, then random matrices.
  RandomStream draws = rng.child(2);
  double max_diff = 0.0;
  int compared = 0;
  std::optional<Matrix> differ_at;
  double va_at = 0.0, vb_at = 0.0;
  bool differ_exact = false;
  for (int t = 0; t <= trials; ++t) {
    const Matrix a = t == 0 ? Matrix::ones(n) : random_test_matrix(n, draws);
    const ComputationResult ra = gind_eval(pair_a, a, b);
    const ComputationResult rb = gind_eval(pair_b, a, b);
    ++compared;
    const double d = rel_diff(ra.value, rb.value);
    if (d > max_diff) max_diff = d;
    if (d > kGIndEqualTol && !differ_at) {
      differ_at = a;
      va_at = ra.value;
      vb_at = rb.value;
      differ_exact = exact(ra) && exact(rb);
      if (!proportional) break;
    }
  }

  SuiteCase v;
  v.values = {{"gamma_hat", gamma1},
              {"max_relative_difference", max_diff},
              {"matrices_compared", static_cast<double>(compared)}};
  if (differ_at) {
    v.witnesses.push_back({"A", *differ_at});
    v.values.push_back({"gind_a", va_at});
    v.values.push_back({"gind_b", vb_at});
  }
  if (proportional && !differ_at) {
    v.description = "verdict: scaled-and-equal";
  } else if (!proportional && differ_at) {
    v.description = "verdict: not-scaled-and-unequal";
  } else if (proportional) {
    v.description = "verdict: inconsistent, proportional pairs give different g-ind values";
    v.status = differ_exact ? CaseStatus::Fail : CaseStatus::Inconclusive;
  } else {
    v.description = "verdict: inconsistent, no matrix separates non-proportional pairs";
    v.status = CaseStatus::Inconclusive;
    if (off_point) v.witnesses.push_back({"point", *off_point});
  }
  rep.cases.push_back(std::move(v));

  rep.elapsed_seconds = seconds_since(t0);
  return rep;
}

// ---------------------------------------------------------------- extraction

SuiteReport verify_extraction(const MatrixNormSpec& source, std::size_t n, int trials,
                              const OptBudget& budget, RandomStream& rng) {
  const auto t0 = Clock::now();
  if (n == 0) throw DimensionError("verify_extraction: n must be positive");

  SuiteReport rep;
  rep.suite_name = "extraction";
  rep.seed = rng.seed();

  const ExtractionResult ext = extract(source, budget);
  const Vector ones = Vector::ones(n);
  rep.cases.push_back({"extracted pair of " + source.describe() + ", " + dim_label(n),
                       CaseStatus::Pass,
                       {},
                       {{"norm1_at_ones", vnorm_eval(ext.norm1, ones)},
                        {"norm2_at_ones", vnorm_eval(ext.norm2, ones)},
                        {"norm1_at_e1", vnorm_eval(ext.norm1, Vector::basis(n, 0))},
                        {"norm2_at_e1", vnorm_eval(ext.norm2, Vector::basis(n, 0))}}});

  RandomStream probe_rng = rng.child(1);
  const ProbeReport probe = minimality_probe(source, n, trials, budget, probe_rng);

  {
    SuiteCase c;
    c.description = "upper-bound law gind(extracted pair) <= N";
    c.values = {{"upper_ratio", probe.upper_ratio},
                {"matrices", static_cast<double>(probe.trials)}};
    if (probe.upper_ratio > 1.0 + kUpperBoundTol) {
      c.status = CaseStatus::Fail;
      c.witnesses.push_back({"A", probe.upper_witness});
    }
    rep.cases.push_back(std::move(c));
  }

  const bool gap = probe.verdict == ProbeVerdict::GapFound;
  rep.cases.push_back({std::string("minimality probe: ") + to_string(probe.verdict) +
                           (gap ? " (N is not minimal; round trip not asserted)" : ""),
                       CaseStatus::Pass,
                       {{"A", probe.witness}},
                       {{"max_gap_ratio", probe.max_gap_ratio},
                        {"trials", static_cast<double>(probe.trials)}}});
  if (gap) {
    rep.elapsed_seconds = seconds_since(t0);
    return rep;
  }

  {
    const double dev = std::max(1.0 - probe.max_gap_ratio, probe.upper_ratio - 1.0);
    SuiteCase c;
    c.description = "round trip gind(extracted pair) = N";
    c.values = {{"max_relative_deviation", dev}};
    if (dev > kRoundTripTol) {
      c.status = CaseStatus::Inconclusive;
      c.witnesses.push_back({"A", probe.witness});
    }
    rep.cases.push_back(std::move(c));
  }

  if (mnorm_is_algebra_candidate(source, n) == AlgebraClass::KnownYes) {
    SuiteCase c;
    c.description = "algebra norm: extracted norm1 = norm2";
    RandomStream points = rng.child(2);
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
      const Vector x = Vector::random_gaussian(n, points);
      const double d = rel_diff(vnorm_eval(ext.norm1, x), vnorm_eval(ext.norm2, x));
      if (d > worst) {
        worst = d;
        if (d > kRoundTripTol) c.witnesses = {{"point", x}};
      }
    }
    c.values = {{"max_relative_deviation", worst},
                {"points", static_cast<double>(trials)}};
    if (worst > kRoundTripTol) c.status = CaseStatus::Inconclusive;
    rep.cases.push_back(std::move(c));
  }

  rep.elapsed_seconds = seconds_since(t0);
  return rep;
}

// ---------------------------------------------------------------- demos

namespace {

void demo_catalog(SuiteReport& rep, RandomStream rng) {
  const MatrixNormSpec sigma = MatrixNormSpec::entrywise_sum();
  SuiteCase c;
  c.description = "sigma is submultiplicative on 100 random products";
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const Matrix a = random_test_matrix(2, rng);
    const Matrix b = random_test_matrix(2, rng);
    const double lhs = mnorm_eval(sigma, a * b);
    const double rhs = mnorm_eval(sigma, a) * mnorm_eval(sigma, b);
    worst = std::max(worst, lhs / rhs);
    if (lhs > rhs * (1.0 + kSubmultSlack)) {
      c.status = CaseStatus::Fail;
      c.witnesses = {{"A", a}, {"B", b}};
      break;
    }
  }
  c.values = {{"worst_ratio", worst}};
  rep.cases.push_back(std::move(c));

  const MatrixNormSpec m = MatrixNormSpec::entrywise_max();
  const Matrix j = Matrix::ones(2);
  const double lhs = mnorm_eval(m, j * j);
  const double rhs = mnorm_eval(m, j) * mnorm_eval(m, j);
  rep.cases.push_back({"entrywise max is not submultiplicative: ||J^2||_m > ||J||_m^2",
                       lhs > rhs * (1.0 + kSubmultSlack) ? CaseStatus::Pass : CaseStatus::Fail,
                       {{"A", j}, {"B", j}},
                       {{"lhs", lhs}, {"rhs", rhs}}});
}

void demo_induced(SuiteReport& rep, RandomStream rng) {
  struct Item {
    const char* label;
    GIndPair pair;
    MatrixNormSpec closed_form;
  };
  const Item items[] = {
      {"gind(l1, l1) = max column sum", {l1(), l1()}, MatrixNormSpec::max_col_sum()},
      {"gind(linf, linf) = max row sum", {linf(), linf()}, MatrixNormSpec::max_row_sum()},
      {"gind(l2, l2) = spectral norm", {l2(), l2()}, MatrixNormSpec::spectral()},
  };
  std::uint64_t stream = 0;
  for (const auto& item : items) {
    for (std::size_t n : {2u, 3u}) {
      RandomStream draws = rng.child(stream++);
      const OptBudget b = OptBudget::defaults(n, rng.seed());
      SuiteCase c;
      c.description = std::string(item.label) + ", " + dim_label(n) + ", 10 random matrices";
      double worst = 0.0;
      for (int t = 0; t < 10; ++t) {
        const Matrix a = random_test_matrix(n, draws);
        const double g = gind_eval(item.pair, a, b).value;
        const double v = mnorm_eval(item.closed_form, a);
        const double d = rel_diff(g, v);
        if (d > worst) worst = d;
        if (g > v * (1.0 + kRoundTripTol)) {
          c.status = CaseStatus::Fail;
          c.witnesses = {{"A", a}};
        } else if (d > kRoundTripTol && c.status == CaseStatus::Pass) {
          c.status = CaseStatus::Inconclusive;
          c.witnesses = {{"A", a}};
        }
      }
      c.values = {{"max_relative_error", worst}};
      rep.cases.push_back(std::move(c));
    }
  }
}

void demo_dominated_gind(SuiteReport& rep, RandomStream rng) {
  const VectorNormSpec alpha = linf();
  const VectorNormSpec beta = VectorNormSpec::scaled(2.0, l2());
  const VectorNormSpec gamma = l2();
  const GIndPair ab{alpha, beta};
  const GIndPair gb{gamma, beta};
  const OptBudget b = OptBudget::defaults(2, rng.seed());

  SuiteCase c;
  c.description = "gind(l2, 2*l2) <= gind(linf, 2*l2) on 50 random matrices";
  double worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    const Matrix a = random_test_matrix(2, rng);
    const double lo = gind_eval(gb, a, b).value;
    const double hi = gind_eval(ab, a, b).value;
    worst = std::max(worst, lo / hi);
    if (lo > hi * (1.0 + kSubmultSlack) && c.status == CaseStatus::Pass) {
      // The larger side is an ascent lower bound, so this cannot certify anything.
      c.status = CaseStatus::Inconclusive;
      c.witnesses = {{"A", a}};
    }
  }
  c.values = {{"worst_ratio", worst}};
  rep.cases.push_back(std::move(c));

  const Matrix j = Matrix::ones(2);
  const double lo = gind_eval(gb, j, b).value;
  const double hi = gind_eval(ab, j, b).value;
  rep.cases.push_back({"strict at J_2: gind(l2, 2*l2) < gind(linf, 2*l2)",
                       lo < hi * (1.0 - kSubmultSlack) ? CaseStatus::Pass
                                                       : CaseStatus::Inconclusive,
                       {{"A", j}},
                       {{"gind_l2_2l2", lo}, {"gind_linf_2l2", hi}}});
}

void demo_probes(SuiteReport& rep, RandomStream rng) {
  const OptBudget b{2, 40, 8, 0.5, 1e-7, rng.seed()};
  const std::pair<const char*, MatrixNormSpec> items[] = {
      {"sigma", MatrixNormSpec::entrywise_sum()},
      {"max(maxcolsum, maxrowsum)",
       MatrixNormSpec::max_of({MatrixNormSpec::max_col_sum(), MatrixNormSpec::max_row_sum()})},
  };
  std::uint64_t stream = 0;
  for (const auto& [label, spec] : items) {
    RandomStream probe_rng = rng.child(stream++);
    const ProbeReport p = minimality_probe(spec, 2, 20, b, probe_rng);
    const bool gap = p.verdict == ProbeVerdict::GapFound;
    rep.cases.push_back({std::string("minimality probe ") + label + ": " + to_string(p.verdict),
                         gap ? CaseStatus::Pass : CaseStatus::Inconclusive,
                         {{"A", p.witness}},
                         {{"max_gap_ratio", p.max_gap_ratio},
                          {"trials", static_cast<double>(p.trials)}}});
  }
}

void demo_alpha_identity(SuiteReport& rep, RandomStream rng) {
  const std::pair<const char*, VectorNormSpec> norms[] = {
      {"l1", l1()}, {"l2", l2()}, {"linf", linf()}};
  const OptBudget b = OptBudget::defaults(2, rng.seed());
  RandomStream points = rng.child(0);
  std::vector<Vector> xs;
  for (int t = 0; t < 3; ++t) xs.push_back(Vector::random_gaussian(2, points));
  for (const auto& [l1_label, n1] : norms) {
    for (const auto& [l2_label, n2] : norms) {
      SuiteCase c;
      c.description = std::string("alpha identity (") + l1_label + ", " + l2_label + ")";
      double worst = 0.0;
      for (const auto& x : xs) {
        const AlphaIdentityReport a = alpha_identity_check({n1, n2}, x, b);
        worst = std::max(worst, rel_diff(a.lhs, a.rhs));
        if (!a.holds && c.status == CaseStatus::Pass) {
          // lhs above rhs contradicts the identity outright; below it may be
          // an under-resolved ascent.
          c.status = a.lhs > a.rhs ? CaseStatus::Fail : CaseStatus::Inconclusive;
          c.witnesses = {{"x", x}};
        }
      }
      c.values = {{"max_relative_difference", worst}};
      rep.cases.push_back(std::move(c));
    }
  }
}

void demo_chain(SuiteReport& rep, RandomStream rng) {
  const OptBudget b = OptBudget::defaults(2, rng.seed());
  const GIndPair dominated{linf(), l1()};
  const Matrix id = Matrix::identity(2);
  const ChainReport at_id = chain_compare(dominated, id, b);
  rep.cases.push_back({"chain for (linf, l1) at I_2",
                       at_id.chain_holds ? CaseStatus::Pass : CaseStatus::Inconclusive,
                       {{"A", id}},
                       {{"v21", at_id.v21},
                        {"v11", at_id.v11},
                        {"v22", at_id.v22},
                        {"v12", at_id.v12},
                        {"slack", at_id.slack}}});

  SuiteCase c;
  c.description = "chain for (linf, l1) on 10 random matrices";
  double slack = 1e300;
  for (int t = 0; t < 10; ++t) {
    const Matrix a = random_test_matrix(2, rng);
    const ChainReport r = chain_compare(dominated, a, b);
    slack = std::min(slack, r.slack);
    if (!r.chain_holds && c.status == CaseStatus::Pass) {
      c.status = CaseStatus::Inconclusive;
      c.witnesses = {{"A", a}};
    }
  }
  c.values = {{"min_slack", slack}};
  rep.cases.push_back(std::move(c));

  const Matrix j = Matrix::ones(2);
  const ChainReport at_j = chain_compare({l1(), linf()}, j, b);
  rep.cases.push_back({"chain for (l1, linf) at J_2 is not guaranteed: violated",
                       at_j.chain_holds ? CaseStatus::Inconclusive : CaseStatus::Pass,
                       {{"A", j}},
                       {{"v21", at_j.v21},
                        {"v11", at_j.v11},
                        {"v22", at_j.v22},
                        {"v12", at_j.v12},
                        {"slack", at_j.slack}}});
}

}  // namespace

SuiteReport demo_suite(std::uint64_t seed) {
  const auto t0 = Clock::now();
  const RandomStream root(seed);
  SuiteReport rep;
  rep.suite_name = "demos";
  rep.seed = seed;
  demo_catalog(rep, root.child(1));
  demo_induced(rep, root.child(2));
  demo_dominated_gind(rep, root.child(3));
  demo_probes(rep, root.child(4));
  demo_alpha_identity(rep, root.child(5));
  demo_chain(rep, root.child(6));
  rep.elapsed_seconds = seconds_since(t0);
  return rep;
}

}  // namespace normlab
