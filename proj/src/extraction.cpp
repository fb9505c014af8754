#include "normlab/extraction.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <string>
#include <unordered_map>

#include "normlab/error.hpp"
#include "normlab/matrix_norms.hpp"
#include "normlab/vector_norms.hpp"

namespace normlab {

Matrix column_embed(const Vector& x, std::size_t j) {
  const std::size_t n = x.dim();
  if (j >= n) {
    throw DimensionError("column_embed: column " + std::to_string(j) + " out of range for n = " +
                         std::to_string(n));
  }
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, j) = x[i];
  return m;
}

Matrix column_replicate(const Vector& x) {
  const std::size_t n = x.dim();
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = x[i];
  return m;
}

VectorNormSpec extract_norm2(const MatrixNormSpec& source, const OptBudget& budget) {
  return VectorNormSpec::extracted(ExtractionRole::Norm2, source, budget);
}

VectorNormSpec extract_norm1(const MatrixNormSpec& source, const OptBudget& budget) {
  return VectorNormSpec::extracted(ExtractionRole::Norm1, source, budget);
}

namespace {

struct Memo {
  std::mutex mu;
  std::unordered_map<std::string, ComputationResult> entries;
};

Memo& memo() {
  static Memo m;
  return m;
}

constexpr std::size_t kMemoLimit = 1u << 20;

std::string memo_key(const MatrixNormSpec& source, const OptBudget& budget, const Vector& rep) {
  std::string key = source.describe();
  key += '|';
  key += std::to_string(budget.multistarts) + ',' + std::to_string(budget.max_iters) + ',' +
         std::to_string(budget.samples) + ',' + std::to_string(budget.seed) + ',';
  char buf[48];
  std::snprintf(buf, sizeof buf, "%a,%a", budget.step_init, budget.tol);
  key += buf;
  for (const auto& z : rep) {
    std::snprintf(buf, sizeof buf, "|%lld,%lld", std::llround(z.real() * 1e12),
                  std::llround(z.imag() * 1e12));
    key += buf;
  }
  return key;
}

}  // namespace

ComputationResult evaluate_extracted_norm1(const MatrixNormSpec& source, const Vector& x,
                                           const OptBudget& budget) {
  const std::size_t n = x.dim();
  if (n == 0) throw DimensionError("extracted norm: empty vector");
  const double scale = euclidean(x);
  if (scale == 0.0) {
    ComputationResult r;
    r.value = 0.0;
    r.witness = Matrix::identity(n);
    r.exactness = Exactness::ExactClosedForm;
    return r;
  }
  // Canonical representative: ||rep||_2 = 1, first largest entry real > 0.
  std::size_t lead = 0;
  double top = 0.0;
  for (std::size_t i = 0; i < n; ++i) top = std::max(top, std::abs(x[i]));
  while (std::abs(x[lead]) < top * (1.0 - 1e-12)) ++lead;
  const Complex rot = std::conj(x[lead]) / std::abs(x[lead]);
  Vector rep = x * (rot / scale);

  const std::string key = memo_key(source, budget, rep);
  {
    std::lock_guard lock(memo().mu);
    if (auto it = memo().entries.find(key); it != memo().entries.end()) {
      ComputationResult r = it->second;
      r.value *= scale;
      return r;
    }
  }

  MatrixObjective obj;
  obj.fn = [&source, &rep, &budget](const Matrix& a) {
    return mnorm_eval(source, column_replicate(mat_apply(a, rep)), budget);
  };
  obj.convex = true;
  ComputationResult r = maximize_on_matrix_sphere(obj, source, n, budget);

  {
    std::lock_guard lock(memo().mu);
    if (memo().entries.size() >= kMemoLimit) memo().entries.clear();
    memo().entries.insert_or_assign(key, r);
  }
  r.value *= scale;
  return r;
}

void clear_extraction_cache() {
  std::lock_guard lock(memo().mu);
  memo().entries.clear();
}

std::size_t extraction_cache_size() {
  std::lock_guard lock(memo().mu);
  return memo().entries.size();
}

ExtractionResult extract(const MatrixNormSpec& source, const OptBudget& budget) {
  return ExtractionResult{source, extract_norm1(source, budget), extract_norm2(source, budget),
                          budget};
}

AlphaIdentityReport alpha_identity_check(const GIndPair& pair, const Vector& x,
                                         const OptBudget& budget) {
  AlphaIdentityReport rep;
  rep.lhs = gind_eval(pair, column_replicate(x), budget).value;
  rep.rhs = sum_functional_alpha(pair.norm1, x.dim(), budget) * vnorm_eval(pair.norm2, x);
  rep.holds = std::abs(rep.lhs - rep.rhs) <=
              kAlphaIdentityTol * std::max(std::abs(rep.lhs), std::abs(rep.rhs));
  return rep;
}

const char* to_string(ProbeVerdict v) noexcept {
  return v == ProbeVerdict::GapFound ? "gap_found" : "no_gap_found";
}

std::vector<Matrix> probe_matrices(std::size_t n) {
  std::vector<Matrix> probes;
  probes.push_back(Matrix::identity(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) probes.push_back(Matrix::single_entry(n, i, j));
  probes.push_back(Matrix::ones(n));
  if (n >= 2) {
    Matrix hadamard(n);
    hadamard(0, 0) = 1.0;
    hadamard(0, 1) = 1.0;
    hadamard(1, 0) = 1.0;
    hadamard(1, 1) = -1.0;
    probes.push_back(std::move(hadamard));
    Matrix first_column(n);
    first_column(0, 0) = 1.0;
    first_column(1, 0) = 1.0;
    probes.push_back(std::move(first_column));
  }
  return probes;
}

ProbeReport minimality_probe(const MatrixNormSpec& source, std::size_t n, int trials,
                             const OptBudget& budget, RandomStream& rng) {
  if (trials < 1) throw SpecError("minimality_probe: trials must be at least 1");
  if (n == 0) throw DimensionError("minimality_probe: n must be positive");
  const ExtractionResult ext = extract(source, budget);
  const GIndPair pair = ext.pair();

  std::vector<Matrix> candidates = probe_matrices(n);
  RandomStream draws = rng.child(0);
  for (int t = 0; t < trials; ++t) candidates.push_back(random_test_matrix(n, draws));

  ProbeReport rep;
  bool have = false;
  for (const auto& a : candidates) {
    const double na = mnorm_eval(source, a, budget);
    if (!(na > 0.0)) continue;
    const double ratio = gind_eval(pair, a, budget).value / na;
    ++rep.trials;
    if (!have || ratio < rep.max_gap_ratio * (1.0 - 1e-12)) {
      rep.max_gap_ratio = ratio;
      rep.witness = a;
    }
    if (!have || ratio > rep.upper_ratio * (1.0 + 1e-12)) {
      rep.upper_ratio = ratio;
      rep.upper_witness = a;
    }
    have = true;
  }
  rep.verdict =
      rep.max_gap_ratio < 1.0 - kGapThreshold ? ProbeVerdict::GapFound : ProbeVerdict::NoGapFound;
  return rep;
}

}  // namespace normlab
