// Acceptance run: one PASS/FAIL line per criterion, with the measured margin
// and the wall time against its limit. Exit status is non-zero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "json.hpp"
#include "normlab/cli_io.hpp"
#include "normlab/extraction.hpp"
#include "normlab/gind_engine.hpp"
#include "normlab/matrix_norms.hpp"
#include "normlab/vector_norms.hpp"
#include "normlab/verification.hpp"
#include "oracles.hpp"

using namespace normlab;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0: no runtime bound
  std::function<Outcome()> run;
};

double rel(double got, double want) { return oracle::rel_err(got, want); }

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

const Matrix kJ2 = Matrix::ones(2);

MatrixNormSpec max_cr() {
  return MatrixNormSpec::max_of({MatrixNormSpec::max_col_sum(), MatrixNormSpec::max_row_sum()});
}

Outcome closed_form_recovery() {
  double worst = 0.0;
  RandomStream root(101);
  for (std::size_t n : {2u, 3u}) {
    RandomStream rng = root.child(n);
    const OptBudget b = OptBudget::defaults(n);
    for (int t = 0; t < 50; ++t) {
      const Matrix a = random_test_matrix(n, rng);
      const auto m = oracle::to_mat(a);
      worst = std::max(worst, rel(gind_eval({l1(), l1()}, a, b).value, oracle::max_col_sum(m)));
      worst = std::max(worst, rel(gind_eval({linf(), linf()}, a, b).value, oracle::max_row_sum(m)));
      worst = std::max(worst, rel(gind_eval({l2(), l2()}, a, b).value, oracle::spectral(m)));
      // The library's own closed forms must agree with the same oracle.
      worst = std::max(worst, rel(mnorm_eval(MatrixNormSpec::spectral(), a), oracle::spectral(m)));
    }
  }
  return {worst <= 1e-6, "max rel err " + fmt("%.2e", worst) + " (tol 1e-6)"};
}

Outcome submultiplicativity_both_ways() {
  RandomStream rng(202);
  const SuiteReport dom = verify_submultiplicativity({linf(), l1()}, 2, 1000, rng);
  const SuiteCase* prod = dom.find("submultiplicativity on 1000");
  const double worst = prod && prod->value("worst_ratio") ? *prod->value("worst_ratio") : 1e300;
  const bool forward = dom.overall() == CaseStatus::Pass && worst <= 1 + 1e-9;

  RandomStream rng2(203);
  const SuiteReport non = verify_submultiplicativity({l1(), linf()}, 2, 1000, rng2);
  const SuiteCase* v = non.find("submultiplicativity violated");
  bool converse = false;
  if (v && v->witnesses.size() == 2) {
    const Matrix& a = std::get<Matrix>(v->witnesses[0].value);
    const Matrix& b = std::get<Matrix>(v->witnesses[1].value);
    const double lhs = gind_eval({l1(), linf()}, a * b, OptBudget::defaults(2)).value;
    const double na = gind_eval({l1(), linf()}, a, OptBudget::defaults(2)).value;
    converse = a == kJ2 && b == kJ2 && std::abs(lhs - 2.0) <= 1e-12 && std::abs(na - 1.0) <= 1e-12;
  }
  return {forward && converse, "worst ratio " + fmt("%.12f", worst) + " on 1000 products; J^2 witness " +
                                   (converse ? "2 > 1" : "missing")};
}

Outcome scaling_uniqueness() {
  RandomStream rng(303);
  const GIndPair a{VectorNormSpec::scaled(3, linf()), VectorNormSpec::scaled(6, l2())};
  const GIndPair b{linf(), VectorNormSpec::scaled(2, l2())};
  const OptBudget budget = OptBudget::defaults(2);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const Matrix m = random_test_matrix(2, rng);
    worst = std::max(worst, rel(gind_eval(a, m, budget).value, gind_eval(b, m, budget).value));
  }
  const double hi = gind_eval(b, kJ2, budget).value;
  const double lo = gind_eval({l2(), VectorNormSpec::scaled(2, l2())}, kJ2, budget).value;
  const bool values = rel(hi, 4 * std::numbers::sqrt2) <= 1e-6 && rel(lo, 4.0) <= 1e-6;
  return {worst <= 1e-9 && values, "scaled pairs max rel diff " + fmt("%.2e", worst) + "; J2: " +
                                       fmt("%.6f", hi) + " vs " + fmt("%.6f", lo)};
}

Outcome alpha_identity() {
  const std::vector<std::pair<const char*, VectorNormSpec>> norms{{"l1", l1()}, {"l2", l2()}, {"linf", linf()}};
  double worst = 0.0;
  int checks = 0;
  RandomStream root(404);
  for (std::size_t n : {2u, 3u}) {
    RandomStream rng = root.child(n);
    const OptBudget b = OptBudget::defaults(n);
    std::vector<Vector> xs;
    for (int t = 0; t < 50; ++t) xs.push_back(Vector::random_gaussian(n, rng));
    for (const auto& [na, n1] : norms) {
      for (const auto& [nb, n2] : norms) {
        for (const Vector& x : xs) {
          const AlphaIdentityReport r = alpha_identity_check({n1, n2}, x, b);
          worst = std::max(worst, rel(r.lhs, r.rhs));
          ++checks;
        }
      }
    }
  }
  return {worst <= 1e-6, std::to_string(checks) + " checks, max rel diff " + fmt("%.2e", worst) + " (tol 1e-6)"};
}

Outcome upper_bound_law() {
  const OptBudget inner{2, 40, 8};
  const OptBudget outer{1, 20, 4};
  const std::vector<MatrixNormSpec> catalog{MatrixNormSpec::entrywise_sum(), MatrixNormSpec::entrywise_max(),
                                            MatrixNormSpec::max_col_sum(),   MatrixNormSpec::max_row_sum(),
                                            MatrixNormSpec::spectral(),      max_cr()};
  RandomStream rng(505);
  std::vector<Matrix> mats;
  for (int t = 0; t < 100; ++t) mats.push_back(random_test_matrix(2, rng));
  double worst = 0.0;
  std::string worst_norm;
  for (const MatrixNormSpec& n : catalog) {
    const ExtractionResult ex = extract(n, inner);
    for (const Matrix& a : mats) {
      const double r = gind_eval(ex.pair(), a, outer).value / mnorm_eval(n, a);
      if (r > worst) {
        worst = r;
        worst_norm = n.describe();
      }
    }
  }
  return {worst <= 1 + 1e-6, "max ratio " + fmt("%.12f", worst) + " (" + worst_norm + "), bound 1 + 1e-6"};
}

Outcome round_trip() {
  const OptBudget inner{1, 15, 4};
  const OptBudget outer{1, 20, 4};
  double worst_rt = 0.0, worst_eq = 0.0;
  RandomStream root(606);
  for (const MatrixNormSpec& n : {MatrixNormSpec::max_col_sum(), MatrixNormSpec::max_row_sum(), MatrixNormSpec::spectral()}) {
    const ExtractionResult ex = extract(n, inner);
    for (std::size_t d : {2u, 3u}) {
      RandomStream rng = root.child(d);
      for (int t = 0; t < 50; ++t) {
        const Matrix a = random_test_matrix(d, rng);
        worst_rt = std::max(worst_rt, rel(gind_eval(ex.pair(), a, outer).value, mnorm_eval(n, a)));
      }
      for (int t = 0; t < 100; ++t) {
        const Vector x = Vector::random_gaussian(d, rng);
        worst_eq = std::max(worst_eq, rel(vnorm_eval(ex.norm1, x), vnorm_eval(ex.norm2, x)));
      }
    }
  }
  return {worst_rt <= 1e-6 && worst_eq <= 1e-6,
          "reconstruction max rel err " + fmt("%.2e", worst_rt) + ", norm1 vs norm2 " + fmt("%.2e", worst_eq)};
}

Outcome non_minimality() {
  const OptBudget b{2, 40, 8};
  RandomStream rng(707);
  const ProbeReport s = minimality_probe(MatrixNormSpec::entrywise_sum(), 2, 20, b, rng);
  const ProbeReport m = minimality_probe(max_cr(), 2, 20, b, rng);
  const bool sigma_ok = s.verdict == ProbeVerdict::GapFound &&
                        std::abs(s.max_gap_ratio - std::numbers::sqrt2 / 2) <= 1e-3 &&
                        s.witness == Matrix{{1, 1}, {1, -1}};
  const bool cr_ok = m.verdict == ProbeVerdict::GapFound && std::abs(m.max_gap_ratio - 0.5) <= 1e-3 &&
                     m.witness == Matrix{{1, 0}, {1, 0}};
  return {sigma_ok && cr_ok, "sigma ratio " + fmt("%.6f", s.max_gap_ratio) + (sigma_ok ? " at [[1,1],[1,-1]]" : " (witness/ratio off)") +
                                 "; max{C,R} ratio " + fmt("%.6f", m.max_gap_ratio) +
                                 (cr_ok ? " at [[1,0],[1,0]]" : " (witness/ratio off)")};
}

Outcome chain_inequality() {
  const std::vector<GIndPair> pairs{{linf(), l1()},
                                    {l2(), l1()},
                                    {linf(), l2()},
                                    {VectorNormSpec::lp(3), VectorNormSpec::lp(1.5)},
                                    {l2(), VectorNormSpec::scaled(2, linf())}};
  RandomStream rng(808);
  const OptBudget b = OptBudget::defaults(2);
  int holds = 0, total = 0;
  double min_slack = 1e300;
  bool all_dominated = true;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    RandomStream dom_rng = rng.child(100 + i);
    all_dominated = all_dominated && dominance_check(pairs[i].norm1, pairs[i].norm2, 2, 256, dom_rng).dominated;
    RandomStream mats = rng.child(i);
    for (int t = 0; t < 50; ++t) {
      const ChainReport r = chain_compare(pairs[i], random_test_matrix(2, mats), b);
      const double eps = 1e-9 * std::max(1.0, r.v12);
      const bool ok = r.v21 <= r.v11 + eps && r.v11 <= r.v12 + eps && r.v21 <= r.v22 + eps && r.v22 <= r.v12 + eps;
      holds += ok ? 1 : 0;
      ++total;
      min_slack = std::min(min_slack, r.slack);
    }
  }
  return {all_dominated && holds == total, std::to_string(holds) + "/" + std::to_string(total) +
                                               " chains hold, min slack " + fmt("%.3e", min_slack)};
}

Outcome oracle_equivalence() {
  const double ps[] = {1.0, 2.0, oracle::kInf};
  const char* names[] = {"l1", "l2", "linf"};
  RandomStream rng(909);
  double worst = 0.0;
  std::string where;
  double ascent_seconds = 0.0;
  for (int d = 0; d < 3; ++d) {
    RandomStream draws = rng.child(static_cast<std::uint64_t>(d));
    for (int t = 0; t < 20; ++t) {
      const double pc = ps[draws.next_u64() % 3];
      const Matrix a = Matrix::random_gaussian(2, draws);
      const auto m = oracle::to_mat(a);
      const auto start = std::chrono::steady_clock::now();
      const ComputationResult r = gind_eval({VectorNormSpec::lp(ps[d]), VectorNormSpec::lp(pc)}, a,
                                            OptBudget::defaults(2), Strategy::AscentOnly);
      ascent_seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      const double want = oracle::dense_sphere_max2(
          [&](const oracle::Vec& x) { return oracle::lp(oracle::apply(m, x), pc); },
          [&](const oracle::Vec& x) { return oracle::lp(x, ps[d]); });
      const double e = rel(r.value, want);
      if (r.exactness != Exactness::LowerBound) return {false, "ascent path was not exercised"};
      if (e > worst) {
        worst = e;
        where = std::string("domain ") + names[d];
      }
    }
  }
  return {worst <= 1e-4, "60 instances, max rel diff " + fmt("%.2e", worst) + (where.empty() ? "" : " (" + where + ")") +
                             ", ascent time " + fmt("%.2f", ascent_seconds) + " s"};
}

std::string run_cli_report(const std::string& path) {
  std::ostringstream out, err;
  const int code = run_command({"verify", "--suite", "paper-demos", "--seed", "42", "--report", path}, out, err);
  if (code != 0) return "exit " + std::to_string(code);
  std::ifstream in(path);
  auto j = nlohmann::ordered_json::parse(in);
  std::function<void(nlohmann::ordered_json&)> strip = [&](nlohmann::ordered_json& v) {
    if (v.is_object()) {
      v.erase("elapsed_seconds");
      for (auto& [k, c] : v.items()) strip(c);
    } else if (v.is_array()) {
      for (auto& c : v) strip(c);
    }
  };
  strip(j);
  return j.dump();
}

Outcome cli_determinism() {
  const auto dir = std::filesystem::temp_directory_path() / ("normlab_acc_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const std::string a = run_cli_report((dir / "a.json").string());
  const std::string b = run_cli_report((dir / "b.json").string());
  std::filesystem::remove_all(dir);
  const bool ok = a == b && a.rfind("exit", 0) != 0;
  return {ok, ok ? "reports identical (" + std::to_string(a.size()) + " bytes without timing)" : "reports differ: " + a.substr(0, 40)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "closed-form recovery of the induced norms", 10, closed_form_recovery},
      {2, "submultiplicativity iff dominance", 5, submultiplicativity_both_ways},
      {3, "scaled pairs agree, unscaled pairs differ", 10, scaling_uniqueness},
      {4, "alpha identity", 20, alpha_identity},
      {5, "extraction upper-bound law", 60, upper_bound_law},
      {6, "extraction round trip on induced norms", 60, round_trip},
      {7, "non-minimality witnesses", 30, non_minimality},
      {8, "four-norm chain for dominated pairs", 20, chain_inequality},
      {9, "ascent vs dense enumeration oracle", 30, oracle_equivalence},
      {10, "CLI report determinism", 0, cli_determinism},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_seconds <= 0 || secs < c.limit_seconds;
    const bool pass = o.ok && in_time;
    failures += pass ? 0 : 1;
    std::printf("[%s] %2d %s: %s; %.2f s", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
    if (c.limit_seconds > 0) std::printf(" (limit %.0f s%s)", c.limit_seconds, in_time ? "" : ", exceeded");
    std::printf("\n");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
