#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "json_io.hpp"
#include "normlab/cli_io.hpp"
#include "normlab/error.hpp"
#include "normlab/extraction.hpp"
#include "normlab/gind_engine.hpp"
#include "normlab/matrix_norms.hpp"
#include "normlab/vector_norms.hpp"

namespace normlab {

namespace {

constexpr std::size_t kDefaultDim = 2;
constexpr std::size_t kMaxDim = 8;

// Exit codes.
constexpr int kOk = 0;
constexpr int kMathFail = 1;
constexpr int kUsage = 2;
constexpr int kNoConvergence = 3;

struct Common {
  std::uint64_t seed = 0;
  std::size_t dim = kDefaultDim;
  int multistarts = 0;
  int max_iters = 0;
  int samples = 0;
  double step_init = 0.0;
  double tol = 0.0;
  std::string report;

  CLI::Option* dim_opt = nullptr;
  CLI::Option* multistarts_opt = nullptr;
  CLI::Option* max_iters_opt = nullptr;
  CLI::Option* samples_opt = nullptr;
  CLI::Option* step_init_opt = nullptr;
  CLI::Option* tol_opt = nullptr;

  void attach(CLI::App* sub) {
    sub->add_option("--seed", seed, "random seed (default 0)");
    dim_opt = sub->add_option("--dim", dim, "dimension n (default 2)")
                  ->check(CLI::Range(std::size_t{1}, kMaxDim));
    multistarts_opt = sub->add_option("--budget-multistarts", multistarts, "ascent starts")
                          ->check(CLI::PositiveNumber);
    max_iters_opt = sub->add_option("--budget-max-iters", max_iters, "iterations per start")
                        ->check(CLI::PositiveNumber);
    samples_opt = sub->add_option("--budget-samples", samples, "random seed points")
                      ->check(CLI::PositiveNumber);
    step_init_opt = sub->add_option("--budget-step-init", step_init, "initial hill-climb step")
                        ->check(CLI::PositiveNumber);
    tol_opt = sub->add_option("--budget-tol", tol, "step-size tolerance");
    sub->add_option("--report", report, "write a JSON report to this file");
  }

  // `base` supplies every field the user did not override.
  OptBudget budget(OptBudget base) const {
    if (multistarts_opt->count()) base.multistarts = multistarts;
    if (max_iters_opt->count()) base.max_iters = max_iters;
    if (samples_opt->count()) base.samples = samples;
    if (step_init_opt->count()) base.step_init = step_init;
    if (tol_opt->count()) base.tol = tol;
    base.seed = seed;
    base.validate();
    return base;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AnyNormSpec parse_any_norm(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_norm_spec(text);
  try {
    return parse_vector_norm(text);
  } catch (const ParseError&) {
    return parse_matrix_norm(text);
  }
}

std::string fmt(double v) {
  std::ostringstream ss;
  ss << std::setprecision(10) << v;
  return ss.str();
}

void print_matrix(std::ostream& out, const std::string& indent, const Matrix& m) {
  for (std::size_t i = 0; i < m.dim(); ++i) {
    out << indent;
    for (std::size_t j = 0; j < m.dim(); ++j) out << (j ? ", " : "") << format_complex(m(i, j));
    out << "\n";
  }
}

std::string vector_text(const Vector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.dim(); ++i) s += (i ? ", " : "") + format_complex(v[i]);
  return s;
}

void print_witness(std::ostream& out, const std::string& name,
                   const std::variant<Vector, Matrix>& w) {
  if (const auto* m = std::get_if<Matrix>(&w)) {
    out << "  " << name << ":\n";
    print_matrix(out, "    ", *m);
  } else {
    out << "  " << name << ": (" << vector_text(std::get<Vector>(w)) << ")\n";
  }
}

// True when evaluating this norm runs an optimization (so the value is a lower bound).
bool searches(const MatrixNormSpec& s);

bool searches(const VectorNormSpec& s) {
  switch (s.kind()) {
    case VectorNormSpec::Kind::Scaled:
      return searches(s.inner());
    case VectorNormSpec::Kind::MaxOf:
      return std::any_of(s.members().begin(), s.members().end(),
                         [](const VectorNormSpec& m) { return searches(m); });
    case VectorNormSpec::Kind::Extracted:
      return s.role() == ExtractionRole::Norm1 || searches(s.source());
    default:
      return false;
  }
}

bool searches(const MatrixNormSpec& s) {
  switch (s.kind()) {
    case MatrixNormSpec::Kind::Scaled:
      return searches(s.inner());
    case MatrixNormSpec::Kind::MaxOf:
      return std::any_of(s.members().begin(), s.members().end(),
                         [](const MatrixNormSpec& m) { return searches(m); });
    case MatrixNormSpec::Kind::GInd:
      return true;
    default:
      return false;
  }
}

Json witness_json(const std::variant<Vector, Matrix>& w) {
  if (const auto* m = std::get_if<Matrix>(&w)) return json_of(*m);
  return json_of(std::get<Vector>(w));
}

Json result_json(const ComputationResult& r) {
  return Json{{"value", r.value},
              {"exactness", to_string(r.exactness)},
              {"evaluations", r.evaluations},
              {"witness", witness_json(r.witness)}};
}

struct Run {
  explicit Run(std::string name) : command(std::move(name)) {}

  std::string command;
  Json arguments = Json::object();
  std::size_t dim = kDefaultDim;
  std::optional<OptBudget> budget;
  std::optional<OptBudget> default_budget;
  Json result;
  int exit_code = kOk;
};

void write_report(const Common& c, const Run& run, double elapsed) {
  if (c.report.empty()) return;
  Json header{{"tool", "normlab"},
              {"command", run.command},
              {"arguments", run.arguments},
              {"seed", c.seed},
              {"dim", run.dim},
              {"budget", run.budget ? json_of(*run.budget) : Json()},
              {"defaults",
               Json{{"dim", kDefaultDim},
                    {"budget", run.default_budget ? json_of(*run.default_budget) : Json()}}}};
  Json doc{{"schema_version", 1},
           {"header", std::move(header)},
           {"result", run.result},
           {"exit_code", run.exit_code},
           {"elapsed_seconds", elapsed}};
  std::ofstream f(c.report, std::ios::binary);
  if (!f) throw ParseError("cannot write report " + c.report);
  f << doc.dump(2) << "\n";
}

// ---------------------------------------------------------------- commands

struct EvalArgs {
  std::string norm, matrix, vector;
};

Run cmd_eval(const Common& c, const EvalArgs& a, std::ostream& out) {
  Run run("eval");
  const AnyNormSpec spec = parse_any_norm(a.norm);
  run.arguments["norm"] = std::visit([](const auto& s) { return json_of(s); }, spec);
  out << "norm       " << std::visit([](const auto& s) { return s.describe(); }, spec) << "\n";

  if (const auto* ms = std::get_if<MatrixNormSpec>(&spec)) {
    if (a.matrix.empty()) throw ParseError("eval: a matrix norm needs --matrix");
    const Matrix m = parse_matrix(read_file(a.matrix));
    run.dim = m.dim();
    run.arguments["matrix"] = json_of(m);
    run.default_budget = OptBudget::defaults(m.dim());
    run.budget = c.budget(*run.default_budget);
    ComputationResult r;
    if (ms->kind() == MatrixNormSpec::Kind::GInd) {
      r = gind_eval({ms->norm1(), ms->norm2()}, m, *run.budget);
    } else {
      r.value = mnorm_eval(*ms, m, *run.budget);
      r.witness = m;
      r.exactness = searches(*ms) ? Exactness::LowerBound : Exactness::ExactClosedForm;
    }
    run.result = result_json(r);
    out << "value      " << fmt(r.value) << "\nexactness  " << to_string(r.exactness) << "\n";
    return run;
  }

  const auto& vs = std::get<VectorNormSpec>(spec);
  if (a.vector.empty()) throw ParseError("eval: a vector norm needs --vector");
  const Vector x = parse_vector(a.vector);
  run.dim = x.dim();
  run.arguments["vector"] = json_of(x);
  ComputationResult r;
  if (vs.kind() == VectorNormSpec::Kind::Extracted && vs.role() == ExtractionRole::Norm1) {
    run.budget = vs.budget();
    r = evaluate_extracted_norm1(vs.source(), x, vs.budget());
  } else {
    r.value = vnorm_eval(vs, x);
    r.witness = x;
    r.exactness = searches(vs) ? Exactness::LowerBound : Exactness::ExactClosedForm;
  }
  run.result = result_json(r);
  out << "value      " << fmt(r.value) << "\nexactness  " << to_string(r.exactness) << "\n";
  return run;
}

struct PairArgs {
  std::string norm1, norm2, matrix;
};

Run cmd_gind(const Common& c, const PairArgs& a, std::ostream& out) {
  Run run("gind");
  const GIndPair pair{parse_vector_norm(a.norm1), parse_vector_norm(a.norm2)};
  const Matrix m = parse_matrix(read_file(a.matrix));
  run.dim = m.dim();
  run.arguments = Json{{"norm1", json_of(pair.norm1)},
                       {"norm2", json_of(pair.norm2)},
                       {"matrix", json_of(m)}};
  run.default_budget = OptBudget::defaults(m.dim());
  run.budget = c.budget(*run.default_budget);
  const ComputationResult r = gind_eval(pair, m, *run.budget);
  run.result = result_json(r);
  out << "pair       " << pair.describe() << "\n"
      << "value      " << fmt(r.value) << "\n"
      << "exactness  " << to_string(r.exactness) << "\n"
      << "witness x  (" << vector_text(r.vector_witness()) << ")\n";
  return run;
}

Run cmd_chain(const Common& c, const PairArgs& a, std::ostream& out) {
  Run run("chain");
  const GIndPair pair{parse_vector_norm(a.norm1), parse_vector_norm(a.norm2)};
  const Matrix m = parse_matrix(read_file(a.matrix));
  run.dim = m.dim();
  run.arguments = Json{{"norm1", json_of(pair.norm1)},
                       {"norm2", json_of(pair.norm2)},
                       {"matrix", json_of(m)}};
  run.default_budget = OptBudget::defaults(m.dim());
  run.budget = c.budget(*run.default_budget);
  const ChainReport r = chain_compare(pair, m, *run.budget);
  run.result = Json{{"v21", r.v21},
                    {"v11", r.v11},
                    {"v22", r.v22},
                    {"v12", r.v12},
                    {"chain_holds", r.chain_holds},
                    {"slack", r.slack}};
  if (!r.chain_holds) {
    run.result["witness"] = json_of(m);
    run.exit_code = kMathFail;
  }
  out << "pair         " << pair.describe() << "\n"
      << "v21 (2 -> 1) " << fmt(r.v21) << "\n"
      << "v11 (1 -> 1) " << fmt(r.v11) << "\n"
      << "v22 (2 -> 2) " << fmt(r.v22) << "\n"
      << "v12 (1 -> 2) " << fmt(r.v12) << "\n"
      << "chain        " << (r.chain_holds ? "holds" : "violated") << " (slack " << fmt(r.slack)
      << ")\n";
  return run;
}

struct ExtractArgs {
  std::string norm, at;
};

Run cmd_extract(const Common& c, const ExtractArgs& a, std::ostream& out) {
  Run run("extract");
  const MatrixNormSpec source = parse_matrix_norm(a.norm);
  run.dim = c.dim;
  run.arguments["norm"] = json_of(source);
  run.default_budget = OptBudget::nested(c.dim);
  run.budget = c.budget(*run.default_budget);
  const ExtractionResult ext = extract(source, *run.budget);

  std::vector<Vector> points;
  for (std::size_t j = 0; j < c.dim; ++j) points.push_back(Vector::basis(c.dim, j));
  points.push_back(Vector::ones(c.dim));
  if (!a.at.empty()) {
    Vector x = parse_vector(a.at);
    if (x.dim() != c.dim) throw DimensionError("extract: --at has the wrong dimension");
    run.arguments["at"] = json_of(x);
    points.push_back(std::move(x));
  }

  out << "source     " << source.describe() << "\nnorm1      " << ext.norm1.describe()
      << "  (lower bound)\nnorm2      " << ext.norm2.describe() << "  (exact)\n";
  Json evals = Json::array();
  for (const auto& x : points) {
    const double v1 = vnorm_eval(ext.norm1, x);
    const double v2 = vnorm_eval(ext.norm2, x);
    evals.push_back(Json{{"x", json_of(x)}, {"norm1", v1}, {"norm2", v2}});
    out << "  x = (" << vector_text(x) << ")  norm1 " << fmt(v1) << "  norm2 " << fmt(v2) << "\n";
  }
  run.result = Json{{"norm1", json_of(ext.norm1)},
                    {"norm2", json_of(ext.norm2)},
                    {"evaluations", std::move(evals)}};
  return run;
}

struct ProbeArgs {
  std::string norm;
  int trials = 100;
};

Run cmd_probe(const Common& c, const ProbeArgs& a, std::ostream& out) {
  Run run("probe-minimality");
  const MatrixNormSpec source = parse_matrix_norm(a.norm);
  run.dim = c.dim;
  run.arguments = Json{{"norm", json_of(source)}, {"trials", a.trials}};
  run.default_budget = OptBudget::nested(c.dim);
  run.budget = c.budget(*run.default_budget);
  RandomStream rng(c.seed);
  const ProbeReport p = minimality_probe(source, c.dim, a.trials, *run.budget, rng);
  run.result = Json{{"verdict", to_string(p.verdict)},
                    {"max_gap_ratio", p.max_gap_ratio},
                    {"witness", json_of(p.witness)},
                    {"upper_ratio", p.upper_ratio},
                    {"upper_witness", json_of(p.upper_witness)},
                    {"trials", p.trials}};
  out << "norm           " << source.describe() << "\n"
      << "verdict        " << to_string(p.verdict) << "\n"
      << "max_gap_ratio  " << fmt(p.max_gap_ratio) << "\n"
      << "witness:\n";
  print_matrix(out, "  ", p.witness);
  out << "upper_ratio    " << fmt(p.upper_ratio) << "\n"
      << "matrices       " << p.trials << "\n";
  if (p.upper_ratio > 1.0 + kUpperBoundTol) {
    // The reconstruction can never exceed N; this is an optimizer defect.
    run.exit_code = kMathFail;
    out << "upper-bound law violated at:\n";
    print_matrix(out, "  ", p.upper_witness);
  }
  return run;
}

struct VerifyArgs {
  std::string suite;
  int trials = 0;
  std::string norm, norm1, norm2, norm3, norm4;
};

Run cmd_verify(const Common& c, const VerifyArgs& a, CLI::App* sub, std::ostream& out,
               std::ostream& err) {
  Run run("verify");
  run.dim = c.dim;
  run.arguments["suite"] = a.suite;
  const bool trials_given = sub->get_option("--trials")->count() > 0;
  auto vnorm_or = [](const std::string& text, VectorNormSpec fallback) {
    return text.empty() ? fallback : parse_vector_norm(text);
  };
  RandomStream rng(c.seed);
  SuiteReport rep;

  if (a.suite == "lemma21") {
    const GIndPair pair{vnorm_or(a.norm1, linf()), vnorm_or(a.norm2, l1())};
    const int trials = trials_given ? a.trials : 1000;
    run.arguments["norm1"] = json_of(pair.norm1);
    run.arguments["norm2"] = json_of(pair.norm2);
    run.arguments["trials"] = trials;
    run.default_budget = OptBudget::defaults(c.dim);
    run.budget = c.budget(*run.default_budget);
    rep = verify_submultiplicativity(pair, c.dim, trials, rng, run.budget);
  } else if (a.suite == "lemma22") {
    const GIndPair pa{vnorm_or(a.norm1, VectorNormSpec::scaled(3.0, linf())),
                      vnorm_or(a.norm2, VectorNormSpec::scaled(6.0, l2()))};
    const GIndPair pb{vnorm_or(a.norm3, linf()), vnorm_or(a.norm4, VectorNormSpec::scaled(2.0, l2()))};
    const int trials = trials_given ? a.trials : 100;
    run.arguments["norm1"] = json_of(pa.norm1);
    run.arguments["norm2"] = json_of(pa.norm2);
    run.arguments["norm3"] = json_of(pb.norm1);
    run.arguments["norm4"] = json_of(pb.norm2);
    run.arguments["trials"] = trials;
    run.default_budget = OptBudget::defaults(c.dim);
    run.budget = c.budget(*run.default_budget);
    rep = verify_scaling_uniqueness(pa, pb, c.dim, trials, rng, run.budget);
  } else if (a.suite == "theorem23") {
    const MatrixNormSpec source =
        a.norm.empty() ? MatrixNormSpec::spectral() : parse_matrix_norm(a.norm);
    const int trials = trials_given ? a.trials : 20;
    run.arguments["norm"] = json_of(source);
    run.arguments["trials"] = trials;
    run.default_budget = OptBudget::nested(c.dim);
    run.budget = c.budget(*run.default_budget);
    rep = verify_extraction(source, c.dim, trials, *run.budget, rng);
  } else {
    // The demo suite fixes its own dimensions and budgets.
    if (c.dim_opt->count() || c.multistarts_opt->count() || c.max_iters_opt->count() ||
        c.samples_opt->count() || c.step_init_opt->count() || c.tol_opt->count() || trials_given) {
      err << "note: paper-demos ignores --dim, --trials and --budget-* (fixed demo settings)\n";
    }
    rep = demo_suite(c.seed);
  }
  rep.suite_name = a.suite;
  run.result = json_of(rep);
  if (rep.overall() == CaseStatus::Fail) run.exit_code = kMathFail;

  out << "suite " << a.suite << " (seed " << c.seed << "): " << to_string(rep.overall()) << "\n";
  for (const auto& cs : rep.cases) {
    out << "[" << to_string(cs.status) << "] " << cs.description << "\n";
    for (const auto& [name, v] : cs.values) out << "    " << name << " = " << fmt(v) << "\n";
    if (cs.status != CaseStatus::Pass)
      for (const auto& w : cs.witnesses) print_witness(out, w.name, w.value);
  }
  return run;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matrix norm laboratory: g-ind norms, extraction, minimality probes.", "normlab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "normlab 0.1.0");

  std::function<Run()> action;
  Common* chosen = nullptr;  // options of the subcommand that ran

  EvalArgs eval_args;
  CLI::App* eval = app.add_subcommand("eval", "evaluate a vector or matrix norm");
  eval->add_option("--norm", eval_args.norm, "norm (shorthand or JSON)")->required();
  auto* mopt = eval->add_option("--matrix", eval_args.matrix, "matrix file (CSV or JSON)");
  auto* vopt = eval->add_option("--vector", eval_args.vector, "comma-separated complex entries");
  mopt->excludes(vopt);
  Common eval_common;
  eval_common.attach(eval);
  eval->callback([&] {
    chosen = &eval_common;
    action = [&] { return cmd_eval(eval_common, eval_args, out); };
  });

  PairArgs gind_args;
  CLI::App* gind = app.add_subcommand("gind", "generalized induced norm of a matrix");
  gind->add_option("--norm1", gind_args.norm1, "domain vector norm")->required();
  gind->add_option("--norm2", gind_args.norm2, "codomain vector norm")->required();
  gind->add_option("--matrix", gind_args.matrix, "matrix file (CSV or JSON)")->required();
  Common gind_common;
  gind_common.attach(gind);
  gind->callback([&] {
    chosen = &gind_common;
    action = [&] { return cmd_gind(gind_common, gind_args, out); };
  });

  ExtractArgs extract_args;
  CLI::App* ext = app.add_subcommand("extract", "vector norms extracted from a matrix norm");
  ext->add_option("--norm", extract_args.norm, "matrix norm (shorthand or JSON)")->required();
  ext->add_option("--at", extract_args.at, "extra evaluation point");
  Common ext_common;
  ext_common.attach(ext);
  ext->callback([&] {
    chosen = &ext_common;
    action = [&] { return cmd_extract(ext_common, extract_args, out); };
  });

  ProbeArgs probe_args;
  CLI::App* probe = app.add_subcommand("probe-minimality", "search for a non-minimality gap");
  probe->add_option("--norm", probe_args.norm, "matrix norm (shorthand or JSON)")->required();
  probe->add_option("--trials", probe_args.trials, "random matrices (default 100)")
      ->check(CLI::PositiveNumber);
  Common probe_common;
  probe_common.attach(probe);
  probe->callback([&] {
    chosen = &probe_common;
    action = [&] { return cmd_probe(probe_common, probe_args, out); };
  });

  PairArgs chain_args;
  CLI::App* chain = app.add_subcommand("chain", "the four operator norms of a pair");
  chain->add_option("--norm1", chain_args.norm1, "first vector norm")->required();
  chain->add_option("--norm2", chain_args.norm2, "second vector norm")->required();
  chain->add_option("--matrix", chain_args.matrix, "matrix file (CSV or JSON)")->required();
  Common chain_common;
  chain_common.attach(chain);
  chain->callback([&] {
    chosen = &chain_common;
    action = [&] { return cmd_chain(chain_common, chain_args, out); };
  });

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", verify_args.suite, "lemma21: submultiplicativity vs dominance; lemma22: common-scale uniqueness; "
                    "theorem23: extraction round trip and probe; paper-demos: worked examples")
      ->required()
      ->check(CLI::IsMember({"lemma21", "lemma22", "theorem23", "paper-demos"}));
  verify->add_option("--trials", verify_args.trials, "random trials")->check(CLI::PositiveNumber);
  verify->add_option("--norm", verify_args.norm, "matrix norm for theorem23 (default spectral)");
  verify->add_option("--norm1", verify_args.norm1, "pair norm1 (lemma21, lemma22 pair A)");
  verify->add_option("--norm2", verify_args.norm2, "pair norm2 (lemma21, lemma22 pair A)");
  verify->add_option("--norm3", verify_args.norm3, "lemma22 pair B norm1");
  verify->add_option("--norm4", verify_args.norm4, "lemma22 pair B norm2");
  Common verify_common;
  verify_common.attach(verify);
  verify->callback([&] {
    chosen = &verify_common;
    action = [&] { return cmd_verify(verify_common, verify_args, verify, out, err); };
  });

  std::vector<const char*> argv{"normlab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const auto t0 = std::chrono::steady_clock::now();
    Run run = action();
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    write_report(*chosen, run, elapsed);
    return run.exit_code;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << "\n";
    return kNoConvergence;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kNoConvergence;
  }
}

}  // namespace normlab
