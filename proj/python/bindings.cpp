#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "normlab/cli_io.hpp"
#include "normlab/error.hpp"
#include "normlab/extraction.hpp"
#include "normlab/gind_engine.hpp"
#include "normlab/matrix_norms.hpp"
#include "normlab/vector_norms.hpp"
#include "normlab/verification.hpp"

namespace py = pybind11;
using namespace normlab;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

Matrix to_matrix(const ComplexArray& arr) {
  if (arr.ndim() != 2 || arr.shape(0) != arr.shape(1) || arr.shape(0) == 0) {
    throw DimensionError("expected a non-empty square 2-d array");
  }
  const auto n = static_cast<std::size_t>(arr.shape(0));
  Matrix a(n);
  auto view = arr.unchecked<2>();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = view(i, j);
  return a;
}

Vector to_vector(const ComplexArray& arr) {
  if (arr.ndim() != 1 || arr.shape(0) == 0) {
    throw DimensionError("expected a non-empty 1-d array");
  }
  Vector x(static_cast<std::size_t>(arr.shape(0)));
  auto view = arr.unchecked<1>();
  for (std::size_t i = 0; i < x.dim(); ++i) x[i] = view(i);
  return x;
}

py::array_t<Complex> from_matrix(const Matrix& a) {
  const auto n = static_cast<py::ssize_t>(a.dim());
  py::array_t<Complex> out({n, n});
  auto view = out.mutable_unchecked<2>();
  for (py::ssize_t i = 0; i < n; ++i)
    for (py::ssize_t j = 0; j < n; ++j) view(i, j) = a(i, j);
  return out;
}

py::array_t<Complex> from_vector(const Vector& x) {
  py::array_t<Complex> out(static_cast<py::ssize_t>(x.dim()));
  auto view = out.mutable_unchecked<1>();
  for (std::size_t i = 0; i < x.dim(); ++i) view(static_cast<py::ssize_t>(i)) = x[i];
  return out;
}

py::object from_witness(const std::variant<Vector, Matrix>& w) {
  if (const auto* v = std::get_if<Vector>(&w)) return from_vector(*v);
  return from_matrix(std::get<Matrix>(w));
}

OptBudget budget_or(const std::optional<OptBudget>& budget, std::size_t n) {
  return budget ? *budget : OptBudget::defaults(n);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Vector norms, matrix norms and generalized induced norms on C^n";
  m.attr("__version__") = "0.1.0";

  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<SpecError>(m, "SpecError", PyExc_ValueError);
  py::register_exception<HomogeneityError>(m, "HomogeneityError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<OptBudget>(m, "OptBudget")
      .def(py::init([](int multistarts, int max_iters, int samples, double step_init,
                       double tol, std::uint64_t seed) {
             OptBudget b{multistarts, max_iters, samples, step_init, tol, seed};
             b.validate();
             return b;
           }),
           py::arg("multistarts") = 16, py::arg("max_iters") = 400, py::arg("samples") = 128,
           py::arg("step_init") = 0.5, py::arg("tol") = 1e-7, py::arg("seed") = 0)
      .def_readwrite("multistarts", &OptBudget::multistarts)
      .def_readwrite("max_iters", &OptBudget::max_iters)
      .def_readwrite("samples", &OptBudget::samples)
      .def_readwrite("step_init", &OptBudget::step_init)
      .def_readwrite("tol", &OptBudget::tol)
      .def_readwrite("seed", &OptBudget::seed)
      .def_static("defaults", &OptBudget::defaults, py::arg("n"), py::arg("seed") = 0)
      .def_static("nested", &OptBudget::nested, py::arg("n"), py::arg("seed") = 0)
      .def(py::self == py::self)
      .def("__repr__", [](const OptBudget& b) {
        return "OptBudget(multistarts=" + std::to_string(b.multistarts) +
               ", max_iters=" + std::to_string(b.max_iters) +
               ", samples=" + std::to_string(b.samples) + ")";
      });

  py::class_<VectorNormSpec>(m, "VectorNormSpec")
      .def_static("lp", &VectorNormSpec::lp, py::arg("p"))
      .def_static("scaled", &VectorNormSpec::scaled, py::arg("gamma"), py::arg("inner"))
      .def_static("max_of", &VectorNormSpec::max_of, py::arg("members"))
      .def_static("weighted_lp", &VectorNormSpec::weighted_lp, py::arg("weights"), py::arg("p"))
      .def_static(
          "extracted",
          [](int role, const MatrixNormSpec& source, const OptBudget& budget) {
            if (role != 1 && role != 2) throw SpecError("role must be 1 or 2");
            return VectorNormSpec::extracted(static_cast<ExtractionRole>(role), source, budget);
          },
          py::arg("role"), py::arg("source"), py::arg("budget"))
      .def_static("parse", &parse_vector_norm, py::arg("text"))
      .def_property_readonly("dim", &VectorNormSpec::dim)
      .def("describe", &VectorNormSpec::describe)
      .def("to_json", [](const VectorNormSpec& s) { return to_json(s); })
      .def("__call__",
           [](const VectorNormSpec& s, const ComplexArray& x) { return vnorm_eval(s, to_vector(x)); })
      .def(py::self == py::self)
      .def("__repr__", [](const VectorNormSpec& s) { return "VectorNormSpec(" + s.describe() + ")"; });

  py::class_<MatrixNormSpec>(m, "MatrixNormSpec")
      .def_static("entrywise_sum", &MatrixNormSpec::entrywise_sum)
      .def_static("entrywise_max", &MatrixNormSpec::entrywise_max)
      .def_static("max_col_sum", &MatrixNormSpec::max_col_sum)
      .def_static("max_row_sum", &MatrixNormSpec::max_row_sum)
      .def_static("spectral", &MatrixNormSpec::spectral)
      .def_static("max_of", &MatrixNormSpec::max_of, py::arg("members"))
      .def_static("scaled", &MatrixNormSpec::scaled, py::arg("gamma"), py::arg("inner"))
      .def_static("gind", &MatrixNormSpec::gind, py::arg("norm1"), py::arg("norm2"))
      .def_static("parse", &parse_matrix_norm, py::arg("text"))
      .def("describe", &MatrixNormSpec::describe)
      .def("to_json", [](const MatrixNormSpec& s) { return to_json(s); })
      .def(py::self == py::self)
      .def("__repr__", [](const MatrixNormSpec& s) { return "MatrixNormSpec(" + s.describe() + ")"; });

  m.def("l1", &l1);
  m.def("l2", &l2);
  m.def("linf", &linf);

  py::class_<ComputationResult>(m, "ComputationResult")
      .def_readonly("value", &ComputationResult::value)
      .def_property_readonly("exactness",
                             [](const ComputationResult& r) { return to_string(r.exactness); })
      .def_property_readonly("witness",
                             [](const ComputationResult& r) { return from_witness(r.witness); })
      .def_readonly("evaluations", &ComputationResult::evaluations)
      .def("__float__", [](const ComputationResult& r) { return r.value; })
      .def("__repr__", [](const ComputationResult& r) {
        return "ComputationResult(value=" + format_complex(r.value) + ", exactness=" +
               to_string(r.exactness) + ")";
      });

  m.def("parse_norm_spec", [](const std::string& text) -> py::object {
    auto spec = parse_norm_spec(text);
    if (const auto* v = std::get_if<VectorNormSpec>(&spec)) return py::cast(*v);
    return py::cast(std::get<MatrixNormSpec>(spec));
  }, py::arg("json_text"));
  m.def("parse_vector_norm", &parse_vector_norm, py::arg("text"));
  m.def("parse_matrix_norm", &parse_matrix_norm, py::arg("text"));
  m.def("parse_complex", &parse_complex, py::arg("literal"));
  m.def("format_complex", &format_complex, py::arg("z"));
  m.def("parse_matrix", [](const std::string& text) { return from_matrix(parse_matrix(text)); },
        py::arg("text"));
  m.def("parse_vector", [](const std::string& text) { return from_vector(parse_vector(text)); },
        py::arg("text"));

  m.def("vnorm_eval",
        [](const VectorNormSpec& s, const ComplexArray& x) { return vnorm_eval(s, to_vector(x)); },
        py::arg("spec"), py::arg("x"));
  m.def(
      "dual_norm",
      [](const VectorNormSpec& s, const ComplexArray& v, std::optional<OptBudget> budget) {
        Vector vec = to_vector(v);
        return dual_norm(s, vec, budget_or(budget, vec.dim()));
      },
      py::arg("spec"), py::arg("v"), py::arg("budget") = py::none());
  m.def(
      "sum_functional_alpha",
      [](const VectorNormSpec& s, std::size_t n, std::optional<OptBudget> budget) {
        return sum_functional_alpha(s, n, budget_or(budget, n));
      },
      py::arg("spec"), py::arg("n"), py::arg("budget") = py::none());
  m.def(
      "mnorm_eval",
      [](const MatrixNormSpec& s, const ComplexArray& a, std::optional<OptBudget> budget) {
        Matrix mat = to_matrix(a);
        return mnorm_eval(s, mat, budget_or(budget, mat.dim()));
      },
      py::arg("spec"), py::arg("a"), py::arg("budget") = py::none());
  m.def("spectral_norm", [](const ComplexArray& a) { return spectral_norm(to_matrix(a)); },
        py::arg("a"));
  m.def(
      "is_algebra_candidate",
      [](const MatrixNormSpec& s, std::size_t n) { return to_string(mnorm_is_algebra_candidate(s, n)); },
      py::arg("spec"), py::arg("n") = 2);

  py::class_<DominanceReport>(m, "DominanceReport")
      .def_readonly("dominated", &DominanceReport::dominated)
      .def_property_readonly("counterexample",
                             [](const DominanceReport& r) -> py::object {
                               if (!r.counterexample) return py::none();
                               return from_vector(*r.counterexample);
                             })
      .def_readonly("samples_used", &DominanceReport::samples_used)
      .def_readonly("max_ratio", &DominanceReport::max_ratio);
  m.def(
      "dominance_check",
      [](const VectorNormSpec& a, const VectorNormSpec& b, std::size_t n, int samples,
         std::uint64_t seed) {
        RandomStream rng(seed);
        return dominance_check(a, b, n, samples, rng);
      },
      py::arg("a"), py::arg("b"), py::arg("n"), py::arg("samples") = 256, py::arg("seed") = 0);

  py::class_<GIndPair>(m, "GIndPair")
      .def(py::init([](VectorNormSpec n1, VectorNormSpec n2) { return GIndPair{n1, n2}; }),
           py::arg("norm1"), py::arg("norm2"))
      .def_readonly("norm1", &GIndPair::norm1)
      .def_readonly("norm2", &GIndPair::norm2)
      .def("as_matrix_norm", &GIndPair::as_matrix_norm)
      .def("describe", &GIndPair::describe)
      .def("__repr__", [](const GIndPair& p) { return "GIndPair" + p.describe(); });

  m.def(
      "gind_eval",
      [](const GIndPair& pair, const ComplexArray& a, std::optional<OptBudget> budget,
         bool ascent_only) {
        Matrix mat = to_matrix(a);
        return gind_eval(pair, mat, budget_or(budget, mat.dim()),
                         ascent_only ? Strategy::AscentOnly : Strategy::Auto);
      },
      py::arg("pair"), py::arg("a"), py::arg("budget") = py::none(),
      py::arg("ascent_only") = false);

  py::class_<ChainReport>(m, "ChainReport")
      .def_readonly("v21", &ChainReport::v21)
      .def_readonly("v11", &ChainReport::v11)
      .def_readonly("v22", &ChainReport::v22)
      .def_readonly("v12", &ChainReport::v12)
      .def_readonly("chain_holds", &ChainReport::chain_holds)
      .def_readonly("slack", &ChainReport::slack);
  m.def(
      "chain_compare",
      [](const GIndPair& pair, const ComplexArray& a, std::optional<OptBudget> budget) {
        Matrix mat = to_matrix(a);
        return chain_compare(pair, mat, budget_or(budget, mat.dim()));
      },
      py::arg("pair"), py::arg("a"), py::arg("budget") = py::none());

  py::class_<ExtractionResult>(m, "ExtractionResult")
      .def_readonly("source", &ExtractionResult::source)
      .def_readonly("norm1", &ExtractionResult::norm1)
      .def_readonly("norm2", &ExtractionResult::norm2)
      .def_readonly("budget", &ExtractionResult::budget)
      .def("pair", &ExtractionResult::pair);
  m.def(
      "extract",
      [](const MatrixNormSpec& source, std::optional<OptBudget> budget) {
        return extract(source, budget ? *budget : OptBudget::nested(2));
      },
      py::arg("source"), py::arg("budget") = py::none());
  m.def(
      "evaluate_extracted_norm1",
      [](const MatrixNormSpec& source, const ComplexArray& x, std::optional<OptBudget> budget) {
        Vector vec = to_vector(x);
        return evaluate_extracted_norm1(source, vec, budget_or(budget, vec.dim()));
      },
      py::arg("source"), py::arg("x"), py::arg("budget") = py::none());
  m.def("column_replicate", [](const ComplexArray& x) { return from_matrix(column_replicate(to_vector(x))); },
        py::arg("x"));
  m.def("clear_extraction_cache", &clear_extraction_cache);

  py::class_<AlphaIdentityReport>(m, "AlphaIdentityReport")
      .def_readonly("lhs", &AlphaIdentityReport::lhs)
      .def_readonly("rhs", &AlphaIdentityReport::rhs)
      .def_readonly("holds", &AlphaIdentityReport::holds);
  m.def(
      "alpha_identity_check",
      [](const GIndPair& pair, const ComplexArray& x, std::optional<OptBudget> budget) {
        Vector vec = to_vector(x);
        return alpha_identity_check(pair, vec, budget_or(budget, vec.dim()));
      },
      py::arg("pair"), py::arg("x"), py::arg("budget") = py::none());

  py::class_<ProbeReport>(m, "ProbeReport")
      .def_readonly("max_gap_ratio", &ProbeReport::max_gap_ratio)
      .def_property_readonly("witness", [](const ProbeReport& r) { return from_matrix(r.witness); })
      .def_readonly("upper_ratio", &ProbeReport::upper_ratio)
      .def_readonly("trials", &ProbeReport::trials)
      .def_property_readonly("verdict", [](const ProbeReport& r) { return to_string(r.verdict); });
  m.def(
      "minimality_probe",
      [](const MatrixNormSpec& source, std::size_t n, int trials, std::optional<OptBudget> budget,
         std::uint64_t seed) {
        RandomStream rng(seed);
        return minimality_probe(source, n, trials, budget ? *budget : OptBudget::nested(n), rng);
      },
      py::arg("source"), py::arg("n") = 2, py::arg("trials") = 100, py::arg("budget") = py::none(),
      py::arg("seed") = 0);

  py::class_<SuiteCase>(m, "SuiteCase")
      .def_readonly("description", &SuiteCase::description)
      .def_property_readonly("status", [](const SuiteCase& c) { return to_string(c.status); })
      .def_property_readonly("values",
                             [](const SuiteCase& c) {
                               py::dict d;
                               for (const auto& [k, v] : c.values) d[py::str(k)] = v;
                               return d;
                             })
      .def_property_readonly("witnesses", [](const SuiteCase& c) {
        py::dict d;
        for (const auto& w : c.witnesses) d[py::str(w.name)] = from_witness(w.value);
        return d;
      });

  py::class_<SuiteReport>(m, "SuiteReport")
      .def_readonly("suite_name", &SuiteReport::suite_name)
      .def_readonly("cases", &SuiteReport::cases)
      .def_readonly("seed", &SuiteReport::seed)
      .def_readonly("elapsed_seconds", &SuiteReport::elapsed_seconds)
      .def_property_readonly("status", [](const SuiteReport& r) { return to_string(r.overall()); })
      .def("to_json", [](const SuiteReport& r) { return suite_report_json(r); });

  m.def(
      "verify_submultiplicativity",
      [](const GIndPair& pair, std::size_t n, int trials, std::uint64_t seed,
         std::optional<OptBudget> budget) {
        RandomStream rng(seed);
        return verify_submultiplicativity(pair, n, trials, rng, budget);
      },
      py::arg("pair"), py::arg("n") = 2, py::arg("trials") = 1000, py::arg("seed") = 0,
      py::arg("budget") = py::none());
  m.def(
      "verify_scaling_uniqueness",
      [](const GIndPair& a, const GIndPair& b, std::size_t n, int trials, std::uint64_t seed,
         std::optional<OptBudget> budget) {
        RandomStream rng(seed);
        return verify_scaling_uniqueness(a, b, n, trials, rng, budget);
      },
      py::arg("pair_a"), py::arg("pair_b"), py::arg("n") = 2, py::arg("trials") = 100,
      py::arg("seed") = 0, py::arg("budget") = py::none());
  m.def(
      "verify_extraction",
      [](const MatrixNormSpec& source, std::size_t n, int trials, std::optional<OptBudget> budget,
         std::uint64_t seed) {
        RandomStream rng(seed);
        return verify_extraction(source, n, trials, budget ? *budget : OptBudget::nested(n), rng);
      },
      py::arg("source"), py::arg("n") = 2, py::arg("trials") = 20, py::arg("budget") = py::none(),
      py::arg("seed") = 0);
  m.def("demo_suite", &demo_suite, py::arg("seed") = 0);
}
