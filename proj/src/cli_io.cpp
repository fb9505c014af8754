#include "normlab/cli_io.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <string>

#include "json_io.hpp"
#include "normlab/error.hpp"

namespace normlab {

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail_at(const std::string& pointer, const std::string& message) {
  throw ParseError((pointer.empty() ? std::string("/") : pointer) + ": " + message);
}

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // e.what() reads "[json.exception.parse_error.101] parse error at line L, column C: ..."
    std::string msg = e.what();
    if (auto pos = msg.find("] "); pos != std::string::npos) msg = msg.substr(pos + 2);
    throw ParseError("JSON " + msg);
  }
}

// Strict real-number grammar: [+-] digits [. digits] [e [+-] digits], no
// inf/nan. Returns nullopt if `s` is not entirely such a number.
std::optional<double> parse_real(std::string_view s) {
  if (s.empty()) return std::nullopt;
  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty() || !(std::isdigit(static_cast<unsigned char>(s.front())) || s.front() == '.'))
    return std::nullopt;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return negative ? -v : v;
}

// ---------------------------------------------------------------- norm specs

const Json& require(const Json& j, const char* key, const std::string& ptr) {
  auto it = j.find(key);
  if (it == j.end()) fail_at(ptr, std::string("missing field \"") + key + "\"");
  return *it;
}

double number_at(const Json& j, const std::string& ptr) {
  if (!j.is_number()) fail_at(ptr, "expected a number");
  return j.get<double>();
}

void allow_fields(const Json& j, std::initializer_list<const char*> keys, const std::string& ptr) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : keys) known = known || it.key() == k;
    if (!known) fail_at(ptr + "/" + it.key(), "unexpected field");
  }
}

OptBudget budget_from(const Json& j, const std::string& ptr) {
  if (!j.is_object()) fail_at(ptr, "expected an object");
  allow_fields(j, {"multistarts", "max_iters", "samples", "step_init", "tol", "seed"}, ptr);
  OptBudget b = OptBudget::nested(2);
  auto int_field = [&](const char* key, int& dst) {
    if (auto it = j.find(key); it != j.end()) {
      if (!it->is_number_integer()) fail_at(ptr + "/" + key, "expected an integer");
      dst = it->get<int>();
    }
  };
  int_field("multistarts", b.multistarts);
  int_field("max_iters", b.max_iters);
  int_field("samples", b.samples);
  if (auto it = j.find("step_init"); it != j.end()) b.step_init = number_at(*it, ptr + "/step_init");
  if (auto it = j.find("tol"); it != j.end()) b.tol = number_at(*it, ptr + "/tol");
  if (auto it = j.find("seed"); it != j.end()) {
    if (!it->is_number_unsigned()) fail_at(ptr + "/seed", "expected a non-negative integer");
    b.seed = it->get<std::uint64_t>();
  }
  try {
    b.validate();
  } catch (const SpecError& e) {
    fail_at(ptr, e.what());
  }
  return b;
}

AnyNormSpec spec_from(const Json& j, const std::string& ptr);

VectorNormSpec vector_from(const Json& j, const std::string& ptr) {
  AnyNormSpec s = spec_from(j, ptr);
  if (auto* v = std::get_if<VectorNormSpec>(&s)) return *v;
  fail_at(ptr, "expected a vector norm, got the matrix norm " +
                   std::get<MatrixNormSpec>(s).describe());
}

MatrixNormSpec matrix_from(const Json& j, const std::string& ptr) {
  AnyNormSpec s = spec_from(j, ptr);
  if (auto* m = std::get_if<MatrixNormSpec>(&s)) return *m;
  fail_at(ptr, "expected a matrix norm, got the vector norm " +
                   std::get<VectorNormSpec>(s).describe());
}

double p_from(const Json& j, const std::string& ptr) {
  if (j.is_string() && j.get<std::string>() == "inf") return std::numeric_limits<double>::infinity();
  if (!j.is_number()) fail_at(ptr, "expected a number or \"inf\"");
  return j.get<double>();
}

AnyNormSpec spec_from(const Json& j, const std::string& ptr) {
  if (!j.is_object()) fail_at(ptr, "expected an object");
  const Json& kind_node = require(j, "kind", ptr);
  if (!kind_node.is_string()) fail_at(ptr + "/kind", "expected a string");
  const std::string kind = kind_node.get<std::string>();

  try {
    if (kind == "lp") {
      allow_fields(j, {"kind", "p"}, ptr);
      const double p = p_from(require(j, "p", ptr), ptr + "/p");
      try {
        return VectorNormSpec::lp(p);
      } catch (const SpecError& e) {
        fail_at(ptr + "/p", e.what());
      }
    }
    if (kind == "weighted-lp") {
      allow_fields(j, {"kind", "p", "weights"}, ptr);
      const Json& w = require(j, "weights", ptr);
      if (!w.is_array()) fail_at(ptr + "/weights", "expected an array");
      std::vector<double> weights;
      for (std::size_t i = 0; i < w.size(); ++i)
        weights.push_back(number_at(w[i], ptr + "/weights/" + std::to_string(i)));
      return VectorNormSpec::weighted_lp(std::move(weights),
                                         p_from(require(j, "p", ptr), ptr + "/p"));
    }
    if (kind == "scaled") {
      allow_fields(j, {"kind", "gamma", "inner"}, ptr);
      const double gamma = number_at(require(j, "gamma", ptr), ptr + "/gamma");
      if (!(gamma > 0.0)) fail_at(ptr + "/gamma", "gamma <= 0: scale factor must be positive");
      AnyNormSpec inner = spec_from(require(j, "inner", ptr), ptr + "/inner");
      if (auto* v = std::get_if<VectorNormSpec>(&inner)) return VectorNormSpec::scaled(gamma, *v);
      return MatrixNormSpec::scaled(gamma, std::get<MatrixNormSpec>(inner));
    }
    if (kind == "maxof") {
      allow_fields(j, {"kind", "inner"}, ptr);
      const Json& list = require(j, "inner", ptr);
      if (!list.is_array()) fail_at(ptr + "/inner", "expected an array");
      if (list.empty()) fail_at(ptr + "/inner", "empty maxof: at least one member is required");
      std::vector<VectorNormSpec> vs;
      std::vector<MatrixNormSpec> ms;
      for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string at = ptr + "/inner/" + std::to_string(i);
        AnyNormSpec member = spec_from(list[i], at);
        if (auto* v = std::get_if<VectorNormSpec>(&member)) {
          if (!ms.empty()) fail_at(at, "maxof mixes vector and matrix norms");
          vs.push_back(*v);
        } else {
          if (!vs.empty()) fail_at(at, "maxof mixes vector and matrix norms");
          ms.push_back(std::get<MatrixNormSpec>(member));
        }
      }
      if (!vs.empty()) return VectorNormSpec::max_of(std::move(vs));
      return MatrixNormSpec::max_of(std::move(ms));
    }
    if (kind == "extracted") {
      allow_fields(j, {"kind", "role", "source", "budget"}, ptr);
      const Json& role = require(j, "role", ptr);
      if (!role.is_number_integer() || (role.get<int>() != 1 && role.get<int>() != 2))
        fail_at(ptr + "/role", "role must be 1 or 2");
      const MatrixNormSpec source = matrix_from(require(j, "source", ptr), ptr + "/source");
      OptBudget b = OptBudget::nested(2);
      if (auto it = j.find("budget"); it != j.end()) b = budget_from(*it, ptr + "/budget");
      return VectorNormSpec::extracted(
          role.get<int>() == 1 ? ExtractionRole::Norm1 : ExtractionRole::Norm2, source, b);
    }
    if (kind == "gind") {
      allow_fields(j, {"kind", "norm1", "norm2"}, ptr);
      return MatrixNormSpec::gind(vector_from(require(j, "norm1", ptr), ptr + "/norm1"),
                                  vector_from(require(j, "norm2", ptr), ptr + "/norm2"));
    }
    const std::pair<const char*, MatrixNormSpec (*)()> leaves[] = {
        {"sigma", &MatrixNormSpec::entrywise_sum},
        {"entrywise-max", &MatrixNormSpec::entrywise_max},
        {"maxcolsum", &MatrixNormSpec::max_col_sum},
        {"maxrowsum", &MatrixNormSpec::max_row_sum},
        {"spectral", &MatrixNormSpec::spectral},
    };
    for (const auto& [name, make] : leaves) {
      if (kind == name) {
        allow_fields(j, {"kind"}, ptr);
        return make();
      }
    }
  } catch (const SpecError& e) {
    fail_at(ptr, e.what());
  }
  fail_at(ptr + "/kind", "unknown kind \"" + kind + "\"");
}

Json p_json(double p) { return std::isinf(p) ? Json("inf") : Json(p); }

Json spec_json(const MatrixNormSpec& s);

Json spec_json(const VectorNormSpec& s) {
  using K = VectorNormSpec::Kind;
  switch (s.kind()) {
    case K::Lp:
      return Json{{"kind", "lp"}, {"p", p_json(s.p())}};
    case K::WeightedLp:
      return Json{{"kind", "weighted-lp"}, {"p", p_json(s.p())}, {"weights", s.weights()}};
    case K::Scaled:
      return Json{{"kind", "scaled"}, {"gamma", s.gamma()}, {"inner", spec_json(s.inner())}};
    case K::MaxOf: {
      Json list = Json::array();
      for (const auto& m : s.members()) list.push_back(spec_json(m));
      return Json{{"kind", "maxof"}, {"inner", std::move(list)}};
    }
    case K::Extracted:
      return Json{{"kind", "extracted"},
                  {"role", static_cast<int>(s.role())},
                  {"source", spec_json(s.source())},
                  {"budget", json_of(s.budget())}};
  }
  return Json();
}

Json spec_json(const MatrixNormSpec& s) {
  using K = MatrixNormSpec::Kind;
  switch (s.kind()) {
    case K::EntrywiseSum:
      return Json{{"kind", "sigma"}};
    case K::EntrywiseMax:
      return Json{{"kind", "entrywise-max"}};
    case K::MaxColSum:
      return Json{{"kind", "maxcolsum"}};
    case K::MaxRowSum:
      return Json{{"kind", "maxrowsum"}};
    case K::Spectral:
      return Json{{"kind", "spectral"}};
    case K::Scaled:
      return Json{{"kind", "scaled"}, {"gamma", s.gamma()}, {"inner", spec_json(s.inner())}};
    case K::MaxOf: {
      Json list = Json::array();
      for (const auto& m : s.members()) list.push_back(spec_json(m));
      return Json{{"kind", "maxof"}, {"inner", std::move(list)}};
    }
    case K::GInd:
      return Json{{"kind", "gind"}, {"norm1", spec_json(s.norm1())}, {"norm2", spec_json(s.norm2())}};
  }
  return Json();
}

// Shorthand: "<gamma>*<rest>" or a bare name.
template <class Spec, class Leaf>
Spec shorthand(std::string_view text, Leaf leaf, const char* what) {
  text = trim(text);
  if (auto star = text.find('*'); star != std::string_view::npos) {
    const auto gamma = parse_real(trim(text.substr(0, star)));
    if (!gamma) throw ParseError("bad scale factor in \"" + std::string(text) + "\"");
    try {
      return Spec::scaled(*gamma, shorthand<Spec>(text.substr(star + 1), leaf, what));
    } catch (const SpecError& e) {
      throw ParseError(e.what());
    }
  }
  if (auto s = leaf(text)) return *s;
  throw ParseError(std::string("unknown ") + what + " \"" + std::string(text) + "\"");
}

std::optional<VectorNormSpec> vector_leaf(std::string_view name) {
  if (name == "linf") return linf();
  if (name.size() > 1 && name.front() == 'l') {
    if (auto p = parse_real(name.substr(1))) {
      try {
        return VectorNormSpec::lp(*p);
      } catch (const SpecError& e) {
        throw ParseError(e.what());
      }
    }
  }
  return std::nullopt;
}

std::optional<MatrixNormSpec> matrix_leaf(std::string_view name) {
  if (name == "sigma") return MatrixNormSpec::entrywise_sum();
  if (name == "entrywise-max" || name == "m") return MatrixNormSpec::entrywise_max();
  if (name == "maxcolsum" || name == "C") return MatrixNormSpec::max_col_sum();
  if (name == "maxrowsum" || name == "R") return MatrixNormSpec::max_row_sum();
  if (name == "spectral" || name == "S") return MatrixNormSpec::spectral();
  return std::nullopt;
}

bool looks_like_json(std::string_view text) {
  text = trim(text);
  return !text.empty() && text.front() == '{';
}

}  // namespace

AnyNormSpec parse_norm_spec(std::string_view json_text) {
  return spec_from(parse_json_text(json_text), "");
}

VectorNormSpec parse_vector_norm(std::string_view text) {
  if (looks_like_json(text)) return vector_from(parse_json_text(text), "");
  return shorthand<VectorNormSpec>(text, vector_leaf, "vector norm");
}

MatrixNormSpec parse_matrix_norm(std::string_view text) {
  if (looks_like_json(text)) return matrix_from(parse_json_text(text), "");
  return shorthand<MatrixNormSpec>(text, matrix_leaf, "matrix norm");
}

std::string to_json(const VectorNormSpec& spec) { return spec_json(spec).dump(); }
std::string to_json(const MatrixNormSpec& spec) { return spec_json(spec).dump(); }

Json json_of(const VectorNormSpec& spec) { return spec_json(spec); }
Json json_of(const MatrixNormSpec& spec) { return spec_json(spec); }

Json json_of(const OptBudget& b) {
  return Json{{"multistarts", b.multistarts}, {"max_iters", b.max_iters},
              {"samples", b.samples},         {"step_init", b.step_init},
              {"tol", b.tol},                 {"seed", b.seed}};
}

// ---------------------------------------------------------------- numbers

Complex parse_complex(std::string_view literal) {
  const std::string_view s = trim(literal);
  auto bad = [&]() -> ParseError {
    return ParseError("malformed complex literal \"" + std::string(literal) + "\"");
  };
  if (s.empty()) throw bad();
  if (s.back() != 'i') {
    if (auto re = parse_real(s)) return {*re, 0.0};
    throw bad();
  }
  const std::string_view body = s.substr(0, s.size() - 1);
  // The imaginary part starts at the last sign that is not an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string_view re_text = split == std::string_view::npos ? "" : body.substr(0, split);
  const std::string_view im_text = split == std::string_view::npos ? body : body.substr(split);
  double re = 0.0;
  if (!re_text.empty()) {
    auto r = parse_real(re_text);
    if (!r) throw bad();
    re = *r;
  }
  double im = 0.0;
  if (im_text.empty() || im_text == "+") {
    im = 1.0;
  } else if (im_text == "-") {
    im = -1.0;
  } else {
    auto r = parse_real(im_text);
    if (!r) throw bad();
    im = *r;
  }
  return {re, im};
}

namespace {

std::string shortest(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ec == std::errc() ? ptr : buf);
}

}  // namespace

std::string format_complex(Complex z) {
  if (z.imag() == 0.0) return shortest(z.real());
  if (z.real() == 0.0) return shortest(z.imag()) + "i";
  std::string im = shortest(z.imag());
  if (im.front() != '-') im.insert(im.begin(), '+');
  return shortest(z.real()) + im + "i";
}

// ---------------------------------------------------------------- matrices

namespace {

Complex cell_from(const Json& j, const std::string& ptr) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_object()) fail_at(ptr, "expected a number or {\"re\", \"im\"}");
  allow_fields(j, {"re", "im"}, ptr);
  double re = 0.0, im = 0.0;
  if (auto it = j.find("re"); it != j.end()) re = number_at(*it, ptr + "/re");
  if (auto it = j.find("im"); it != j.end()) im = number_at(*it, ptr + "/im");
  return {re, im};
}

Matrix square_from(std::vector<std::vector<Complex>> rows) {
  if (rows.empty()) throw ParseError("empty matrix");
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != rows[0].size()) {
      throw ParseError("ragged rows: row " + std::to_string(r + 1) + " has " +
                       std::to_string(rows[r].size()) + " entries, row 1 has " +
                       std::to_string(rows[0].size()));
    }
  }
  if (rows.size() != rows[0].size()) {
    throw ParseError("matrix is not square: " + std::to_string(rows.size()) + " rows, " +
                     std::to_string(rows[0].size()) + " columns");
  }
  return Matrix::from_rows(rows);
}

std::vector<Complex> csv_cells(std::string_view line, std::size_t line_no) {
  std::vector<Complex> cells;
  std::size_t start = 0;
  for (std::size_t col = 1;; ++col) {
    const std::size_t comma = line.find(',', start);
    const std::string_view cell =
        line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    try {
      cells.push_back(parse_complex(cell));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ", column " + std::to_string(col) +
                       ": " + e.what());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

}  // namespace

Matrix parse_matrix(std::string_view text) {
  if (looks_like_json(text)) {
    const Json j = parse_json_text(text);
    allow_fields(j, {"rows"}, "");
    const Json& rows = require(j, "rows", "");
    if (!rows.is_array()) fail_at("/rows", "expected an array");
    std::vector<std::vector<Complex>> out;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const std::string at = "/rows/" + std::to_string(r);
      if (!rows[r].is_array()) fail_at(at, "expected an array");
      std::vector<Complex> row;
      for (std::size_t c = 0; c < rows[r].size(); ++c)
        row.push_back(cell_from(rows[r][c], at + "/" + std::to_string(c)));
      out.push_back(std::move(row));
    }
    return square_from(std::move(out));
  }

  std::vector<std::vector<Complex>> rows;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    const std::string_view line =
        text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    ++line_no;
    if (!trim(line).empty()) rows.push_back(csv_cells(line, line_no));
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return square_from(std::move(rows));
}

Vector parse_vector(std::string_view text) {
  std::vector<Complex> entries;
  if (looks_like_json(text)) {
    const Json j = parse_json_text(text);
    allow_fields(j, {"entries"}, "");
    const Json& list = require(j, "entries", "");
    if (!list.is_array()) fail_at("/entries", "expected an array");
    for (std::size_t k = 0; k < list.size(); ++k)
      entries.push_back(cell_from(list[k], "/entries/" + std::to_string(k)));
  } else {
    if (trim(text).empty()) throw ParseError("empty vector");
    entries = csv_cells(trim(text), 1);
  }
  if (entries.empty()) throw ParseError("empty vector");
  return Vector(std::move(entries));
}

// ---------------------------------------------------------------- reports

Json json_of(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json json_of(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(json_of(m(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", std::move(rows)}};
}

Json json_of(const Vector& v) {
  Json entries = Json::array();
  for (const auto& z : v) entries.push_back(json_of(z));
  return Json{{"entries", std::move(entries)}};
}

Json json_of(const Witness& w) {
  Json out{{"name", w.name}};
  if (const auto* m = std::get_if<Matrix>(&w.value)) {
    out["kind"] = "matrix";
    out["rows"] = json_of(*m)["rows"];
  } else {
    out["kind"] = "vector";
    out["entries"] = json_of(std::get<Vector>(w.value))["entries"];
  }
  return out;
}

Json json_of(const SuiteReport& report) {
  Json cases = Json::array();
  for (const auto& c : report.cases) {
    Json witnesses = Json::array();
    for (const auto& w : c.witnesses) witnesses.push_back(json_of(w));
    Json values = Json::object();
    for (const auto& [name, v] : c.values) values[name] = v;
    cases.push_back(Json{{"description", c.description},
                         {"status", to_string(c.status)},
                         {"witnesses", std::move(witnesses)},
                         {"values", std::move(values)}});
  }
  return Json{{"suite", report.suite_name},
              {"seed", report.seed},
              {"status", to_string(report.overall())},
              {"cases", std::move(cases)},
              {"elapsed_seconds", report.elapsed_seconds}};
}

std::string suite_report_json(const SuiteReport& report) { return json_of(report).dump(2); }

}  // namespace normlab
