#include "doctest.h"

#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <unistd.h>

#include "json.hpp"
#include "normlab/cli_io.hpp"
#include "normlab/error.hpp"
#include "oracles.hpp"

using namespace normlab;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("normlab_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  std::string file(const std::string& name, const std::string& contents) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << contents;
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string parse_error(const std::string& text) {
  try {
    parse_norm_spec(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

// Random spec trees of bounded depth covering every constructor.
VectorNormSpec random_vector_spec(std::mt19937_64& eng, int depth, std::size_t n);

MatrixNormSpec random_matrix_spec(std::mt19937_64& eng, int depth, std::size_t n) {
  const int pick = static_cast<int>(eng() % (depth > 0 ? 8 : 5));
  switch (pick) {
    case 0: return MatrixNormSpec::entrywise_sum();
    case 1: return MatrixNormSpec::entrywise_max();
    case 2: return MatrixNormSpec::max_col_sum();
    case 3: return MatrixNormSpec::max_row_sum();
    case 4: return MatrixNormSpec::spectral();
    case 5: return MatrixNormSpec::scaled(0.25 + static_cast<double>(eng() % 1000) / 7.0,
                                          random_matrix_spec(eng, depth - 1, n));
    case 6: {
      std::vector<MatrixNormSpec> ms;
      for (int k = 0, m = 1 + static_cast<int>(eng() % 3); k < m; ++k)
        ms.push_back(random_matrix_spec(eng, depth - 1, n));
      return MatrixNormSpec::max_of(ms);
    }
    default:
      return MatrixNormSpec::gind(random_vector_spec(eng, depth - 1, n), random_vector_spec(eng, depth - 1, n));
  }
}

VectorNormSpec random_vector_spec(std::mt19937_64& eng, int depth, std::size_t n) {
  const double ps[] = {1.0, 1.5, 2.0, 3.0, 0.1 + 1.0 / 3.0 + 1.0, oracle::kInf};
  const int pick = static_cast<int>(eng() % (depth > 0 ? 5 : 2));
  switch (pick) {
    case 0: return VectorNormSpec::lp(ps[eng() % 6]);
    case 1: {
      std::vector<double> w(n);
      for (double& x : w) x = 0.1 + static_cast<double>(eng() % 1000) / 13.0;
      return VectorNormSpec::weighted_lp(w, ps[eng() % 6]);
    }
    case 2: return VectorNormSpec::scaled(1e-3 + static_cast<double>(eng() % 1000) / 3.0,
                                          random_vector_spec(eng, depth - 1, n));
    case 3: {
      std::vector<VectorNormSpec> vs;
      for (int k = 0, m = 1 + static_cast<int>(eng() % 3); k < m; ++k)
        vs.push_back(random_vector_spec(eng, depth - 1, n));
      return VectorNormSpec::max_of(vs);
    }
    default: {
      const auto role = eng() % 2 == 0 ? ExtractionRole::Norm1 : ExtractionRole::Norm2;
      const OptBudget b{1 + static_cast<int>(eng() % 5), 10 + static_cast<int>(eng() % 100), 3, 0.25, 1e-6,
                        eng() % 1000};
      return VectorNormSpec::extracted(role, random_matrix_spec(eng, depth - 1, n), b);
    }
  }
}

// Replaces every leaf by its JSON type name; arrays keep only their first
// element's shape. Pins field names and nesting without pinning values.
nlohmann::ordered_json skeleton(const nlohmann::ordered_json& j) {
  using nlohmann::ordered_json;
  if (j.is_object()) {
    ordered_json out = ordered_json::object();
    for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = skeleton(it.value());
    return out;
  }
  if (j.is_array()) {
    ordered_json out = ordered_json::array();
    if (!j.empty()) out.push_back(skeleton(j.front()));
    return out;
  }
  if (j.is_number()) return "number";
  return j.type_name();
}

nlohmann::ordered_json without_timing(nlohmann::ordered_json j) {
  if (j.is_object()) {
    j.erase("elapsed_seconds");
    for (auto& [k, v] : j.items()) v = without_timing(v);
  } else if (j.is_array()) {
    for (auto& v : j) v = without_timing(v);
  }
  return j;
}

}  // namespace

TEST_SUITE("cli_io") {

TEST_CASE("norm spec documents") {
  CHECK(std::get<VectorNormSpec>(parse_norm_spec(R"({"kind":"lp","p":1})")) == l1());
  CHECK(std::get<VectorNormSpec>(parse_norm_spec(R"({"kind":"scaled","gamma":2.0,"inner":{"kind":"lp","p":2}})")) ==
        VectorNormSpec::scaled(2, l2()));
  CHECK(std::get<VectorNormSpec>(parse_norm_spec(R"({"kind":"lp","p":"inf"})")) == linf());
  CHECK(std::get<MatrixNormSpec>(parse_norm_spec(R"({"kind":"gind","norm1":{"kind":"lp","p":"inf"},"norm2":{"kind":"lp","p":1}})")) ==
        MatrixNormSpec::gind(linf(), l1()));
  CHECK(std::get<MatrixNormSpec>(parse_norm_spec(R"({"kind":"maxof","inner":[{"kind":"maxcolsum"},{"kind":"maxrowsum"}]})")) ==
        MatrixNormSpec::max_of({MatrixNormSpec::max_col_sum(), MatrixNormSpec::max_row_sum()}));
}

TEST_CASE("norm spec errors carry a locus") {
  CHECK(parse_error(R"({"kind":"lp","p":0.5})").find("p < 1") != std::string::npos);
  CHECK(parse_error(R"({"kind":"lp","p":0.5})").rfind("/p", 0) == 0);
  CHECK(parse_error(R"({"kind":"scaled","gamma":0,"inner":{"kind":"lp","p":2}})").find("/gamma") != std::string::npos);
  CHECK(parse_error(R"({"kind":"maxof","inner":[]})").find("empty maxof") != std::string::npos);
  const std::string unknown = parse_error(R"({"kind":"scaled","gamma":1,"inner":{"kind":"frobenius"}})");
  CHECK(unknown.find("/inner") != std::string::npos);
  CHECK(unknown.find("frobenius") != std::string::npos);
  CHECK(parse_error("{\"kind\":\n\"lp\",, }").find("line 2") != std::string::npos);
  CHECK_FALSE(parse_error(R"({"kind":"lp","p":2,"q":3})").empty());
  CHECK_FALSE(parse_error(R"({"kind":"maxof","inner":[{"kind":"lp","p":2},{"kind":"spectral"}]})").empty());
}

TEST_CASE("shorthand names") {
  CHECK(parse_vector_norm("l1") == l1());
  CHECK(parse_vector_norm("linf") == linf());
  CHECK(parse_vector_norm("l1.5") == VectorNormSpec::lp(1.5));
  CHECK(parse_vector_norm("2*l2") == VectorNormSpec::scaled(2, l2()));
  CHECK(parse_matrix_norm("sigma") == MatrixNormSpec::entrywise_sum());
  CHECK(parse_matrix_norm("m") == MatrixNormSpec::entrywise_max());
  CHECK(parse_matrix_norm("C") == MatrixNormSpec::max_col_sum());
  CHECK(parse_matrix_norm("R") == MatrixNormSpec::max_row_sum());
  CHECK(parse_matrix_norm("S") == MatrixNormSpec::spectral());
  CHECK(parse_matrix_norm("0.5*spectral") == MatrixNormSpec::scaled(0.5, MatrixNormSpec::spectral()));
  CHECK_THROWS_AS(parse_vector_norm("l0.5"), ParseError);
  CHECK_THROWS_AS(parse_vector_norm("lx"), ParseError);
  CHECK_THROWS_AS(parse_matrix_norm("frobenius"), ParseError);
  CHECK_THROWS_AS(parse_vector_norm("-2*l2"), ParseError);
}

TEST_CASE("print then parse is the identity on random spec trees") {
  std::mt19937_64 eng(71);
  for (int t = 0; t < 300; ++t) {
    const VectorNormSpec v = random_vector_spec(eng, 3, 2);
    CAPTURE(to_json(v));
    CHECK(std::get<VectorNormSpec>(parse_norm_spec(to_json(v))) == v);
    const MatrixNormSpec m = random_matrix_spec(eng, 3, 2);
    CAPTURE(to_json(m));
    CHECK(std::get<MatrixNormSpec>(parse_norm_spec(to_json(m))) == m);
  }
}

TEST_CASE("complex literals") {
  CHECK(parse_complex("1") == Complex(1, 0));
  CHECK(parse_complex(" -2.5e3 ") == Complex(-2500, 0));
  CHECK(parse_complex("3i") == Complex(0, 3));
  CHECK(parse_complex("-i") == Complex(0, -1));
  CHECK(parse_complex("i") == Complex(0, 1));
  CHECK(parse_complex("1+2i") == Complex(1, 2));
  CHECK(parse_complex("1-i") == Complex(1, -1));
  CHECK(parse_complex("1e-3-2E+2i") == Complex(1e-3, -200));
  CHECK(parse_complex("0.1") == Complex(0.1, 0));
  for (const char* bad : {"", "1+", "2j", "1+2", "1 + 2i", "abc", "1i2", "inf", "nan", "--1", "1++2i"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_complex(bad), ParseError);
  }
}

TEST_CASE("complex formatting round-trips bit for bit") {
  std::mt19937_64 eng(72);
  for (int t = 0; t < 2000; ++t) {
    double re, im;
    const std::uint64_t a = eng(), b = eng();
    std::memcpy(&re, &a, sizeof re);
    std::memcpy(&im, &b, sizeof im);
    if (!std::isfinite(re) || !std::isfinite(im)) continue;
    if (t % 3 == 0) im = 0.0;
    if (t % 5 == 0) re = 0.0;
    const Complex z(re, im);
    const Complex back = parse_complex(format_complex(z));
    CHECK(std::memcmp(&back, &z, sizeof z) == 0);
  }
}

TEST_CASE("matrix documents") {
  CHECK(parse_matrix("1,2\n3,4") == Matrix{{1, 2}, {3, 4}});
  CHECK(parse_matrix("1+1i,1-1i\n0,0\n") == Matrix{{Complex(1, 1), Complex(1, -1)}, {0, 0}});
  CHECK(parse_matrix("\n 1 , 2 \n\n3,4\n\n") == Matrix{{1, 2}, {3, 4}});
  CHECK(parse_matrix(R"({"rows":[[{"re":1,"im":0},2],[{"re":0,"im":-1},4]]})") ==
        Matrix{{1, 2}, {Complex(0, -1), 4}});
  auto error_of = [](const std::string& text) {
    try {
      parse_matrix(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(error_of("1,2\n3").find("ragged") != std::string::npos);
  CHECK(error_of("1,2,3\n4,5,6").find("not square") != std::string::npos);
  CHECK(error_of("1,2\n3,x").find("line 2, column 2") != std::string::npos);
  CHECK(error_of("").find("empty") != std::string::npos);
  CHECK_FALSE(error_of(R"({"rows":[[1,2],[3]]})").empty());
  CHECK_FALSE(error_of(R"({"rows":[[1,{"re":"a","im":0}]]})").empty());
}

TEST_CASE("matrix text round trip on random complex matrices") {
  oracle::Gen gen(73);
  for (int t = 0; t < 100; ++t) {
    const Matrix a = gen.matrix(static_cast<std::size_t>(gen.integer(1, 4)));
    std::string csv;
    for (std::size_t i = 0; i < a.dim(); ++i) {
      for (std::size_t j = 0; j < a.dim(); ++j) csv += (j ? "," : "") + format_complex(a(i, j));
      csv += "\n";
    }
    CHECK(parse_matrix(csv) == a);
  }
}

TEST_CASE("vector documents") {
  CHECK(parse_vector("1,2i,-3") == Vector{1, Complex(0, 2), -3});
  CHECK(parse_vector(R"({"entries":[1,{"re":0,"im":1}]})") == Vector{1, Complex(0, 1)});
  CHECK_THROWS_AS(parse_vector(""), ParseError);
}

TEST_CASE("eval command") {
  TempDir dir;
  const std::string a = dir.file("a.csv", "1,2\n3,4\n");
  const CliRun r = cli({"eval", "--norm", "spectral", "--matrix", a});
  CHECK(r.code == 0);
  CHECK(r.out.find("5.46498") != std::string::npos);
  const CliRun v = cli({"eval", "--norm", "l2", "--vector", "3,4"});
  CHECK(v.code == 0);
  CHECK(v.out.find('5') != std::string::npos);
}

TEST_CASE("exit codes") {
  TempDir dir;
  const std::string a = dir.file("a.csv", "1,2\n3,4\n");
  const std::string ragged = dir.file("r.csv", "1,2\n3\n");
  CHECK(cli({}).code == 2);
  CHECK(cli({"bogus"}).code == 2);
  CHECK(cli({"eval", "--norm", R"({"kind":"lp","p":0.5})", "--vector", "1,2"}).code == 2);
  CHECK(cli({"eval", "--norm", "spectral", "--matrix", ragged}).code == 2);
  CHECK(cli({"eval", "--norm", "spectral", "--matrix", dir.path("missing.csv")}).code == 2);
  CHECK(cli({"eval", "--norm", "spectral", "--matrix", a, "--dim", "9"}).code == 2);
  CHECK(cli({"verify", "--suite", "no-such-suite"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
  const CliRun chain_ok = cli({"chain", "--norm1", "linf", "--norm2", "l1", "--matrix", a});
  CHECK(chain_ok.code == 0);
  const CliRun chain_bad = cli({"chain", "--norm1", "l1", "--norm2", "linf", "--matrix", a});
  CHECK(chain_bad.code == 1);
  CHECK(chain_bad.out.find("violated") != std::string::npos);
}

TEST_CASE("probe command finds the Hadamard witness") {
  const CliRun r = cli({"probe-minimality", "--norm", "sigma", "--dim", "2", "--trials", "100", "--seed", "7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("gap_found") != std::string::npos);
  CHECK(r.out.find("0.7071") != std::string::npos);
}

TEST_CASE("gind and extract commands") {
  TempDir dir;
  const std::string j = dir.file("j.csv", "1,1\n1,1\n");
  const CliRun g = cli({"gind", "--norm1", "linf", "--norm2", "2*l2", "--matrix", j});
  CHECK(g.code == 0);
  CHECK(g.out.find("5.65685") != std::string::npos);
  const CliRun e = cli({"extract", "--norm", "maxcolsum", "--at", "1,2", "--budget-multistarts", "1",
                        "--budget-max-iters", "20", "--budget-samples", "4"});
  CHECK(e.code == 0);
  CHECK(e.out.find("norm1 3  norm2 3") != std::string::npos);
}

TEST_CASE("reports replay byte for byte apart from timing") {
  TempDir dir;
  const std::string p1 = dir.path("r1.json"), p2 = dir.path("r2.json");
  REQUIRE(cli({"verify", "--suite", "paper-demos", "--seed", "42", "--report", p1}).code == 0);
  REQUIRE(cli({"verify", "--suite", "paper-demos", "--seed", "42", "--report", p2}).code == 0);
  const auto a = without_timing(nlohmann::ordered_json::parse(slurp(p1)));
  const auto b = without_timing(nlohmann::ordered_json::parse(slurp(p2)));
  CHECK(a.dump() == b.dump());
  CHECK(a["schema_version"] == 1);
  CHECK(a["result"]["status"] == "pass");
}

TEST_CASE("report schema matches the golden skeletons") {
  TempDir dir;
  const std::string a = dir.file("a.csv", "1,2\n3,4\n");
  struct Golden {
    const char* file;
    std::vector<std::string> args;
  };
  const std::vector<Golden> cases{
      {"eval_report.json", {"eval", "--norm", "spectral", "--matrix", a}},
      {"gind_report.json", {"gind", "--norm1", "linf", "--norm2", "l1", "--matrix", a}},
      {"probe_report.json", {"probe-minimality", "--norm", "sigma", "--trials", "3"}},
      {"verify_report.json", {"verify", "--suite", "lemma22", "--trials", "5"}},
  };
  for (const Golden& g : cases) {
    CAPTURE(g.file);
    std::vector<std::string> args = g.args;
    const std::string out = dir.path(g.file);
    args.insert(args.end(), {"--report", out});
    REQUIRE(cli(args).code == 0);
    const auto got = skeleton(nlohmann::ordered_json::parse(slurp(out)));
    const std::string golden_path = std::string(NORMLAB_GOLDEN_DIR) + "/" + g.file;
    if (std::getenv("NORMLAB_UPDATE_GOLDEN")) std::ofstream(golden_path) << got.dump(2) << "\n";
    const auto want = nlohmann::ordered_json::parse(slurp(golden_path));
    CHECK(got.dump(2) == want.dump(2));
  }
}

}
