#include "doctest.h"

#include <cmath>

#include "normlab/error.hpp"
#include "normlab/matrix_norms.hpp"
#include "oracles.hpp"

using namespace normlab;

namespace {

MatrixNormSpec max_cr() {
  return MatrixNormSpec::max_of({MatrixNormSpec::max_col_sum(), MatrixNormSpec::max_row_sum()});
}

std::vector<MatrixNormSpec> catalog() {
  return {MatrixNormSpec::entrywise_sum(), MatrixNormSpec::entrywise_max(),
          MatrixNormSpec::max_col_sum(),   MatrixNormSpec::max_row_sum(),
          MatrixNormSpec::spectral(),      max_cr(),
          MatrixNormSpec::scaled(2.5, MatrixNormSpec::spectral())};
}

}  // namespace

TEST_SUITE("matrix_norms") {

TEST_CASE("catalog values on a small matrix") {
  const Matrix a{{1, 2}, {3, 4}};
  CHECK(mnorm_eval(MatrixNormSpec::entrywise_sum(), a) == 10.0);
  CHECK(mnorm_eval(MatrixNormSpec::entrywise_max(), a) == 4.0);
  CHECK(mnorm_eval(MatrixNormSpec::max_col_sum(), a) == 6.0);
  CHECK(mnorm_eval(MatrixNormSpec::max_row_sum(), a) == 7.0);
  const double s = std::sqrt((30.0 + std::sqrt(884.0)) / 2.0);
  CHECK(mnorm_eval(MatrixNormSpec::spectral(), a) == doctest::Approx(s).epsilon(1e-12));
  CHECK(mnorm_eval(MatrixNormSpec::spectral(), Matrix::identity(3)) == doctest::Approx(1.0));
  CHECK(mnorm_eval(max_cr(), a) == 7.0);
}

TEST_CASE("closed forms agree with the oracle") {
  oracle::Gen gen(31);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 4));
    const auto m = gen.structured_mat(n);
    const Matrix a = oracle::from_mat(m);
    CHECK(oracle::rel_err(mnorm_eval(MatrixNormSpec::entrywise_sum(), a), oracle::entry_sum(m)) <= 1e-14);
    CHECK(mnorm_eval(MatrixNormSpec::entrywise_max(), a) == oracle::entry_max(m));
    CHECK(oracle::rel_err(mnorm_eval(MatrixNormSpec::max_col_sum(), a), oracle::max_col_sum(m)) <= 1e-14);
    CHECK(oracle::rel_err(mnorm_eval(MatrixNormSpec::max_row_sum(), a), oracle::max_row_sum(m)) <= 1e-14);
  }
}

TEST_CASE("spectral norm agrees with the eigenvalue oracle at n = 2, 3") {
  oracle::Gen gen(32);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 2);
    const auto m = gen.structured_mat(n);
    CHECK(oracle::rel_err(spectral_norm(oracle::from_mat(m)), oracle::spectral(m)) <= 1e-6);
  }
}

TEST_CASE("matrix norm axioms") {
  oracle::Gen gen(33);
  for (const MatrixNormSpec& s : catalog()) {
    CAPTURE(s.describe());
    for (std::size_t n = 2; n <= 4; ++n) {
      CHECK(mnorm_eval(s, Matrix::zeros(n)) == 0.0);
      for (int t = 0; t < 200; ++t) {
        const Matrix a = gen.matrix(n), b = gen.matrix(n);
        const Complex al = gen.complex();
        const double na = mnorm_eval(s, a);
        if (a.is_zero()) continue;
        REQUIRE(na > 0.0);
        CHECK(oracle::rel_err(mnorm_eval(s, al * a), std::abs(al) * na) <= 1e-9);
        CHECK(mnorm_eval(s, a + b) <= (na + mnorm_eval(s, b)) * (1 + 1e-9));
      }
    }
  }
}

TEST_CASE("submultiplicativity of the algebra norms") {
  oracle::Gen gen(34);
  const std::vector<MatrixNormSpec> algebra{MatrixNormSpec::entrywise_sum(), MatrixNormSpec::max_col_sum(),
                                            MatrixNormSpec::max_row_sum(), MatrixNormSpec::spectral(), max_cr()};
  for (const MatrixNormSpec& s : algebra) {
    CAPTURE(s.describe());
    double worst = 0.0;
    for (int t = 0; t < 10000; ++t) {
      const std::size_t n = 2 + static_cast<std::size_t>(t % 3);
      const Matrix a = gen.matrix(n), b = gen.matrix(n);
      worst = std::max(worst, mnorm_eval(s, a * b) / (mnorm_eval(s, a) * mnorm_eval(s, b)));
    }
    CHECK(worst <= 1 + 1e-9);
  }
  const Matrix j = Matrix::ones(2);
  const MatrixNormSpec m = MatrixNormSpec::entrywise_max();
  CHECK(mnorm_eval(m, j * j) == 2.0);
  CHECK(mnorm_eval(m, j) * mnorm_eval(m, j) == 1.0);
}

TEST_CASE("entrywise-vs-aggregate chain") {
  oracle::Gen gen(35);
  for (int t = 0; t < 1000; ++t) {
    const Matrix a = gen.matrix(static_cast<std::size_t>(gen.integer(1, 4)));
    const double mv = mnorm_eval(MatrixNormSpec::entrywise_max(), a);
    const double c = mnorm_eval(MatrixNormSpec::max_col_sum(), a);
    const double r = mnorm_eval(MatrixNormSpec::max_row_sum(), a);
    const double sg = mnorm_eval(MatrixNormSpec::entrywise_sum(), a);
    const double eps = 1e-12 * sg;
    CHECK(mv <= c + eps);
    CHECK(c <= sg + eps);
    CHECK(mv <= r + eps);
    CHECK(r <= sg + eps);
  }
}

TEST_CASE("algebra classification") {
  CHECK(mnorm_is_algebra_candidate(MatrixNormSpec::entrywise_sum()) == AlgebraClass::KnownYes);
  CHECK(mnorm_is_algebra_candidate(MatrixNormSpec::entrywise_max()) == AlgebraClass::KnownNo);
  CHECK(mnorm_is_algebra_candidate(MatrixNormSpec::spectral()) == AlgebraClass::KnownYes);
  CHECK(mnorm_is_algebra_candidate(max_cr()) == AlgebraClass::KnownYes);
  CHECK(mnorm_is_algebra_candidate(MatrixNormSpec::gind(linf(), l1())) == AlgebraClass::KnownYes);
  CHECK(mnorm_is_algebra_candidate(MatrixNormSpec::gind(l1(), linf())) == AlgebraClass::KnownNo);
  CHECK(std::string(to_string(AlgebraClass::Unknown)) == "unknown");
}

TEST_CASE("gind spec delegates to the engine") {
  const Matrix a{{1, 2}, {3, 4}};
  CHECK(mnorm_eval(MatrixNormSpec::gind(l1(), linf()), a, OptBudget::defaults(2)) == doctest::Approx(4.0));
  CHECK(mnorm_eval(MatrixNormSpec::gind(l1(), l1()), a, OptBudget::defaults(2)) == doctest::Approx(6.0));
}

TEST_CASE("invalid matrix specs") {
  CHECK_THROWS_AS(MatrixNormSpec::max_of({}), SpecError);
  CHECK_THROWS_AS(MatrixNormSpec::scaled(0, MatrixNormSpec::spectral()), SpecError);
  CHECK_THROWS_AS(MatrixNormSpec::gind(VectorNormSpec::weighted_lp({1, 2}, 1),
                                       VectorNormSpec::weighted_lp({1, 2, 3}, 1)),
                  DimensionError);
}

}
