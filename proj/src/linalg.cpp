#include "normlab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "normlab/error.hpp"

namespace normlab {

// ---------------------------------------------------------------- Vector

Vector Vector::ones(std::size_t n) {
  Vector v(n);
  for (auto& e : v) e = 1.0;
  return v;
}

Vector Vector::basis(std::size_t n, std::size_t j) {
  if (j >= n) throw DimensionError("basis index " + std::to_string(j) + " out of range");
  Vector v(n);
  v[j] = 1.0;
  return v;
}

Vector Vector::random_gaussian(std::size_t n, RandomStream& rng) {
  Vector v(n);
  for (auto& e : v) e = rng.complex_normal();
  return v;
}

Vector Vector::conj() const {
  Vector out(*this);
  for (auto& e : out) e = std::conj(e);
  return out;
}

bool Vector::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Complex& z) { return z == Complex{}; });
}

static void check_same(std::size_t a, std::size_t b) {
  if (a != b) {
    throw DimensionError("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

Vector& Vector::operator+=(const Vector& other) {
  check_same(dim(), other.dim());
  for (std::size_t i = 0; i < dim(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& other) {
  check_same(dim(), other.dim());
  for (std::size_t i = 0; i < dim(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

Vector& Vector::operator*=(Complex s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

Vector& Vector::operator/=(Complex s) {
  for (auto& e : entries_) e /= s;
  return *this;
}

Vector operator+(Vector a, const Vector& b) { return a += b; }
Vector operator-(Vector a, const Vector& b) { return a -= b; }
Vector operator*(Complex s, Vector v) { return v *= s; }
Vector operator*(Vector v, Complex s) { return v *= s; }
Vector operator/(Vector v, Complex s) { return v /= s; }

Complex inner(const Vector& u, const Vector& v) {
  check_same(u.dim(), v.dim());
  Complex acc{};
  for (std::size_t i = 0; i < u.dim(); ++i) acc += std::conj(u[i]) * v[i];
  return acc;
}

double euclidean(const Vector& v) {
  double acc = 0.0;
  for (const auto& e : v) acc += std::norm(e);
  return std::sqrt(acc);
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : n_(rows.size()), entries_() {
  entries_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) throw DimensionError("matrix literal is not square");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::from_rows(const std::vector<std::vector<Complex>>& rows) {
  Matrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw DimensionError("matrix rows are not square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::ones(std::size_t n) {
  Matrix m(n);
  for (auto& e : m.entries_) e = 1.0;
  return m;
}

Matrix Matrix::single_entry(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= n || j >= n) throw DimensionError("single-entry index out of range");
  Matrix m(n);
  m(i, j) = 1.0;
  return m;
}

Matrix Matrix::random_gaussian(std::size_t n, RandomStream& rng) {
  Matrix m(n);
  for (auto& e : m.entries_) e = rng.complex_normal();
  return m;
}

Matrix Matrix::outer(const Vector& u, const Vector& v) {
  check_same(u.dim(), v.dim());
  Matrix m(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j) m(i, j) = u[i] * std::conj(v[j]);
  return m;
}

Vector Matrix::column(std::size_t j) const {
  Vector v(n_);
  for (std::size_t i = 0; i < n_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vector Matrix::row(std::size_t i) const {
  Vector v(n_);
  for (std::size_t j = 0; j < n_; ++j) v[j] = (*this)(i, j);
  return v;
}

Matrix Matrix::adjoint() const {
  Matrix m(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Complex& z) { return z == Complex{}; });
}

double Matrix::hermitian_defect() const noexcept {
  double worst = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j)
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return worst;
}

double Matrix::max_abs() const noexcept {
  double worst = 0.0;
  for (const auto& e : entries_) worst = std::max(worst, std::abs(e));
  return worst;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  check_same(n_, other.n_);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  check_same(n_, other.n_);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

Matrix& Matrix::operator*=(Complex s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

Matrix& Matrix::operator/=(Complex s) {
  for (auto& e : entries_) e /= s;
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(Complex s, Matrix a) { return a *= s; }
Matrix operator*(Matrix a, Complex s) { return a *= s; }
Matrix operator/(Matrix a, Complex s) { return a /= s; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  check_same(a.dim(), b.dim());
  const std::size_t n = a.dim();
  Matrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Matrix random_test_matrix(std::size_t n, RandomStream& rng) {
  const auto pick = rng.next_u64() % 3;
  if (pick == 2) {
    const Vector u = Vector::random_gaussian(n, rng);
    const Vector v = Vector::random_gaussian(n, rng);
    return Matrix::outer(u, v);
  }
  Matrix g = Matrix::random_gaussian(n, rng);
  if (pick == 1) return (g + g.adjoint()) * Complex{0.5, 0.0};
  return g;
}

Vector mat_apply(const Matrix& a, const Vector& x) {
  check_same(a.dim(), x.dim());
  const std::size_t n = a.dim();
  Vector y(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex acc{};
    for (std::size_t j = 0; j < n; ++j) acc += a(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

// ---------------------------------------------------------------- eigen

EigResult hermitian_top_eig(const Matrix& h, double tol, int max_iter, RandomStream& rng) {
  const std::size_t n = h.dim();
  if (n == 0) throw DimensionError("empty matrix");
  const double scale = std::max(1.0, h.max_abs());
  if (h.hermitian_defect() > 1e-12 * scale) {
    throw SpecError("hermitian_top_eig: matrix is not Hermitian");
  }
  // Residual threshold is absolute for |H| <= 1 and relative above, so large
  // entries do not push the target below rounding level.
  const double threshold = tol * scale;

  Vector v = Vector::random_gaussian(n, rng);
  v /= euclidean(v);

  Matrix stepper = h;
  int squarings = 0;
  EigResult out;
  for (int it = 1; it <= max_iter; ++it) {
    const Vector w = mat_apply(h, v);
    const double lambda = inner(v, w).real();
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i) r += std::norm(w[i] - lambda * v[i]);
    r = std::sqrt(r);
    out = EigResult{std::max(lambda, 0.0), v, it, r};
    if (r <= threshold) return out;

    if (it % 16 == 0 && squarings < 40) {
      stepper = stepper * stepper;
      const double m = stepper.max_abs();
      if (m > 0.0) stepper /= m;
      ++squarings;
    }
    Vector u = mat_apply(stepper, v);
    double len = euclidean(u);
    if (!(len > 0.0) || !std::isfinite(len)) {
      // The iterate fell into the null space of the stepper; restart.
      u = Vector::random_gaussian(n, rng);
      len = euclidean(u);
    }
    v = u / len;
  }
  throw ConvergenceError("hermitian_top_eig: no convergence after " + std::to_string(max_iter) +
                             " iterations (residual " + std::to_string(out.residual) + ")",
                         out.residual);
}

}  // namespace normlab
