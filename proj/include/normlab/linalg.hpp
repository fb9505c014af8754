#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "normlab/random.hpp"

namespace normlab {

using Complex = std::complex<double>;

/// Dense complex n-vector.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t n) : entries_(n) {}
  Vector(std::initializer_list<Complex> values) : entries_(values) {}
  explicit Vector(std::vector<Complex> values) : entries_(std::move(values)) {}

  static Vector zeros(std::size_t n) { return Vector(n); }
  static Vector ones(std::size_t n);
  static Vector basis(std::size_t n, std::size_t j);
  static Vector random_gaussian(std::size_t n, RandomStream& rng);

  std::size_t dim() const noexcept { return entries_.size(); }
  Complex& operator[](std::size_t i) { return entries_[i]; }
  const Complex& operator[](std::size_t i) const { return entries_[i]; }

  std::span<Complex> entries() noexcept { return entries_; }
  std::span<const Complex> entries() const noexcept { return entries_; }

  auto begin() noexcept { return entries_.begin(); }
  auto end() noexcept { return entries_.end(); }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  Vector conj() const;
  bool is_zero() const noexcept;

  Vector& operator+=(const Vector& other);
  Vector& operator-=(const Vector& other);
  Vector& operator*=(Complex s);
  Vector& operator/=(Complex s);

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<Complex> entries_;
};

Vector operator+(Vector a, const Vector& b);
Vector operator-(Vector a, const Vector& b);
Vector operator*(Complex s, Vector v);
Vector operator*(Vector v, Complex s);
Vector operator/(Vector v, Complex s);

/// Sesquilinear inner product <u, v> = sum conj(u_i) v_i.
Complex inner(const Vector& u, const Vector& v);

/// Euclidean length, used for internal normalization only.
double euclidean(const Vector& v);

/// Dense row-major complex n x n matrix.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), entries_(n * n) {}
  Matrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static Matrix zeros(std::size_t n) { return Matrix(n); }
  static Matrix identity(std::size_t n);
  static Matrix ones(std::size_t n);
  static Matrix single_entry(std::size_t n, std::size_t i, std::size_t j);
  static Matrix random_gaussian(std::size_t n, RandomStream& rng);
  static Matrix outer(const Vector& u, const Vector& v);  // u v*
  static Matrix from_rows(const std::vector<std::vector<Complex>>& rows);

  std::size_t dim() const noexcept { return n_; }
  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j];
  }

  std::span<Complex> entries() noexcept { return entries_; }
  std::span<const Complex> entries() const noexcept { return entries_; }

  Vector column(std::size_t j) const;
  Vector row(std::size_t i) const;

  Matrix adjoint() const;
  bool is_zero() const noexcept;
  /// max |H_ij - conj(H_ji)|
  double hermitian_defect() const noexcept;
  double max_abs() const noexcept;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(Complex s);
  Matrix& operator/=(Complex s);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Complex> entries_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(Complex s, Matrix a);
Matrix operator*(Matrix a, Complex s);
Matrix operator/(Matrix a, Complex s);
Matrix operator*(const Matrix& a, const Matrix& b);

/// Complex-Gaussian entries, then with equal probability left raw,
/// Hermitian-symmetrized ((G + G*) / 2) or replaced by a rank-one u v*.
Matrix random_test_matrix(std::size_t n, RandomStream& rng);

/// Ax. Throws DimensionError when the sizes disagree.
Vector mat_apply(const Matrix& a, const Vector& x);

struct EigResult {
  double eigenvalue = 0.0;
  Vector eigenvector;
  int iterations = 0;
  double residual = 0.0;
};

inline constexpr double kDefaultEigTol = 1e-10;
inline constexpr int kDefaultEigMaxIter = 10000;

/// Largest eigenpair of a Hermitian positive semidefinite matrix by power
/// iteration started from a random vector drawn from `rng`.
///
/// Converged when ||Hv - lambda v||_2 <= tol * max(1, max |H_ij|). When plain iteration stalls on a
/// small spectral gap, the iterate is advanced with repeated squares of H
/// (still a power method, the residual is always measured against H itself).
/// Throws SpecError if H is not Hermitian to 1e-12 (relative to max |H_ij|),
/// ConvergenceError after max_iter iterations.
EigResult hermitian_top_eig(const Matrix& h, double tol, int max_iter, RandomStream& rng);

}  // namespace normlab
