#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "liebax/scalar.hpp"

namespace liebax {

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);
Vector operator+(const Vector& x, const Vector& y);
Vector operator-(const Vector& x, const Vector& y);
Vector operator-(const Vector& x);
Vector operator*(const Scalar& s, const Vector& x);
Vector& operator+=(Vector& x, const Vector& y);
Vector& operator-=(Vector& x, const Vector& y);

/// Dense matrix of exact scalars, row-major storage.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data);

  static Matrix identity(std::size_t n);
  static Matrix scalar(std::size_t n, const Scalar& s);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  void set_column(std::size_t j, const Vector& v);

  Matrix transpose() const;
  Scalar trace() const;
  bool is_zero() const;

  /// Column-major flattening; the coordinate vector of a map in End(V).
  Vector vec() const;
  static Matrix unvec(const Vector& v, std::size_t n);

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(const Matrix& a);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, Matrix a);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// A linear endomorphism; column j holds the image of basis vector j.
using LinearMap = Matrix;

struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);
/// Basis of {v : m v = 0}, one vector per free column.
std::vector<Vector> null_space(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
/// Some solution of a x = b, if the system is consistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// Subspace of F^n held as the nonzero rows of a reduced echelon form, so two
/// equal subspaces compare equal element by element.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}
  static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient);
  static Subspace full(std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  bool operator==(const Subspace&) const = default;

 private:
  std::size_t ambient_;
  std::vector<Vector> basis_;
};

Subspace sum(const Subspace& a, const Subspace& b);

}  // namespace liebax
