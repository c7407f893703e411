#pragma once

#include "liebax/liealg.hpp"

namespace liebax {

/// r = sum_ij coeffs(i, j) e_i (x) e_j. Row index is the first tensor slot.
struct Tensor2 {
  Matrix coeffs;

  std::size_t dim() const { return coeffs.rows(); }
  /// tau(a (x) b) = b (x) a
  Tensor2 flip() const { return {coeffs.transpose()}; }
  bool is_skew() const { return (coeffs + coeffs.transpose()).is_zero(); }
  Tensor2 symmetric_sum() const { return {coeffs + coeffs.transpose()}; }

  friend Tensor2 operator+(const Tensor2& a, const Tensor2& b) { return {a.coeffs + b.coeffs}; }
  friend Tensor2 operator-(const Tensor2& a, const Tensor2& b) { return {a.coeffs - b.coeffs}; }
  friend Tensor2 operator*(const Scalar& s, const Tensor2& t) { return {s * t.coeffs}; }
  bool operator==(const Tensor2&) const = default;
};

/// x (x) y
Tensor2 simple_tensor(const Vector& x, const Vector& y);
/// x (x) y - y (x) x
Tensor2 wedge(const Vector& x, const Vector& y);

/// w([a, b], c) == w(a, [b, c]) on all basis triples.
bool invariance_check(const LieAlgebra& L, const BilinearForm& w);
bool is_symmetric(const BilinearForm& w);
bool is_nondegenerate(const BilinearForm& w);

/// R* with w(R x, y) = w(x, R* y); equals G^-1 R^T G. Throws on degenerate w.
LinearMap adjoint_map(const LinearMap& R, const BilinearForm& w);

/// R_r(x) = sum_ij r^ij w(e_i, x) e_j, i.e. the matrix r^T G.
LinearMap map_from_tensor(const Tensor2& r, const BilinearForm& w);
/// Inverse of map_from_tensor for fixed nondegenerate w.
Tensor2 tensor_from_map(const LinearMap& R, const BilinearForm& w);

}  // namespace liebax
