#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "liebax/matrix.hpp"

namespace liebax {

/// A finite-dimensional algebra given by structure constants
/// [e_i, e_j] = sum_k c(i, j, k) e_k over a fixed scalar field.
///
/// Construction does not enforce the Lie axioms: doubles built from
/// arbitrary operators are legitimate candidates, and `jacobi_check`
/// decides whether a given table is Lie.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(std::size_t dim, Field field = {}, std::vector<std::string> basis_names = {});

  std::size_t dim() const { return dim_; }
  const Field& field() const { return field_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  void set_basis_names(std::vector<std::string> names);

  const Scalar& coeff(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }
  Scalar& coeff(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim_ + j) * dim_ + k]; }

  /// Sets [e_i, e_j] only.
  void set_product(std::size_t i, std::size_t j, const Vector& value);
  /// Sets [e_i, e_j] = value and [e_j, e_i] = -value.
  void set_bracket(std::size_t i, std::size_t j, const Vector& value);
  Vector product(std::size_t i, std::size_t j) const;

  bool operator==(const LieAlgebra&) const = default;

 private:
  std::size_t dim_ = 0;
  Field field_;
  std::vector<std::string> names_;
  std::vector<Scalar> c_;
};

/// Bilinear form with Gram matrix gram(i, j) = w(e_i, e_j).
struct BilinearForm {
  Matrix gram;

  Scalar operator()(const Vector& x, const Vector& y) const;
  bool operator==(const BilinearForm&) const = default;
};

Vector bracket(const LieAlgebra& L, const Vector& x, const Vector& y);

bool is_antisymmetric(const LieAlgebra& L);
/// Antisymmetry plus the Jacobi identity on every basis triple.
bool jacobi_check(const LieAlgebra& L);

/// Matrix of y -> [x, y].
LinearMap adjoint(const LieAlgebra& L, const Vector& x);

Subspace center(const LieAlgebra& L);
Subspace derived_subalgebra(const LieAlgebra& L);
bool is_perfect(const LieAlgebra& L);

/// kappa(e_i, e_j) = trace(ad e_i ad e_j)
BilinearForm killing_form(const LieAlgebra& L);

/// Same structure constants read over Q(sqrt d).
LieAlgebra extend_scalars(const LieAlgebra& L, std::int64_t d);

LieAlgebra abelian_algebra(std::size_t dim);
/// Basis of a followed by basis of b; brackets across summands vanish.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// The same algebra in the basis given by the columns of P, so that the new
/// constants are P^-1 [P e_i, P e_j]. Throws when P is singular.
LieAlgebra change_basis(const LieAlgebra& L, const Matrix& P);

/// Whether [v, w] lies in `sub` for all v in `sub` and all w in L.
bool is_ideal(const LieAlgebra& L, const Subspace& sub);
/// Whether `sub` is closed under the product.
bool is_subalgebra(const LieAlgebra& L, const Subspace& sub);

}  // namespace liebax
