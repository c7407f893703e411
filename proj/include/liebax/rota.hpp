#pragma once

#include <variant>

#include "liebax/centroid.hpp"

namespace liebax {

/// Values of a bilinear map on basis pairs; entry(i, j) is the image of (e_i, e_j).
struct BilinearTable {
  std::size_t n = 0;
  std::vector<Vector> entries;

  const Vector& entry(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
  bool is_zero() const;
  bool operator==(const BilinearTable&) const = default;
};

/// [R e_i, R e_j] - R([R e_i, e_j] + [e_i, R e_j] + mu [e_i, e_j])
BilinearTable rb_residual(const LieAlgebra& L, const LinearMap& R, const LinearMap& mu);
bool rb_check(const LieAlgebra& L, const LinearMap& R, const LinearMap& mu);

/// theta_R(x, y) = [Rx, Ry] - R([Rx, y] + [x, Ry])
BilinearTable theta_map(const LieAlgebra& L, const LinearMap& R);
/// theta_R(x, y) + lambda^2 [x, y]; zero exactly for solutions of the modified equation.
BilinearTable mcybe_residual(const LieAlgebra& L, const LinearMap& R, const Scalar& lambda);
/// (R - lambda id) / 2, an RB operator of weight lambda when R solves the modified equation.
LinearMap rb_from_mcybe(const LinearMap& R, const Scalar& lambda);
/// Cyclic sum [theta(x,y),z] + [theta(y,z),x] + [theta(z,x),y] vanishes on all basis triples.
bool r_matrix_check(const LieAlgebra& L, const LinearMap& R);

bool is_automorphism(const LieAlgebra& L, const LinearMap& phi);

struct Compose { LinearMap gamma; };
struct Conjugate { LinearMap phi; };
struct Reflect {};
struct FromModified { LinearMap Q; };
using RBTransform = std::variant<Compose, Conjugate, Reflect, FromModified>;

struct RBPair {
  LinearMap R;
  LinearMap mu;
};

/// compose: (R gamma, mu gamma); conjugate: (phi R phi^-1, phi mu phi^-1);
/// reflect: (-mu - R, mu); from_modified: ((Q - mu)/2, mu).
RBPair rb_transform(const LieAlgebra& L, const LinearMap& R, const LinearMap& mu, const RBTransform& how);

struct SplitRB {
  /// R(x + a) = -mu(x) for x in A1, a in A2.
  LinearMap R;
  /// mu maps A1^2 into A1^2 and A2^2 into A2^2.
  bool hypothesis = false;
  /// rb_check(L, R, mu), evaluated directly.
  bool verified = false;
};
/// Throws unless L = A1 + A2 is a direct sum of subalgebras and mu is in the centroid.
SplitRB split_rb(const LieAlgebra& L, const Subspace& A1, const Subspace& A2, const LinearMap& mu);

/// x . y = [Rx, y] + [x, Ry] + mu [x, y]. Throws unless rb_check passes.
LieAlgebra derived_product(const LieAlgebra& L, const LinearMap& R, const LinearMap& mu);

/// The 2n-dimensional double: basis e_1..e_n then their barred copies.
LieAlgebra build_double(const LieAlgebra& L, const LinearMap& R, const LinearMap& mu);
/// i(x) = bar(x) + mu(x) + R(x) as a 2n-vector.
Vector i_map(const LinearMap& R, const LinearMap& mu, const Vector& x);
/// j(x) = mu(x) - i(x)
Vector j_map(const LinearMap& R, const LinearMap& mu, const Vector& x);
/// Whether span{i(e_k)} is an ideal of the double.
bool ideal_check_I(const LieAlgebra& L, const LinearMap& R, const LinearMap& mu);

struct DoubleDecomposition {
  LieAlgebra double_algebra;
  Subspace I;
  Subspace J;
  bool ideals = false;
  bool direct = false;
  bool cross_zero = false;
  bool i_isomorphism = false;
  bool j_isomorphism = false;

  bool verified() const { return ideals && direct && cross_zero && i_isomorphism && j_isomorphism; }
};
/// Throws unless rb_check passes and mu is invertible.
DoubleDecomposition double_decompose(const LieAlgebra& L, const LinearMap& R, const LinearMap& mu);

}  // namespace liebax
