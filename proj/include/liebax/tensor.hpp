#pragma once

#include "liebax/forms.hpp"
#include "liebax/rota.hpp"

namespace liebax {

/// coeffs[(a*n + b)*n + c] is the coefficient of e_a (x) e_b (x) e_c.
struct Tensor3 {
  std::size_t n = 0;
  std::vector<Scalar> coeffs;

  explicit Tensor3(std::size_t dim = 0) : n(dim), coeffs(dim * dim * dim) {}
  Scalar& operator()(std::size_t a, std::size_t b, std::size_t c) { return coeffs[(a * n + b) * n + c]; }
  const Scalar& operator()(std::size_t a, std::size_t b, std::size_t c) const { return coeffs[(a * n + b) * n + c]; }
  bool is_zero() const;
  bool operator==(const Tensor3&) const = default;
};

/// [t, e_k] under the diagonal action: [a (x) b, y] = [a, y] (x) b + a (x) [b, y].
Tensor2 act(const LieAlgebra& L, const Tensor2& t, std::size_t k);
bool tensor_invariance_check(const LieAlgebra& L, const Tensor2& t);

/// [r12, r13] - [r23, r12] + [r13, r23]
Tensor3 cybe_residual(const LieAlgebra& L, const Tensor2& r);
/// Whether the residual above is annihilated by every e_k.
bool cybe_invariance_check(const LieAlgebra& L, const Tensor2& r);

/// table[k] = delta(e_k)
struct Cobracket {
  std::vector<Tensor2> table;
  bool operator==(const Cobracket&) const = default;
};
/// delta(a) = [r, a]
Cobracket cobracket(const LieAlgebra& L, const Tensor2& r);
/// delta([a, b]) == [delta(a), b] + [a, delta(b)], with [a, t] read as -[t, a].
bool cocycle_check(const LieAlgebra& L, const Cobracket& delta);

/// The transpose of delta as a product on the dual basis f^1..f^n:
/// [f^i, f^j] = sum_k delta(e_k)^{ij} f^k.
LieAlgebra dual_algebra(const LieAlgebra& L, const Cobracket& delta);
/// The same product moved onto L through x -> w(x, .); basis e_a^* = w(e_a, .).
LieAlgebra dual_algebra(const LieAlgebra& L, const BilinearForm& w, const Tensor2& r);
/// [a*, b*] = (-[Ra, b] - [a, Rb] - mu [a, b])* as constants on L.
LieAlgebra dual_algebra_from_operator(const LieAlgebra& L, const LinearMap& R, const LinearMap& mu);
/// The dual of (L, delta_r) satisfies the Jacobi identity.
bool lie_coalgebra_check(const LieAlgebra& L, const Tensor2& r);

/// The classical double on L + L^*, in the basis e_1..e_n, e_1^*..e_n^*.
/// Throws unless delta_r makes L a Lie coalgebra.
LieAlgebra drinfeld_double(const LieAlgebra& L, const BilinearForm& w, const Tensor2& r);
/// Whether x + y^* -> x + bar(y) carries the classical double onto
/// build_double(L, R_r, -(R_r + R_r^*)), compared table against table.
bool double_iso_check(const LieAlgebra& L, const BilinearForm& w, const Tensor2& r);

struct FactorizableForm {
  BilinearForm beta;
  /// The operator of r with respect to beta.
  LinearMap R;
  bool invariant = false;
  /// R is a Rota-Baxter operator of weight 1.
  bool rota_baxter = false;
  /// R + R^* + id == 0 with the adjoint taken against beta.
  bool sum_relation = false;
  bool verified() const { return invariant && rota_baxter && sum_relation; }
};
/// beta(x, y) = -<I^-1 x, y> with I = r + tau(r) read as a map L^* -> L.
/// Throws when I is degenerate or not invariant, or r does not solve CYBE.
FactorizableForm factorizable_form(const LieAlgebra& L, const Tensor2& r);

/// R([x, R^* y] - [R x, y]) + [R x, R y] on basis pairs, R = R_r.
BilinearTable t11_table(const LieAlgebra& L, const BilinearForm& w, const Tensor2& r);
/// (x, y) -> sum w(x, a) w(y, b) c over the terms a (x) b (x) c of C.
BilinearTable psi_contraction(const Tensor3& C, const BilinearForm& w);

}  // namespace liebax
