#include "liebax/tensor.hpp"

namespace liebax {

namespace {

void check_tensor(const LieAlgebra& L, const Tensor2& t) {
  if (t.coeffs.rows() != L.dim() || t.coeffs.cols() != L.dim())
    throw Error("tensor does not match the algebra dimension");
}

}  // namespace

bool Tensor3::is_zero() const {
  for (const auto& c : coeffs)
    if (!c.is_zero()) return false;
  return true;
}

Tensor2 act(const LieAlgebra& L, const Tensor2& t, std::size_t k) {
  check_tensor(L, t);
  const std::size_t n = L.dim();
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& tij = t.coeffs(i, j);
      if (tij.is_zero()) continue;
      for (std::size_t p = 0; p < n; ++p) {
        const Scalar& c = L.coeff(i, k, p);
        if (!c.is_zero()) out(p, j) += tij * c;
      }
      for (std::size_t q = 0; q < n; ++q) {
        const Scalar& c = L.coeff(j, k, q);
        if (!c.is_zero()) out(i, q) += tij * c;
      }
    }
  return {out};
}

bool tensor_invariance_check(const LieAlgebra& L, const Tensor2& t) {
  for (std::size_t k = 0; k < L.dim(); ++k)
    if (!act(L, t, k).coeffs.is_zero()) return false;
  return true;
}

Tensor3 cybe_residual(const LieAlgebra& L, const Tensor2& r) {
  check_tensor(L, r);
  const std::size_t n = L.dim();
  const Matrix& m = r.coeffs;
  Tensor3 C(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (m(a, b).is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          if (m(c, d).is_zero()) continue;
          const Scalar w = m(a, b) * m(c, d);
          for (std::size_t s = 0; s < n; ++s) {
            // [r12, r13]: [e_a, e_c] (x) e_b (x) e_d
            if (!L.coeff(a, c, s).is_zero()) C(s, b, d) += w * L.coeff(a, c, s);
            // [r23, r12]: e_a (x) [e_c, e_b] (x) e_d
            if (!L.coeff(c, b, s).is_zero()) C(a, s, d) -= w * L.coeff(c, b, s);
            // [r13, r23]: e_a (x) e_c (x) [e_b, e_d]
            if (!L.coeff(b, d, s).is_zero()) C(a, c, s) += w * L.coeff(b, d, s);
          }
        }
    }
  return C;
}

bool cybe_invariance_check(const LieAlgebra& L, const Tensor2& r) {
  const Tensor3 C = cybe_residual(L, r);
  const std::size_t n = L.dim();
  for (std::size_t k = 0; k < n; ++k) {
    Tensor3 out(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
          const Scalar& v = C(a, b, c);
          if (v.is_zero()) continue;
          for (std::size_t s = 0; s < n; ++s) {
            if (!L.coeff(a, k, s).is_zero()) out(s, b, c) += v * L.coeff(a, k, s);
            if (!L.coeff(b, k, s).is_zero()) out(a, s, c) += v * L.coeff(b, k, s);
            if (!L.coeff(c, k, s).is_zero()) out(a, b, s) += v * L.coeff(c, k, s);
          }
        }
    if (!out.is_zero()) return false;
  }
  return true;
}

Cobracket cobracket(const LieAlgebra& L, const Tensor2& r) {
  Cobracket d;
  for (std::size_t k = 0; k < L.dim(); ++k) d.table.push_back(act(L, r, k));
  return d;
}

bool cocycle_check(const LieAlgebra& L, const Cobracket& delta) {
  const std::size_t n = L.dim();
  if (delta.table.size() != n) throw Error("cobracket does not match the algebra dimension");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Matrix lhs(n, n);
      const Vector ab = L.product(a, b);
      for (std::size_t k = 0; k < n; ++k)
        if (!ab[k].is_zero()) lhs += ab[k] * delta.table[k].coeffs;
      const Matrix rhs = act(L, delta.table[a], b).coeffs - act(L, delta.table[b], a).coeffs;
      if (!(lhs == rhs)) return false;
    }
  return true;
}

LieAlgebra dual_algebra(const LieAlgebra& L, const Cobracket& delta) {
  const std::size_t n = L.dim();
  if (delta.table.size() != n) throw Error("cobracket does not match the algebra dimension");
  std::vector<std::string> names;
  for (const auto& s : L.basis_names()) names.push_back(s + "^*");
  LieAlgebra D(n, L.field(), names);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) D.coeff(i, j, k) = delta.table[k].coeffs(i, j);
  return D;
}

LieAlgebra dual_algebra(const LieAlgebra& L, const BilinearForm& w, const Tensor2& r) {
  if (!is_nondegenerate(w)) throw Error("bilinear form is degenerate");
  // e_a^* = sum_k G(a, k) f^k, so the change of basis has columns G^T.
  LieAlgebra D = change_basis(dual_algebra(L, cobracket(L, r)), w.gram.transpose());
  D.set_basis_names(L.basis_names());
  return D;
}

LieAlgebra dual_algebra_from_operator(const LieAlgebra& L, const LinearMap& R, const LinearMap& mu) {
  const std::size_t n = L.dim();
  LieAlgebra D(n, L.field(), L.basis_names());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Vector ea = unit_vector(n, a), eb = unit_vector(n, b);
      D.set_product(a, b, -bracket(L, R.column(a), eb) - bracket(L, ea, R.column(b)) - mu * L.product(a, b));
    }
  return D;
}

bool lie_coalgebra_check(const LieAlgebra& L, const Tensor2& r) {
  return jacobi_check(dual_algebra(L, cobracket(L, r)));
}

LieAlgebra drinfeld_double(const LieAlgebra& L, const BilinearForm& w, const Tensor2& r) {
  const std::size_t n = L.dim();
  if (!is_nondegenerate(w)) throw Error("bilinear form is degenerate");
  const Cobracket delta = cobracket(L, r);
  if (!jacobi_check(dual_algebra(L, delta))) throw Error("drinfeld_double: the cobracket is not a Lie coalgebra");
  auto del = [&](std::size_t k, std::size_t i, std::size_t j) -> const Scalar& { return delta.table[k].coeffs(i, j); };

  std::vector<std::string> names = L.basis_names();
  for (const auto& s : L.basis_names()) names.push_back(s + "^*");
  // Basis e_1..e_n, f^1..f^n with f the dual basis.
  LieAlgebra D(2 * n, L.field(), names);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t k = 0; k < n; ++k) {
        D.coeff(a, b, k) = L.coeff(a, b, k);
        D.coeff(n + a, n + b, n + k) = del(k, a, b);
        // [f^a, e_b] = sum_p delta(e_b)^{pa} e_p + sum_k c_{bk}^a f^k
        D.coeff(n + a, b, k) = del(b, k, a);
        D.coeff(n + a, b, n + k) = L.coeff(b, k, a);
        // [e_a, f^b] = sum_q delta(e_a)^{bq} e_q + sum_k c_{ka}^b f^k
        D.coeff(a, n + b, k) = del(a, b, k);
        D.coeff(a, n + b, n + k) = L.coeff(k, a, b);
      }
  Matrix P = Matrix::identity(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) P(n + i, n + j) = w.gram(j, i);
  return change_basis(D, P);
}

bool double_iso_check(const LieAlgebra& L, const BilinearForm& w, const Tensor2& r) {
  const LinearMap R = map_from_tensor(r, w);
  const LinearMap mu = -(R + adjoint_map(R, w));
  const LieAlgebra classical = drinfeld_double(L, w, r);
  const LieAlgebra rb = build_double(L, R, mu);
  const std::size_t m = classical.dim();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (!(classical.product(i, j) == rb.product(i, j))) return false;
  return true;
}

FactorizableForm factorizable_form(const LieAlgebra& L, const Tensor2& r) {
  check_tensor(L, r);
  const Tensor2 s = r.symmetric_sum();
  auto inv = inverse(s.coeffs);
  if (!inv) throw Error("factorizable_form: symmetric part is degenerate");
  if (!tensor_invariance_check(L, s)) throw Error("factorizable_form: symmetric part is not invariant");
  if (!cybe_residual(L, r).is_zero()) throw Error("factorizable_form: r does not solve the classical Yang-Baxter equation");
  FactorizableForm out;
  out.beta = BilinearForm{-*inv};
  out.R = map_from_tensor(r, out.beta);
  const std::size_t n = L.dim();
  out.invariant = invariance_check(L, out.beta);
  out.rota_baxter = rb_check(L, out.R, LinearMap::identity(n));
  out.sum_relation = (out.R + adjoint_map(out.R, out.beta) + LinearMap::identity(n)).is_zero();
  return out;
}

BilinearTable t11_table(const LieAlgebra& L, const BilinearForm& w, const Tensor2& r) {
  const std::size_t n = L.dim();
  const LinearMap R = map_from_tensor(r, w);
  const LinearMap Rs = adjoint_map(R, w);
  BilinearTable t{n, {}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ei = unit_vector(n, i), ej = unit_vector(n, j);
      t.entries.push_back(R * (bracket(L, ei, Rs.column(j)) - bracket(L, R.column(i), ej)) +
                          bracket(L, R.column(i), R.column(j)));
    }
  return t;
}

BilinearTable psi_contraction(const Tensor3& C, const BilinearForm& w) {
  const std::size_t n = C.n;
  if (w.gram.rows() != n) throw Error("form does not match the tensor dimension");
  BilinearTable t{n, {}};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Vector v(n);
      for (std::size_t a = 0; a < n; ++a) {
        if (w.gram(x, a).is_zero()) continue;
        for (std::size_t b = 0; b < n; ++b) {
          if (w.gram(y, b).is_zero()) continue;
          const Scalar f = w.gram(x, a) * w.gram(y, b);
          for (std::size_t c = 0; c < n; ++c)
            if (!C(a, b, c).is_zero()) v[c] += f * C(a, b, c);
        }
      }
      t.entries.push_back(std::move(v));
    }
  return t;
}

}  // namespace liebax
