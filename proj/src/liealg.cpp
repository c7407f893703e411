#include "liebax/liealg.hpp"

namespace liebax {

LieAlgebra::LieAlgebra(std::size_t dim, Field field, std::vector<std::string> basis_names)
    : dim_(dim), field_(field), c_(dim * dim * dim) {
  if (dim == 0) throw Error("algebra dimension must be positive");
  set_basis_names(std::move(basis_names));
}

void LieAlgebra::set_basis_names(std::vector<std::string> names) {
  if (names.empty())
    for (std::size_t i = 0; i < dim_; ++i) names.push_back("e" + std::to_string(i + 1));
  if (names.size() != dim_) throw Error("expected " + std::to_string(dim_) + " basis names");
  names_ = std::move(names);
}

void LieAlgebra::set_product(std::size_t i, std::size_t j, const Vector& value) {
  if (i >= dim_ || j >= dim_ || value.size() != dim_) throw Error("set_product: index or size out of range");
  for (std::size_t k = 0; k < dim_; ++k) coeff(i, j, k) = value[k];
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const Vector& value) {
  set_product(i, j, value);
  set_product(j, i, -value);
}

Vector LieAlgebra::product(std::size_t i, std::size_t j) const {
  Vector v(dim_);
  for (std::size_t k = 0; k < dim_; ++k) v[k] = coeff(i, j, k);
  return v;
}

Scalar BilinearForm::operator()(const Vector& x, const Vector& y) const {
  Vector gy = gram * y;
  Scalar s;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero() && !gy[i].is_zero()) s += x[i] * gy[i];
  return s;
}

Vector bracket(const LieAlgebra& L, const Vector& x, const Vector& y) {
  const std::size_t n = L.dim();
  if (x.size() != n || y.size() != n) throw Error("bracket: vector dimension mismatch");
  Vector r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = L.coeff(i, j, k);
        if (!c.is_zero()) r[k] += xy * c;
      }
    }
  }
  return r;
}

bool is_antisymmetric(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!(L.coeff(i, j, k) + L.coeff(j, i, k)).is_zero()) return false;
  return true;
}

bool jacobi_check(const LieAlgebra& L) {
  if (!is_antisymmetric(L)) return false;
  const std::size_t n = L.dim();
  // sum_m c_ij^m c_mk^l + c_jk^m c_mi^l + c_ki^m c_mj^l = 0; cyclic, so i < j < k suffices.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Scalar s;
          for (std::size_t m = 0; m < n; ++m) {
            if (!L.coeff(i, j, m).is_zero() && !L.coeff(m, k, l).is_zero()) s += L.coeff(i, j, m) * L.coeff(m, k, l);
            if (!L.coeff(j, k, m).is_zero() && !L.coeff(m, i, l).is_zero()) s += L.coeff(j, k, m) * L.coeff(m, i, l);
            if (!L.coeff(k, i, m).is_zero() && !L.coeff(m, j, l).is_zero()) s += L.coeff(k, i, m) * L.coeff(m, j, l);
          }
          if (!s.is_zero()) return false;
        }
  return true;
}

LinearMap adjoint(const LieAlgebra& L, const Vector& x) {
  const std::size_t n = L.dim();
  if (x.size() != n) throw Error("adjoint: vector dimension mismatch");
  LinearMap ad(n, n);
  for (std::size_t j = 0; j < n; ++j) ad.set_column(j, bracket(L, x, unit_vector(n, j)));
  return ad;
}

Subspace center(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  // Rows (j, k), unknowns x_i: sum_i x_i c_ij^k = 0.
  Matrix system(n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) system(j * n + k, i) = L.coeff(i, j, k);
  return Subspace::span(null_space(system), n);
}

Subspace derived_subalgebra(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<Vector> products;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector p = L.product(i, j);
      if (!is_zero(p)) products.push_back(std::move(p));
    }
  return Subspace::span(products, n);
}

bool is_perfect(const LieAlgebra& L) { return derived_subalgebra(L).dim() == L.dim(); }

BilinearForm killing_form(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<LinearMap> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(adjoint(L, unit_vector(n, i)));
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      g(i, j) = (ads[i] * ads[j]).trace();
      g(j, i) = g(i, j);
    }
  return {g};
}

LieAlgebra extend_scalars(const LieAlgebra& L, std::int64_t d) {
  if (!L.field().is_rational() && L.field().d() != d)
    throw Error("algebra over " + L.field().to_string() + " cannot be extended to Q(sqrt(" +
                std::to_string(d) + "))");
  LieAlgebra ext(L.dim(), Field(d), L.basis_names());
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = 0; j < L.dim(); ++j) ext.set_product(i, j, L.product(i, j));
  return ext;
}

LieAlgebra abelian_algebra(std::size_t dim) { return LieAlgebra(dim); }

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  if (!(a.field() == b.field())) throw Error("direct_sum: algebras over different fields");
  const std::size_t n = a.dim() + b.dim();
  std::vector<std::string> names = a.basis_names();
  for (const auto& s : b.basis_names()) names.push_back(s + "'");
  LieAlgebra s(n, a.field(), names);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) s.coeff(i, j, k) = a.coeff(i, j, k);
  const std::size_t o = a.dim();
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      for (std::size_t k = 0; k < b.dim(); ++k) s.coeff(o + i, o + j, o + k) = b.coeff(i, j, k);
  return s;
}

LieAlgebra change_basis(const LieAlgebra& L, const Matrix& P) {
  const std::size_t n = L.dim();
  if (P.rows() != n || P.cols() != n) throw Error("change_basis: matrix size mismatch");
  auto inv = inverse(P);
  if (!inv) throw Error("change_basis: matrix is singular");
  LieAlgebra out(n, L.field(), L.basis_names());
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < n; ++i) cols.push_back(P.column(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.set_product(i, j, *inv * bracket(L, cols[i], cols[j]));
  return out;
}

bool is_ideal(const LieAlgebra& L, const Subspace& sub) {
  for (const auto& v : sub.basis())
    for (std::size_t j = 0; j < L.dim(); ++j) {
      Vector e = unit_vector(L.dim(), j);
      if (!sub.contains(bracket(L, v, e)) || !sub.contains(bracket(L, e, v))) return false;
    }
  return true;
}

bool is_subalgebra(const LieAlgebra& L, const Subspace& sub) {
  for (const auto& v : sub.basis())
    for (const auto& w : sub.basis())
      if (!sub.contains(bracket(L, v, w))) return false;
  return true;
}

}  // namespace liebax
