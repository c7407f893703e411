#include "liebax/forms.hpp"

namespace liebax {

namespace {

const Matrix& inverse_gram(const BilinearForm& w, Matrix& storage) {
  auto inv = inverse(w.gram);
  if (!inv) throw Error("bilinear form is degenerate");
  storage = std::move(*inv);
  return storage;
}

}  // namespace

Tensor2 simple_tensor(const Vector& x, const Vector& y) {
  Matrix m(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j)
      if (!x[i].is_zero() && !y[j].is_zero()) m(i, j) = x[i] * y[j];
  return {m};
}

Tensor2 wedge(const Vector& x, const Vector& y) { return simple_tensor(x, y) - simple_tensor(y, x); }

bool invariance_check(const LieAlgebra& L, const BilinearForm& w) {
  const std::size_t n = L.dim();
  if (w.gram.rows() != n || w.gram.cols() != n) throw Error("form size does not match algebra");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Vector ab = L.product(a, b);
      for (std::size_t c = 0; c < n; ++c) {
        if (!(w(ab, unit_vector(n, c)) == w(unit_vector(n, a), L.product(b, c)))) return false;
      }
    }
  return true;
}

bool is_symmetric(const BilinearForm& w) { return w.gram == w.gram.transpose(); }

bool is_nondegenerate(const BilinearForm& w) {
  return w.gram.is_square() && rank(w.gram) == w.gram.rows();
}

LinearMap adjoint_map(const LinearMap& R, const BilinearForm& w) {
  Matrix storage;
  const Matrix& ginv = inverse_gram(w, storage);
  return ginv * R.transpose() * w.gram;
}

LinearMap map_from_tensor(const Tensor2& r, const BilinearForm& w) {
  if (!is_nondegenerate(w)) throw Error("bilinear form is degenerate");
  return r.coeffs.transpose() * w.gram;
}

Tensor2 tensor_from_map(const LinearMap& R, const BilinearForm& w) {
  Matrix storage;
  const Matrix& ginv = inverse_gram(w, storage);
  return {(R * ginv).transpose()};
}

}  // namespace liebax
