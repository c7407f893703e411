// Shared helpers for the test suites: seeds, random inputs, and oracles that
// rebuild the fixture algebras from 2x2 matrices instead of structure constants.
#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "liebax/io.hpp"

namespace testsupport {

using namespace liebax;

inline std::string data_path(const std::string& name) { return std::string(LIEBAX_TEST_DATA) + "/" + name; }

inline std::uint32_t seed(const std::string& key) {
  static const Json seeds = read_json_file(data_path("seeds.json"));
  return seeds.at(key).get<std::uint32_t>();
}

inline int rand_int(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Matrix random_matrix(std::mt19937& rng, std::size_t n, int lo = -3, int hi = 3) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar(rand_int(rng, lo, hi));
  return m;
}

inline Vector random_vector(std::mt19937& rng, std::size_t n, int lo = -3, int hi = 3) {
  Vector v(n);
  for (auto& s : v) s = Scalar(rand_int(rng, lo, hi));
  return v;
}

inline Tensor2 random_skew(std::mt19937& rng, std::size_t n, int lo = -3, int hi = 3) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = Scalar(rand_int(rng, lo, hi));
      m(j, i) = -m(i, j);
    }
  return {m};
}

/// Skew tensor on the 6-dim fixture whose cobracket fails co-Jacobi.
inline const Tensor2& non_coalgebra_tensor() {
  static const Tensor2 t =
      tensor_from_json(read_json_file(data_path("non_coalgebra_r.json")).at("tensor"), 6, "tensor");
  return t;
}

// ---- 2x2 matrix model ------------------------------------------------------

struct Mat2 {
  Scalar a, b, c, d;  // [[a, b], [c, d]]
};

inline Mat2 operator*(const Mat2& p, const Mat2& q) {
  return {p.a * q.a + p.b * q.c, p.a * q.b + p.b * q.d, p.c * q.a + p.d * q.c, p.c * q.b + p.d * q.d};
}
inline Mat2 operator-(const Mat2& p, const Mat2& q) { return {p.a - q.a, p.b - q.b, p.c - q.c, p.d - q.d}; }
inline Mat2 operator+(const Mat2& p, const Mat2& q) { return {p.a + q.a, p.b + q.b, p.c + q.c, p.d + q.d}; }
inline Mat2 operator*(const Scalar& s, const Mat2& p) { return {s * p.a, s * p.b, s * p.c, s * p.d}; }
inline Mat2 commutator(const Mat2& p, const Mat2& q) { return p * q - q * p; }
inline Scalar trace(const Mat2& p) { return p.a + p.d; }

inline const Scalar& imag_unit() {
  static const Scalar i(0, 1, -1);
  return i;
}

/// sl2 as traceless 2x2 matrices, either over Q (basis x, h, y) or as the
/// real form of sl2 over Q(i) (basis x, h, y, ix, ih, iy).
struct MatrixModel {
  bool complex = false;
  std::vector<Mat2> basis;

  std::size_t dim() const { return basis.size(); }

  Mat2 element(const Vector& v) const {
    Mat2 m{};
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!v[k].is_zero()) m = m + v[k] * basis[k];
    return m;
  }

  /// Coordinates of a traceless matrix: x-coefficient b, h-coefficient a,
  /// y-coefficient c, split into real and imaginary parts when complex.
  Vector coords(const Mat2& m) const {
    if (!complex) return {m.b, m.a, m.c};
    return {Scalar(m.b.a()), Scalar(m.a.a()), Scalar(m.c.a()), Scalar(m.b.b()), Scalar(m.a.b()), Scalar(m.c.b())};
  }

  Vector bracket(const Vector& u, const Vector& v) const { return coords(commutator(element(u), element(v))); }

  /// The rational part of tr(uv).
  Scalar form(const Vector& u, const Vector& v) const { return Scalar(trace(element(u) * element(v)).a()); }
};

inline MatrixModel sl2_model() {
  MatrixModel m;
  m.basis = {{0, 1, 0, 0}, {1, 0, 0, -1}, {0, 0, 1, 0}};
  return m;
}

inline MatrixModel sl2c6_model() {
  MatrixModel m = sl2_model();
  m.complex = true;
  const std::size_t k = m.basis.size();
  for (std::size_t j = 0; j < k; ++j) m.basis.push_back(imag_unit() * m.basis[j]);
  return m;
}

inline LieAlgebra algebra_of(const MatrixModel& m) {
  const std::size_t n = m.dim();
  LieAlgebra L(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) L.set_product(i, j, m.bracket(unit_vector(n, i), unit_vector(n, j)));
  return L;
}

inline BilinearForm trace_form(const MatrixModel& m) {
  const std::size_t n = m.dim();
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = m.form(unit_vector(n, i), unit_vector(n, j));
  return {g};
}

/// R(x) = sum_ij r^{ij} w(e_i, x) e_j, evaluated term by term.
inline LinearMap operator_by_definition(const MatrixModel& m, const Tensor2& r) {
  const std::size_t n = m.dim();
  LinearMap R(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    Vector img(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!r.coeffs(i, j).is_zero()) img[j] += r.coeffs(i, j) * m.form(unit_vector(n, i), unit_vector(n, x));
    R.set_column(x, img);
  }
  return R;
}

/// C(r) from the three displayed contractions, brackets taken in the matrix model.
inline Tensor3 cybe_by_definition(const MatrixModel& m, const Tensor2& r) {
  const std::size_t n = m.dim();
  Tensor3 C(n);
  auto e = [&](std::size_t k) { return unit_vector(n, k); };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          const Scalar w = r.coeffs(a, b) * r.coeffs(c, d);
          if (w.is_zero()) continue;
          // [r12, r13] = sum [a_i, a_j] (x) b_i (x) b_j with r = sum a_i (x) b_i
          const Vector ac = m.bracket(e(a), e(c));
          for (std::size_t s = 0; s < n; ++s) C(s, b, d) += w * ac[s];
          // [r23, r12] = sum a_i (x) [a_j, b_i] (x) b_j, here a_i = e_a, b_i = e_b, a_j = e_c, b_j = e_d
          const Vector cb = m.bracket(e(c), e(b));
          for (std::size_t s = 0; s < n; ++s) C(a, s, d) -= w * cb[s];
          // [r13, r23] = sum a_i (x) a_j (x) [b_i, b_j]
          const Vector bd = m.bracket(e(b), e(d));
          for (std::size_t s = 0; s < n; ++s) C(a, c, s) += w * bd[s];
        }
  return C;
}

/// Dimension of {M : M ad(e_i) = ad(e_i) M} by brute force over the n^2 x n^2
/// Kronecker system (I (x) A - A^T (x) I) vec(M) = 0, built without the library.
inline std::size_t centroid_dim_oracle(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  Matrix sys(n * n * n, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const LinearMap A = adjoint(L, unit_vector(n, i));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t p = 0; p < n; ++p)
          for (std::size_t q = 0; q < n; ++q) {
            // (M A)(r, c) = sum_t M(r, t) A(t, c);  (A M)(r, c) = sum_t A(r, t) M(t, c)
            Scalar coeff;
            if (p == r) coeff += A(q, c);
            if (q == c) coeff -= A(r, p);
            sys((i * n + r) * n + c, q * n + p) = coeff;
          }
  }
  return n * n - rank(sys);
}

inline Matrix diag(std::initializer_list<Scalar> entries) {
  Matrix m(entries.size(), entries.size());
  std::size_t k = 0;
  for (const auto& s : entries) {
    m(k, k) = s;
    ++k;
  }
  return m;
}

}  // namespace testsupport
