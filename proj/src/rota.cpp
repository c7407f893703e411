#include "liebax/rota.hpp"

namespace liebax {

namespace {

void check_shape(const LieAlgebra& L, const LinearMap& m, const char* what) {
  if (m.rows() != L.dim() || m.cols() != L.dim())
    throw Error(std::string(what) + " does not match the algebra dimension");
}

template <class F>
BilinearTable tabulate(std::size_t n, F&& f) {
  BilinearTable t{n, {}};
  t.entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t.entries.push_back(f(i, j));
  return t;
}

std::vector<Vector> images(const LinearMap& m) {
  std::vector<Vector> out;
  for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.column(j));
  return out;
}

Vector concat(const Vector& a, const Vector& b) {
  Vector v(a);
  v.insert(v.end(), b.begin(), b.end());
  return v;
}

Subspace span_of_images(const std::vector<Vector>& vs, std::size_t ambient) {
  return Subspace::span(vs, ambient);
}

}  // namespace

bool BilinearTable::is_zero() const {
  for (const auto& v : entries)
    if (!liebax::is_zero(v)) return false;
  return true;
}

BilinearTable rb_residual(const LieAlgebra& L, const LinearMap& R, const LinearMap& mu) {
  check_shape(L, R, "R");
  check_shape(L, mu, "weight");
  const std::size_t n = L.dim();
  const auto Re = images(R);
  return tabulate(n, [&](std::size_t i, std::size_t j) {
    Vector ei = unit_vector(n, i), ej = unit_vector(n, j);
    Vector inner = bracket(L, Re[i], ej) + bracket(L, ei, Re[j]) + mu * L.product(i, j);
    return bracket(L, Re[i], Re[j]) - R * inner;
  });
}

bool rb_check(const LieAlgebra& L, const LinearMap& R, const LinearMap& mu) {
  return rb_residual(L, R, mu).is_zero();
}

BilinearTable theta_map(const LieAlgebra& L, const LinearMap& R) {
  check_shape(L, R, "R");
  const std::size_t n = L.dim();
  const auto Re = images(R);
  return tabulate(n, [&](std::size_t i, std::size_t j) {
    Vector inner = bracket(L, Re[i], unit_vector(n, j)) + bracket(L, unit_vector(n, i), Re[j]);
    return bracket(L, Re[i], Re[j]) - R * inner;
  });
}

BilinearTable mcybe_residual(const LieAlgebra& L, const LinearMap& R, const Scalar& lambda) {
  BilinearTable t = theta_map(L, R);
  const Scalar l2 = lambda * lambda;
  for (std::size_t i = 0; i < t.n; ++i)
    for (std::size_t j = 0; j < t.n; ++j) t.entries[i * t.n + j] += l2 * L.product(i, j);
  return t;
}

LinearMap rb_from_mcybe(const LinearMap& R, const Scalar& lambda) {
  return Scalar(Rational(1, 2)) * (R - LinearMap::scalar(R.rows(), lambda));
}

bool r_matrix_check(const LieAlgebra& L, const LinearMap& R) {
  const BilinearTable t = theta_map(L, R);
  const std::size_t n = L.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        Vector s = bracket(L, t.entry(a, b), unit_vector(n, c)) + bracket(L, t.entry(b, c), unit_vector(n, a)) +
                   bracket(L, t.entry(c, a), unit_vector(n, b));
        if (!is_zero(s)) return false;
      }
  return true;
}

bool is_automorphism(const LieAlgebra& L, const LinearMap& phi) {
  check_shape(L, phi, "automorphism");
  if (!inverse(phi)) return false;
  const std::size_t n = L.dim();
  const auto pe = images(phi);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(phi * L.product(i, j) == bracket(L, pe[i], pe[j]))) return false;
  return true;
}

RBPair rb_transform(const LieAlgebra& L, const LinearMap& R, const LinearMap& mu, const RBTransform& how) {
  check_shape(L, R, "R");
  check_shape(L, mu, "weight");
  const Scalar half(Rational(1, 2));
  return std::visit(
      [&](const auto& t) -> RBPair {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, Compose>) {
          check_shape(L, t.gamma, "gamma");
          if (!is_centrum(L, t.gamma)) throw Error("compose: gamma is not in the centroid");
          return {R * t.gamma, mu * t.gamma};
        } else if constexpr (std::is_same_v<T, Conjugate>) {
          if (!is_automorphism(L, t.phi)) throw Error("conjugate: map is not an automorphism");
          const LinearMap inv = *inverse(t.phi);
          return {t.phi * R * inv, t.phi * mu * inv};
        } else if constexpr (std::is_same_v<T, Reflect>) {
          return {-mu - R, mu};
        } else {
          check_shape(L, t.Q, "Q");
          return {half * (t.Q - mu), mu};
        }
      },
      how);
}

SplitRB split_rb(const LieAlgebra& L, const Subspace& A1, const Subspace& A2, const LinearMap& mu) {
  const std::size_t n = L.dim();
  check_shape(L, mu, "weight");
  if (A1.ambient_dim() != n || A2.ambient_dim() != n) throw Error("split_rb: subspace in the wrong ambient space");
  if (A1.dim() + A2.dim() != n || sum(A1, A2).dim() != n) throw Error("split_rb: not a direct sum decomposition");
  if (!is_subalgebra(L, A1) || !is_subalgebra(L, A2)) throw Error("split_rb: summands must be subalgebras");
  if (!is_centrum(L, mu)) throw Error("split_rb: weight is not in the centroid");

  std::vector<Vector> cols = A1.basis();
  for (const auto& v : A2.basis()) cols.push_back(v);
  const Matrix change = Matrix::from_columns(cols, n);
  Matrix p1(n, n);
  for (std::size_t k = 0; k < A1.dim(); ++k) p1(k, k) = 1;
  const LinearMap proj = change * p1 * *inverse(change);

  auto square = [&](const Subspace& A) {
    std::vector<Vector> prods;
    for (const auto& v : A.basis())
      for (const auto& w : A.basis()) prods.push_back(bracket(L, v, w));
    return span_of_images(prods, n);
  };
  bool hypothesis = true;
  for (const Subspace* A : {&A1, &A2}) {
    const Subspace sq = square(*A);
    for (const auto& v : sq.basis()) hypothesis = hypothesis && sq.contains(mu * v);
  }
  SplitRB out{-(mu * proj), hypothesis, false};
  out.verified = rb_check(L, out.R, mu);
  return out;
}

LieAlgebra derived_product(const LieAlgebra& L, const LinearMap& R, const LinearMap& mu) {
  if (!rb_check(L, R, mu)) throw Error("derived_product: not a Rota-Baxter operator of the given weight");
  const std::size_t n = L.dim();
  const auto Re = images(R);
  LieAlgebra out(n, L.field(), L.basis_names());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out.set_product(i, j,
                      bracket(L, Re[i], unit_vector(n, j)) + bracket(L, unit_vector(n, i), Re[j]) + mu * L.product(i, j));
  return out;
}

LieAlgebra build_double(const LieAlgebra& L, const LinearMap& R, const LinearMap& mu) {
  check_shape(L, R, "R");
  check_shape(L, mu, "weight");
  const std::size_t n = L.dim();
  std::vector<std::string> names = L.basis_names();
  for (const auto& s : L.basis_names()) names.push_back(s + "_bar");
  LieAlgebra D(2 * n, L.field(), names);
  const auto Re = images(R);
  const Vector zero = zero_vector(n);
  auto mul = [&](const Vector& a, const Vector& b) { return bracket(L, a, b); };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Vector ea = unit_vector(n, a), eb = unit_vector(n, b);
      const Vector ab = L.product(a, b);
      // e_a * e_b
      D.set_product(a, b, concat(ab, zero));
      // e_a * bar(e_b): R[a,y] - [a,Ry] + bar([a,y])
      D.set_product(a, n + b, concat(R * ab - mul(ea, Re[b]), ab));
      // bar(e_a) * e_b: R[b,x] - [Rb,x] + bar([b,x])
      D.set_product(n + a, b, concat(R * ab - mul(Re[a], eb), ab));
      // bar(e_a) * bar(e_b): bar(-[Rb,y] - [b,Ry] - mu[b,y])
      D.set_product(n + a, n + b, concat(zero, -mul(Re[a], eb) - mul(ea, Re[b]) - mu * ab));
    }
  return D;
}

Vector i_map(const LinearMap& R, const LinearMap& mu, const Vector& x) { return concat(mu * x + R * x, x); }

Vector j_map(const LinearMap& R, const LinearMap& mu, const Vector& x) {
  return concat(mu * x, zero_vector(x.size())) - i_map(R, mu, x);
}

bool ideal_check_I(const LieAlgebra& L, const LinearMap& R, const LinearMap& mu) {
  const std::size_t n = L.dim();
  const LieAlgebra D = build_double(L, R, mu);
  std::vector<Vector> gens;
  for (std::size_t k = 0; k < n; ++k) gens.push_back(i_map(R, mu, unit_vector(n, k)));
  const Subspace I = Subspace::span(gens, 2 * n);
  for (const auto& g : gens)
    for (std::size_t k = 0; k < n; ++k) {
      const Vector bar = unit_vector(2 * n, n + k);
      if (!I.contains(bracket(D, g, bar)) || !I.contains(bracket(D, bar, g))) return false;
    }
  return true;
}

DoubleDecomposition double_decompose(const LieAlgebra& L, const LinearMap& R, const LinearMap& mu) {
  const std::size_t n = L.dim();
  auto mu_inv = inverse(mu);
  if (!mu_inv) throw Error("double_decompose: weight is not invertible");
  if (!rb_check(L, R, mu)) throw Error("double_decompose: not a Rota-Baxter operator of the given weight");

  DoubleDecomposition out{build_double(L, R, mu), Subspace(2 * n), Subspace(2 * n)};
  const LieAlgebra& D = out.double_algebra;
  std::vector<Vector> is, js;
  for (std::size_t k = 0; k < n; ++k) {
    const Vector x = mu_inv->column(k);
    is.push_back(i_map(R, mu, x));
    js.push_back(j_map(R, mu, x));
  }
  out.I = Subspace::span(is, 2 * n);
  out.J = Subspace::span(js, 2 * n);
  out.ideals = is_ideal(D, out.I) && is_ideal(D, out.J);
  out.direct = out.I.dim() == n && out.J.dim() == n && sum(out.I, out.J).dim() == 2 * n;
  out.cross_zero = true;
  for (const auto& u : is)
    for (const auto& v : js)
      out.cross_zero = out.cross_zero && is_zero(bracket(D, u, v)) && is_zero(bracket(D, v, u));
  // f(e_a) * f(e_b) == f([e_a, e_b]) with f = i o mu^-1 (resp. j o mu^-1)
  auto preserves = [&](const std::vector<Vector>& f) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        Vector image(2 * n);
        const Vector ab = L.product(a, b);
        for (std::size_t k = 0; k < n; ++k)
          if (!ab[k].is_zero()) image += ab[k] * f[k];
        if (!(bracket(D, f[a], f[b]) == image)) return false;
      }
    return true;
  };
  out.i_isomorphism = preserves(is);
  out.j_isomorphism = preserves(js);
  return out;
}

}  // namespace liebax
