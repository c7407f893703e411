#include "liebax/centroid.hpp"

#include <random>

namespace liebax {

namespace {

// First nonzero entry of the column-major flattening.
const Scalar* leading_entry(const LinearMap& m) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) return &m(i, j);
  return nullptr;
}

bool is_scalar_map(const LinearMap& m) {
  return m == Matrix::scalar(m.rows(), m(0, 0));
}

// Coordinates of m in the span of the given maps.
std::optional<Vector> coordinates_in(const std::vector<LinearMap>& maps, const LinearMap& m) {
  std::vector<Vector> cols;
  for (const auto& b : maps) cols.push_back(b.vec());
  return solve(Matrix::from_columns(cols, m.rows() * m.cols()), m.vec());
}

std::vector<Integer> divisors(Integer m) {
  m = abs(m);
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    small.push_back(d);
    if (d * d != m) large.push_back(m / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Distinct rational roots of sum_i coeffs[i] x^i, or nullopt when the
// coefficients are too large for divisor enumeration.
std::optional<std::vector<Rational>> rational_roots(std::vector<Rational> coeffs) {
  Integer lcm_den = 1;
  for (const auto& c : coeffs) lcm_den = lcm(lcm_den, c.get_den());
  std::vector<Integer> ints;
  for (const auto& c : coeffs) ints.push_back(Integer(c * lcm_den));
  std::vector<Rational> roots;
  while (ints.size() > 1 && ints.front() == 0) {
    if (roots.empty()) roots.push_back(0);
    ints.erase(ints.begin());
  }
  if (ints.size() <= 1) return roots;
  const Integer limit("1000000000000");
  if (abs(ints.front()) > limit || abs(ints.back()) > limit) return std::nullopt;
  auto eval = [&](const Rational& x) {
    Rational acc = 0;
    for (auto it = ints.rbegin(); it != ints.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
  };
  for (const auto& p : divisors(ints.front()))
    for (const auto& q : divisors(ints.back()))
      for (int sign : {1, -1}) {
        Rational x(sign * p, q);
        x.canonicalize();
        if (sgn(eval(x)) != 0) continue;
        bool seen = false;
        for (const auto& r : roots) seen = seen || r == x;
        if (!seen) roots.push_back(x);
      }
  return roots;
}

// Primitive idempotents E_1..E_k spanning a commutative centroid that splits
// over the base field into one-dimensional blocks.
std::optional<std::vector<LinearMap>> split_idempotents(const CentroidBasis& basis) {
  const std::size_t k = basis.dim();
  const std::size_t n = basis.elements.front().rows();
  const auto& el = basis.elements;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (!(el[i] * el[j] == el[j] * el[i])) return std::nullopt;

  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> weight(1, 50);
  for (int attempt = 0; attempt < 8; ++attempt) {
    LinearMap g(n, n);
    for (std::size_t i = 0; i < k; ++i)
      g += Scalar(attempt == 0 ? static_cast<long>(i + 1) : weight(rng)) * el[i];

    std::vector<LinearMap> powers{LinearMap::identity(n)};
    std::optional<Vector> relation;
    while (powers.size() <= k) {
      LinearMap next = powers.back() * g;
      relation = coordinates_in(powers, next);
      if (relation) break;
      powers.push_back(std::move(next));
    }
    if (!relation || powers.size() != k) continue;

    // minimal polynomial x^k - sum_i relation[i] x^i
    std::vector<Rational> poly;
    bool rational_coeffs = true;
    for (const auto& c : *relation) {
      rational_coeffs = rational_coeffs && c.is_rational();
      poly.push_back(-c.a());
    }
    if (!rational_coeffs) continue;
    poly.push_back(1);
    auto roots = rational_roots(poly);
    if (!roots || roots->size() != k) continue;

    std::vector<LinearMap> idempotents;
    for (std::size_t j = 0; j < k; ++j) {
      LinearMap e = LinearMap::identity(n);
      for (std::size_t l = 0; l < k; ++l) {
        if (l == j) continue;
        Scalar denom((*roots)[j] - (*roots)[l]);
        e = e * (denom.inverse() * (g - LinearMap::scalar(n, Scalar((*roots)[l]))));
      }
      idempotents.push_back(std::move(e));
    }
    return idempotents;
  }
  return std::nullopt;
}

SqrtResult blockwise_sqrt(const LinearMap& target, const std::vector<LinearMap>& idempotents,
                          const Field& field) {
  std::vector<Scalar> alphas;
  for (const auto& e : idempotents) {
    const Scalar* lead = leading_entry(e);
    LinearMap te = target * e;
    std::size_t at = 0;
    for (; at < e.rows() * e.cols(); ++at)
      if (&e(at % e.rows(), at / e.rows()) == lead) break;
    Scalar alpha = te(at % e.rows(), at / e.rows()) / *lead;
    if (!(te == alpha * e)) return {SqrtVerdict::Undecided, std::nullopt, 1, "target is not block-scalar"};
    alphas.push_back(alpha);
  }
  const std::size_t n = target.rows();
  std::vector<std::optional<Scalar>> roots;
  bool all_found = true;
  for (const auto& a : alphas) {
    roots.push_back(sqrt_in_field(a, field));
    all_found = all_found && roots.back().has_value();
  }
  auto assemble = [&](const std::vector<Scalar>& rs) {
    LinearMap mu(n, n);
    for (std::size_t j = 0; j < rs.size(); ++j) mu += rs[j] * idempotents[j];
    return mu;
  };
  if (all_found) {
    std::vector<Scalar> rs;
    for (const auto& r : roots) rs.push_back(*r);
    return {SqrtVerdict::Found, assemble(rs), 1, "blockwise over " + std::to_string(alphas.size()) + " idempotents"};
  }
  if (!field.is_rational())
    return {SqrtVerdict::Undecided, std::nullopt, 1, "a block needs a second square root"};
  std::int64_t d = 1;
  for (std::size_t j = 0; j < alphas.size(); ++j) {
    if (roots[j]) continue;
    std::int64_t dj = squarefree_part(alphas[j].a()).d;
    if (d != 1 && dj != d)
      return {SqrtVerdict::None, std::nullopt, 1, "blocks need square roots of different discriminants"};
    d = dj;
  }
  std::vector<Scalar> rs;
  for (const auto& a : alphas) rs.push_back(*sqrt_in_field(a, Field(d)));
  return {SqrtVerdict::Extension, assemble(rs), d, "blockwise over Q(sqrt(" + std::to_string(d) + "))"};
}

}  // namespace

std::string to_string(SqrtVerdict v) {
  switch (v) {
    case SqrtVerdict::Found: return "FOUND";
    case SqrtVerdict::Extension: return "EXTENSION";
    case SqrtVerdict::None: return "NONE";
    case SqrtVerdict::Undecided: return "UNDECIDED";
  }
  return "?";
}

std::optional<Vector> CentroidBasis::coordinates(const LinearMap& mu) const {
  if (elements.empty()) return mu.is_zero() ? std::optional<Vector>(Vector{}) : std::nullopt;
  return coordinates_in(elements, mu);
}

LinearMap CentroidBasis::combine(const Vector& coords) const {
  if (coords.size() != elements.size()) throw Error("centroid coordinate count mismatch");
  LinearMap m(elements.front().rows(), elements.front().cols());
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (!coords[k].is_zero()) m += coords[k] * elements[k];
  return m;
}

CentroidBasis centroid_basis(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  // Unknown M(p, q) sits at column q*n + p. Commuting with every left
  // multiplication ad(e_i) is enough for an antisymmetric product, because
  // right multiplication by e_i is -ad(e_i); otherwise both families are
  // imposed.
  const bool antisymmetric = is_antisymmetric(L);
  const std::size_t families = antisymmetric ? 1 : 2;
  Matrix system(families * n * n * n, n * n);
  for (std::size_t fam = 0; fam < families; ++fam)
    for (std::size_t i = 0; i < n; ++i) {
      // A(t, s) = coefficient of e_t in e_i * e_s (left) or e_s * e_i (right)
      auto A = [&](std::size_t t, std::size_t s) -> const Scalar& {
        return fam == 0 ? L.coeff(i, s, t) : L.coeff(s, i, t);
      };
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
          const std::size_t row = ((fam * n + i) * n + r) * n + s;
          // (M A - A M)(r, s) = sum_t M(r, t) A(t, s) - A(r, t) M(t, s)
          for (std::size_t t = 0; t < n; ++t) {
            if (!A(t, s).is_zero()) system(row, t * n + r) += A(t, s);
            if (!A(r, t).is_zero()) system(row, s * n + t) -= A(r, t);
          }
        }
    }
  Subspace solutions = Subspace::span(null_space(system), n * n);
  CentroidBasis basis;
  for (const auto& v : solutions.basis()) basis.elements.push_back(Matrix::unvec(v, n));
  basis.oversized = basis.dim() > n;
  return basis;
}

bool is_centrum(const LieAlgebra& L, const LinearMap& mu) {
  const std::size_t n = L.dim();
  if (mu.rows() != n || mu.cols() != n) throw Error("map size does not match algebra");
  std::vector<Vector> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(mu.column(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector lhs = mu * L.product(i, j);
      if (!(lhs == bracket(L, images[i], unit_vector(n, j)))) return false;
      if (!(lhs == bracket(L, unit_vector(n, i), images[j]))) return false;
    }
  return true;
}

LinearMap direct_sum_centrum(const LieAlgebra& L, const std::vector<Subspace>& ideals,
                             const std::vector<Scalar>& weights) {
  const std::size_t n = L.dim();
  if (ideals.size() != weights.size()) throw Error("one weight per ideal is required");
  std::vector<Vector> columns;
  std::vector<Scalar> diagonal;
  for (std::size_t k = 0; k < ideals.size(); ++k) {
    if (ideals[k].ambient_dim() != n) throw Error("ideal lives in the wrong ambient space");
    if (!is_ideal(L, ideals[k])) throw Error("subspace " + std::to_string(k) + " is not an ideal");
    for (const auto& v : ideals[k].basis()) {
      columns.push_back(v);
      diagonal.push_back(weights[k]);
    }
  }
  if (columns.size() != n) throw Error("ideals do not form a direct sum decomposition");
  Matrix change = Matrix::from_columns(columns, n);
  auto inv = inverse(change);
  if (!inv) throw Error("ideals do not form a direct sum decomposition");
  Matrix diag(n, n);
  for (std::size_t i = 0; i < n; ++i) diag(i, i) = diagonal[i];
  return change * diag * *inv;
}

std::optional<QuadraticCentroid> quadratic_centroid(const LieAlgebra& L, const CentroidBasis& basis) {
  if (basis.dim() != 2) return std::nullopt;
  const std::size_t n = L.dim();
  const LinearMap id = LinearMap::identity(n);
  const LinearMap& t0 = is_scalar_map(basis.elements[0]) ? basis.elements[1] : basis.elements[0];
  auto rel = coordinates_in({id, t0}, t0 * t0);
  if (!rel) return std::nullopt;
  // t0^2 = e + f t0; shift t = t0 - f/2 so that t^2 = e + f^2/4.
  const Scalar f = (*rel)[1];
  LinearMap t = t0 - LinearMap::scalar(n, f / Scalar(2));
  Scalar raw = (*rel)[0] + f * f / Scalar(4);
  if (!raw.is_rational()) return std::nullopt;
  std::int64_t square = 0;
  if (raw.is_zero()) {
    t = leading_entry(t)->inverse() * t;
  } else {
    auto split = squarefree_part(raw.a());
    square = split.d;
    t = Scalar(split.factor).inverse() * t;
    if (sgn(leading_entry(t)->a()) < 0) t = -t;
  }
  return QuadraticCentroid{t, square};
}

SqrtResult centroid_sqrt(const LieAlgebra& L, const LinearMap& target) {
  const CentroidBasis basis = centroid_basis(L);
  if (!basis.coordinates(target)) throw Error("target is not in the centroid");
  const std::size_t n = L.dim();
  const Field& field = L.field();
  const LinearMap id = LinearMap::identity(n);

  if (basis.dim() == 1) {
    const Scalar lambda = target(0, 0);
    if (auto s = sqrt_in_field(lambda, field)) return {SqrtVerdict::Found, *s * id, 1, "scalar centroid"};
    if (field.is_rational()) {
      auto split = squarefree_part(lambda.a());
      return {SqrtVerdict::Extension, Scalar(0, split.factor, split.d) * id, split.d, "scalar centroid"};
    }
    return {SqrtVerdict::Undecided, std::nullopt, 1, "scalar has no root in " + field.to_string()};
  }

  if (basis.dim() == 2) {
    auto quad = quadratic_centroid(L, basis);
    if (!quad) return {SqrtVerdict::Undecided, std::nullopt, 1, "two-dimensional centroid of unknown shape"};
    const LinearMap& t = quad->generator;
    auto coords = coordinates_in({id, t}, target);
    const Scalar p = (*coords)[0];
    const Scalar c = (*coords)[1];

    if (quad->square == 0) {
      // (a + b t)^2 = a^2 + 2ab t with t^2 = 0
      if (p.is_zero())
        return c.is_zero() ? SqrtResult{SqrtVerdict::Found, LinearMap(n, n), 1, "nilpotent centroid"}
                           : SqrtResult{SqrtVerdict::None, std::nullopt, 1, "nilpotent part without a root"};
      if (auto a = sqrt_in_field(p, field))
        return {SqrtVerdict::Found, *a * id + (c / (Scalar(2) * *a)) * t, 1, "nilpotent centroid"};
      if (!field.is_rational()) return {SqrtVerdict::Undecided, std::nullopt, 1, "needs a second square root"};
      auto split = squarefree_part(p.a());
      Scalar a(0, split.factor, split.d);
      return {SqrtVerdict::Extension, a * id + (c / (Scalar(2) * a)) * t, split.d, "nilpotent centroid"};
    }

    if (quad->square == 1) {
      const Scalar half(Rational(1, 2));
      return blockwise_sqrt(target, {half * (id + t), half * (id - t)}, field);
    }

    // The centroid is the field Q(sqrt D) with t acting as sqrt D.
    const std::int64_t D = quad->square;
    if (!field.is_rational()) {
      if (c.is_zero()) {
        if (auto s = sqrt_in_field(p, field)) return {SqrtVerdict::Found, *s * id, 1, "centroid field"};
        if (auto s = sqrt_in_field(p / Scalar(D), field)) return {SqrtVerdict::Found, *s * t, 1, "centroid field"};
      }
      return {SqrtVerdict::Undecided, std::nullopt, 1, "nested quadratic extension"};
    }
    const Scalar z(p.a(), c.a(), D);
    if (auto w = sqrt_in_field(z, Field(D)))
      return {SqrtVerdict::Found, Scalar(w->a()) * id + Scalar(w->b()) * t, 1, "centroid field Q(sqrt(" + std::to_string(D) + "))"};
    // Over Q(sqrt d') with d' != D the centroid stays a field, and z becomes a
    // square there iff z/d' is a square in Q(sqrt D); that forces the norm of z
    // to be a rational square.
    auto s = rational_sqrt(z.norm());
    if (!s) return {SqrtVerdict::None, std::nullopt, 1, "norm of the target is not a rational square"};
    for (const Rational& half : {Rational((z.a() + *s) / 2), Rational((z.a() - *s) / 2)}) {
      if (sgn(half) == 0) continue;
      const std::int64_t d = squarefree_part(half).d;
      if (d == 1 || d == D) continue;
      auto w = sqrt_in_field(z / Scalar(Rational(d)), Field(D));
      if (!w) continue;
      const Scalar root_d(0, 1, d);
      LinearMap mu = (root_d * Scalar(w->a())) * id + (root_d * Scalar(w->b())) * t;
      return {SqrtVerdict::Extension, mu, d, "centroid field Q(sqrt(" + std::to_string(D) + ")) lifted"};
    }
    return {SqrtVerdict::Undecided, std::nullopt, 1, "no lift found"};
  }

  auto idempotents = split_idempotents(basis);
  if (!idempotents) return {SqrtVerdict::Undecided, std::nullopt, 1, "centroid does not split over the base field"};
  return blockwise_sqrt(target, *idempotents, field);
}

}  // namespace liebax
