#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liebax/liealg.hpp"

namespace liebax {

/// Canonical basis of Cent(L), the maps commuting with every multiplication.
struct CentroidBasis {
  std::vector<LinearMap> elements;
  /// Set when dim Cent(L) exceeds dim L; square-root search is then unlikely
  /// to be meaningful.
  bool oversized = false;

  std::size_t dim() const { return elements.size(); }
  /// Coordinates of mu in `elements`, absent when mu is not in the span.
  std::optional<Vector> coordinates(const LinearMap& mu) const;
  LinearMap combine(const Vector& coords) const;
};

CentroidBasis centroid_basis(const LieAlgebra& L);

/// mu([e_i, e_j]) == [mu(e_i), e_j] == [e_i, mu(e_j)] for all i, j.
bool is_centrum(const LieAlgebra& L, const LinearMap& mu);

/// Acts as weights[k] * id on ideals[k]. The ideals must be ideals of L whose
/// direct sum is all of L.
LinearMap direct_sum_centrum(const LieAlgebra& L, const std::vector<Subspace>& ideals,
                             const std::vector<Scalar>& weights);

/// A non-identity centroid element t with t^2 = square * id, where square is a
/// square-free integer or zero. Exists exactly when dim Cent(L) == 2 and the
/// centroid is commutative.
struct QuadraticCentroid {
  LinearMap generator;
  std::int64_t square;
};
std::optional<QuadraticCentroid> quadratic_centroid(const LieAlgebra& L, const CentroidBasis& basis);

enum class SqrtVerdict { Found, Extension, None, Undecided };
std::string to_string(SqrtVerdict v);

struct SqrtResult {
  SqrtVerdict verdict = SqrtVerdict::Undecided;
  /// Set for Found and Extension; for Extension its entries live in Q(sqrt d).
  std::optional<LinearMap> mu;
  /// Discriminant of the extension for Extension, 1 otherwise.
  std::int64_t extension_d = 1;
  std::string note;
};

/// Solves mu^2 == target with mu in the centroid. Throws when target is not
/// in the centroid span.
SqrtResult centroid_sqrt(const LieAlgebra& L, const LinearMap& target);

}  // namespace liebax
