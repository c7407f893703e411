#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liebax/tensor.hpp"

namespace liebax {

enum class Verdict {
  NotBialgebra,
  Triangular,
  Factorizable,
  AlmostFactorizable,
  Quasitriangular,
  SubtypeUndecided,
  /// Only from classify_nonskew: CYBE fails or the symmetric part is not invariant.
  NotCybeSolution,
};
std::string to_string(Verdict v);
bool is_bialgebra(Verdict v);

/// A named yes/no verification recorded during classification.
struct Check {
  std::string name;
  bool passed = false;
};

struct ClassificationReport {
  Verdict verdict = Verdict::SubtypeUndecided;
  std::optional<LinearMap> nu;
  /// A square root of -nu in the centroid, or -(R + R^*) for non-skew input.
  std::optional<LinearMap> mu;
  std::optional<std::int64_t> extension_d;
  /// Tensor r' with the same cobracket whose operator is Rota-Baxter of weight
  /// witness_weight and satisfies R' + R'^* + witness_weight == 0.
  std::optional<Tensor2> witness;
  std::optional<LinearMap> witness_weight;
  std::optional<BilinearTable> theta;
  std::vector<Check> checks;
  std::string note;

  bool all_checks_pass() const;
  /// Looks up a recorded check; absent when it was never run.
  std::optional<bool> check(const std::string& name) const;
};

/// theta(x, y) = [Rx, Ry] - R([Rx, y] + [x, Ry]) with R = R_r.
/// Throws on degenerate w or non-skew r.
BilinearTable theta(const LieAlgebra& L, const BilinearForm& w, const Tensor2& r);
bool theta_skew_check(const BilinearTable& t);
/// w(theta(e_i, e_j), e_k) == w(e_i, theta(e_j, e_k))
bool theta_form_check(const BilinearForm& w, const BilinearTable& t);
/// [theta(x,y),z] + [theta(y,z),x] + [theta(z,x),y] == 0 on basis triples.
bool theta_cyclic_check(const LieAlgebra& L, const BilinearTable& t);

/// The nu in the centroid with nu([e_i, e_j]) == theta(e_i, e_j), if any.
std::optional<LinearMap> extract_nu(const LieAlgebra& L, const BilinearTable& t);

/// Classifies the coboundary structure of a skew r on the quadratic algebra (L, w).
/// Throws when w is degenerate or not invariant, or r is not skew.
ClassificationReport classify(const LieAlgebra& L, const BilinearForm& w, const Tensor2& r);
/// Classification through the operator route for arbitrary r.
ClassificationReport classify_nonskew(const LieAlgebra& L, const BilinearForm& w, const Tensor2& r);

enum class Simplicity { AbsolutelySimple, SimpleNotAbsolutely, Unknown };
std::string to_string(Simplicity s);
Simplicity absolute_simplicity(const LieAlgebra& L);

struct DoubleReport {
  LieAlgebra double_algebra;
  std::vector<Check> checks;
  bool ok() const;
};
/// Structure checks on the classical double matching the report's verdict.
/// Throws when the verdict is not a bialgebra verdict.
DoubleReport double_diagnostics(const LieAlgebra& L, const BilinearForm& w, const Tensor2& r,
                                const ClassificationReport& report);

std::string render_text(const ClassificationReport& report, const LieAlgebra& L);

}  // namespace liebax
