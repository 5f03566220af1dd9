#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "behrend/euler.hpp"

namespace behrend {

struct BehrendTerm {
  ConeComponent component;
  EuVerdict eu;
  /// (-1)^{dim image} * mult * Eu(image)(p); zero when eu has no value.
  long contribution = 0;
};

struct BehrendEvaluation {
  Point point;
  /// Empty when an Eu term containing the point is unsupported.
  std::optional<long> value;
  /// Cone components whose image contains the point.
  std::vector<BehrendTerm> breakdown;
  /// Contributions of components dominating a component of Y, and the rest.
  long dominant_sum = 0;
  long other_sum = 0;
  std::string failure;
};

/// nu_Y = Eu(c_{Y/M}) evaluated pointwise. The cone decomposition is
/// computed once and reused across points.
class BehrendEvaluator {
 public:
  explicit BehrendEvaluator(Ideal J, std::uint64_t seed = 0);

  const Ideal& ideal() const { return J_; }
  const ConeDecomposition& cone() const { return cone_; }

  /// Throws PointNotOnVariety when p is not on V(J).
  BehrendEvaluation at(std::span<const mpq_class> p) const;

 private:
  Ideal J_;
  std::uint64_t seed_;
  ConeDecomposition cone_;
};

BehrendEvaluation behrend_value(const Ideal& J, std::span<const mpq_class> p, std::uint64_t seed = 0);

/// Intersection of the minimal primes of J other than Z; the unit ideal when
/// Z is the only one. p avoids the other components iff p is not on V(guard).
Ideal component_open_set_guard(const Ideal& J, const Ideal& Z);

/// Sum of multiplicities of the components of C_{Z/M} lying over Z.
int dominating_cone_multiplicity(const Ideal& Z);

/// (-1)^{dim Z} * dominating_cone_multiplicity(Z).
int smooth_general_value(const Ideal& Z);

struct ComponentReport {
  enum class Verdict { Pass, Violation, Inconclusive };
  PrimeComponent component;
  bool generically_reduced = false;
  int dim = 0;
  int generic_tangent_dim = 0;
  int sign_dim = 1;
  int sign_tangent = 1;
  int m = 0;
  Verdict verdict = Verdict::Inconclusive;
  std::string reason;
};

struct ConstancyCertificate {
  enum class Overall { NecessaryConditionsHold, NotConstant, Inconclusive };
  int sign = 1;
  bool sign_inferred = false;
  std::vector<ComponentReport> reports;
  Overall overall = Overall::Inconclusive;
  /// One line per violating component.
  std::vector<std::string> witnesses;
};

std::string to_string(ComponentReport::Verdict v);
std::string to_string(ConstancyCertificate::Overall o);

/// Necessary conditions for a constant Behrend function (-1)^d: every
/// component is generically reduced, has generic tangent dimension equal to
/// its dimension, m = 1, and (-1)^{dim Z} = sign. Passing does not prove
/// constancy; use behrend_value for a refutation in that case.
ConstancyCertificate constancy_falsifier(const Ideal& J, std::optional<int> sign = std::nullopt);

}  // namespace behrend
