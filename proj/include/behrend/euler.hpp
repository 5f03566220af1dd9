#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "behrend/cone.hpp"

namespace behrend {

enum class EuRule { Outside, Nonsingular, CurveMultiplicity, PlaneCone, AluffiCone, Unsupported };

std::string to_string(EuRule r);

struct EuVerdict {
  std::optional<long> value;
  EuRule rule = EuRule::Unsupported;
  /// Why a rule did not apply, or what was assumed.
  std::string note;
};

struct EuQuery {
  Ideal variety;
  Point point;
  /// Known primality of the variety; computed when absent.
  std::optional<PrimalityStatus> status;
};

/// First matching rule: outside, nonsingular, curve multiplicity, cone over
/// a smooth plane curve d(2-d), cone over a smooth curve 2-2g-d.
/// Throws std::invalid_argument when the variety is provably not prime.
EuVerdict eu_point(const EuQuery& q, std::uint64_t seed = 0);

/// Hilbert-Samuel multiplicity of a curve at a point: degree of the tangent
/// cone, confirmed by the length of V + (generic hyperplane) at the point.
int curve_multiplicity(const Ideal& V, std::span<const mpq_class> p, std::uint64_t seed = 0);

/// Degree of the tangent cone at p alone.
int tangent_cone_degree(const Ideal& V, std::span<const mpq_class> p);
/// Tangent cone of V at p, moved to the origin.
Ideal tangent_cone(const Ideal& V, std::span<const mpq_class> p);
/// Length of the local ring of R/I at p, an isolated point of V(I).
/// Throws ResourceLimit if the length has not stabilised by m^64.
int local_length(const Ideal& I, std::span<const mpq_class> p);

struct ConeCurveData {
  enum class Status { Cone, NotHomogeneous, NotCurve, Singular };
  Status status = Status::NotHomogeneous;
  int degree = 0;
  int genus = 0;
  /// The curve lies in P^2.
  bool plane = false;
};

std::string to_string(ConeCurveData::Status s);

/// Detects V - vertex as the affine cone over a smooth projective curve and
/// reads off its degree and arithmetic genus.
ConeCurveData cone_over_curve_data(const Ideal& V, std::span<const mpq_class> vertex);

struct EuTerm {
  Ideal prime;
  long coefficient = 0;
  EuVerdict verdict;
};

struct ConstructibleEvaluation {
  Point point;
  /// Empty when some term whose support contains the point is unsupported.
  std::optional<long> value;
  std::vector<EuTerm> per_term;
};

ConstructibleEvaluation eu_cycle(const Cycle& c, std::span<const mpq_class> p, std::uint64_t seed = 0);

/// The point satisfies every generator.
bool vanishes_at(const Ideal& I, std::span<const mpq_class> p);

/// I with p moved to the origin.
Ideal translate(const Ideal& I, std::span<const mpq_class> p);

/// All k x k minors of a polynomial matrix, k >= 1.
std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t k);

}  // namespace behrend
