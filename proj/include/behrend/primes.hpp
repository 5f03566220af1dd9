#pragma once

#include <string>
#include <vector>

#include "behrend/ideal.hpp"

namespace behrend {

enum class PrimalityStatus { Certified, Undecided };

std::string to_string(PrimalityStatus s);

struct PrimeComponent {
  Ideal prime;
  int multiplicity = 0;
  int dimension = 0;
  int degree = 0;
  PrimalityStatus status = PrimalityStatus::Undecided;
  /// How primality was established ("linear", "hypersurface", "eliminant", ...).
  std::string method;
  /// Irreducibility over C is known (rational parametrisation by linear
  /// elimination, or degree 1). Otherwise the component is only known to be
  /// Q-irreducible and reports flag it.
  bool geometrically_irreducible = false;
};

/// Thrown when a prime passed to multiplicity_along is not minimal over I.
class NotMinimal : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Minimal primes of I by recursive splitting along factors of basis
/// elements, with linear variables eliminated first. Sorted by dimension
/// (largest first), then by printed generators. Requires I != (1).
std::vector<PrimeComponent> minimal_primes(const Ideal& I, bool with_multiplicity = true);

/// Length of (R/I) localised at P for P minimal over I: with u independent
/// modulo P, dim_{k(u)} k(u)[v]/(I + P^N) / dim_{k(u)} k(u)[v]/P for N large.
int multiplicity_along(const Ideal& I, const Ideal& P, bool check_minimal = true);

/// P contains I and no associated prime of I lies strictly inside P.
bool is_minimal_over(const Ideal& I, const Ideal& P);

/// Saturation by an ideal: I : J^infinity.
Ideal saturate(const Ideal& I, const Ideal& J);

}  // namespace behrend
