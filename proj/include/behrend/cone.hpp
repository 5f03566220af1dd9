#pragma once

#include <string>
#include <vector>

#include "behrend/primes.hpp"

namespace behrend {

/// Presentation of J used for the cone: the base ring R, the extended ring
/// R[e1..ek] with one cone variable per generator, and the generators g_i.
struct ConeSetup {
  RingPtr base;
  RingPtr extended;
  std::vector<Polynomial> generators;
  std::vector<std::string> cone_vars;

  std::size_t k() const { return generators.size(); }
  /// Indices of the cone variables in the extended ring.
  std::vector<std::size_t> cone_indices() const;
};

/// Generators: the reduced degrevlex basis of J with redundant elements
/// dropped, so the presentation depends only on the ideal.
ConeSetup cone_setup(const Ideal& J, const std::string& stem = "e");

/// Kernel of R[e1..ek] -> R[t], e_i -> t*g_i. The graph ideal (e_i - t g_i)
/// is already t-saturated; `saturate_t` repeats the saturation as a check.
Ideal rees_ideal(const ConeSetup& setup, bool saturate_t = false);
Ideal rees_ideal(const Ideal& J, bool saturate_t = false);

/// rees_ideal(J) + J in R[e1..ek].
Ideal normal_cone_ideal(const ConeSetup& setup);
Ideal normal_cone_ideal(const Ideal& J);

struct ConeComponent {
  Ideal cone_prime;
  int multiplicity = 0;
  /// Closure of the projection to Y, as an ideal of R.
  Ideal image;
  int image_dimension = 0;
  PrimalityStatus status = PrimalityStatus::Undecided;
  /// The image is an irreducible component of Y.
  bool dominates = false;
};

struct ConeDecomposition {
  ConeSetup setup;
  Ideal cone_ideal;
  std::vector<ConeComponent> components;
  /// Minimal primes of J (the irreducible components of Y).
  std::vector<PrimeComponent> y_components;
};

ConeDecomposition cone_components(const Ideal& J, const std::string& stem = "e");

struct CycleTerm {
  Ideal prime;
  long coefficient = 0;
  int dimension = 0;
  PrimalityStatus status = PrimalityStatus::Undecided;
};

/// Formal integer combination of prime ideals with pairwise distinct primes
/// and nonzero coefficients.
struct Cycle {
  RingPtr ring;
  std::vector<CycleTerm> terms;

  /// Merges equal primes and drops zero coefficients.
  void add(const CycleTerm& t);
  Cycle operator+(const Cycle& other) const;
  Cycle operator*(long k) const;
  long coefficient_of(const Ideal& prime) const;
};

/// sum over cone components D of (-1)^{dim pi(D)} mult_D [pi(D)].
Cycle signed_support_cycle(const ConeDecomposition& cone);
Cycle signed_support_cycle(const Ideal& J);

}  // namespace behrend
