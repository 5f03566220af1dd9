#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "behrend/groebner.hpp"
#include "behrend/polynomial.hpp"

namespace behrend {

/// Finite generator list in a fixed ring. Groebner bases are computed on
/// demand and cached per order; copies share the cache.
class Ideal {
 public:
  explicit Ideal(RingPtr ring, std::vector<Polynomial> generators = {});
  static Ideal unit(const RingPtr& ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }

  /// Cached reduced basis; `order` defaults to degrevlex.
  const GroebnerBasis& groebner(const OrderPtr& order = nullptr) const;

  bool is_zero() const { return generators_.empty(); }
  bool is_unit() const { return groebner().is_unit(); }
  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;
  bool is_monomial() const;
  bool is_homogeneous() const;

  /// Ideal generated by the reduced degrevlex basis.
  Ideal reduced() const;
  Ideal operator+(const Ideal& other) const;
  Ideal operator+(const Polynomial& f) const;
  Ideal operator*(const Ideal& other) const;
  Ideal power(unsigned e) const;

  std::vector<std::string> to_strings() const;
  std::string to_string() const;

  /// Equality as ideals (same reduced degrevlex basis).
  friend bool operator==(const Ideal& a, const Ideal& b);

  /// Largest number of generators/pairs tolerated by basis computations; 0 = unbounded.
  static void set_max_pairs(std::size_t bound);
  static std::size_t max_pairs();

 private:
  struct Cache {
    std::mutex mutex;
    std::vector<std::pair<OrderPtr, std::unique_ptr<GroebnerBasis>>> bases;
  };
  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

/// I intersected with the subring of the variables not in `drop`, via a
/// block-order basis. The result lives in the same ring.
Ideal eliminate(const Ideal& I, std::span<const std::size_t> drop);

/// Moves an ideal whose generators involve only the first target->size()
/// variables into `target` (a prefix of the ring's variables).
Ideal restrict_to(const Ideal& I, const RingPtr& target);

/// Extends an ideal of a prefix ring into a larger ring.
Ideal extend_to(const Ideal& I, const RingPtr& target);

Ideal intersect(const Ideal& I, const Ideal& J);
Ideal quotient(const Ideal& I, const Polynomial& f);
Ideal quotient(const Ideal& I, const Ideal& J);
/// I : f^infinity by iterated quotients until the chain stabilises.
Ideal saturate(const Ideal& I, const Polynomial& f);

/// f lies in the radical of I (Rabinowitsch test).
bool in_radical(const Polynomial& f, const Ideal& I);
bool same_radical(const Ideal& I, const Ideal& J);

/// Krull dimension of R/I; -1 for the unit ideal.
int dimension(const Ideal& I);
/// A maximal independent set modulo the degrevlex leading ideal.
std::vector<std::size_t> independent_set(const Ideal& I);

/// Hilbert series of R/I written as numerator(t) / (1 - t)^dim with no
/// common factor; numerator coefficients listed from t^0.
struct HilbertSeries {
  std::vector<mpz_class> numerator;
  int dim = 0;

  mpz_class degree() const;
  /// Q'(1) for the reduced numerator Q.
  mpz_class numerator_derivative_at_one() const;
};

/// Hilbert series of R/M for the monomial ideal generated by `monomials`.
HilbertSeries hilbert_series_monomial(std::size_t nvars, const std::vector<Monomial>& monomials);
/// Requires homogeneous generators; throws std::invalid_argument otherwise.
HilbertSeries hilbert_series(const Ideal& I);
int hilbert_degree(const Ideal& I);
/// Degree of the projective closure of V(I) (homogenised ideal).
int affine_degree(const Ideal& I);
/// f homogenised by the last variable of `target`, a ring extending f's by one variable.
Polynomial homogenize(const Polynomial& f, const RingPtr& target);
/// Homogenisation of I with respect to a new last variable `h`.
Ideal homogenize(const Ideal& I, const RingPtr& with_h);

using PolyMatrix = std::vector<std::vector<Polynomial>>;
/// Rows = generators, columns = variables.
PolyMatrix jacobian(const Ideal& I);

/// Thrown when a point does not satisfy the generators.
class PointNotOnVariety : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

int tangent_dimension_at_point(const Ideal& I, std::span<const mpq_class> point);

/// Rank of a polynomial matrix over the fraction field of R/P, P prime.
std::size_t rank_modulo_prime(const PolyMatrix& m, const Ideal& P);

/// n - rank of the Jacobian of J's generators over the function field of V(P).
int generic_tangent_dimension(const Ideal& J, const Ideal& P);

/// Number of standard monomials of R/I, when finite.
std::optional<std::size_t> colength(const Ideal& I);

}  // namespace behrend
