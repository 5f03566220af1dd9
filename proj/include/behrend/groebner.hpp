#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "behrend/polynomial.hpp"

namespace behrend {

/// Thrown when a configured work bound (e.g. max S-pairs) is exceeded.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GroebnerOptions {
  /// Module mode: indices of the variables that tag free-module components.
  /// Every input term carries exactly one of them with exponent 1, and pairs
  /// whose leading terms sit in different components are never formed.
  std::vector<std::size_t> component_vars;
  /// 0 = unbounded.
  std::size_t max_pairs = 0;
};

/// A reduced Groebner basis: monic, interreduced, sorted ascending by
/// leading monomial. Unique for a given ideal and order.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, OrderPtr order, std::vector<Polynomial> elements);

  const RingPtr& ring() const { return ring_; }
  const OrderPtr& order() const { return order_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }

  /// The basis is {1}.
  bool is_unit() const;
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
  std::vector<Monomial> leading_monomials() const;

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b);

 private:
  RingPtr ring_;
  OrderPtr order_;
  std::vector<Polynomial> elements_;
};

/// Full multivariate division: no term of the result is divisible by a
/// leading monomial of G.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G, const OrderPtr& order);

struct Division {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// f = sum q_i * G_i + remainder, with the usual standard-representation
/// degree bounds.
Division divide(const Polynomial& f, std::span<const Polynomial> G, const OrderPtr& order);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Buchberger's algorithm with the Gebauer-Moeller criteria and sugar pair
/// selection. Returns the reduced basis of the ideal generated by `gens`.
GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> gens, const OrderPtr& order,
                         const GroebnerOptions& options = {});

/// Convenience overload; `gens` must be nonempty.
GroebnerBasis buchberger(std::span<const Polynomial> gens, const OrderPtr& order,
                         const GroebnerOptions& options = {});

/// True when every S-polynomial of `G` reduces to zero modulo `G`.
bool is_groebner_basis(std::span<const Polynomial> G, const OrderPtr& order,
                       const GroebnerOptions& options = {});

}  // namespace behrend
