#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "behrend/monomial.hpp"
#include "behrend/order.hpp"
#include "behrend/ring.hpp"

namespace behrend {

struct Term {
  Monomial mono;
  mpq_class coeff;
};

using Point = std::vector<mpq_class>;

/// Sparse multivariate polynomial with exact coefficients. Terms are stored
/// strictly descending under the polynomial's order and never carry a zero
/// coefficient. Arithmetic between polynomials of the same ring but different
/// orders produces a result in the left operand's order.
class Polynomial {
 public:
  Polynomial(RingPtr ring, OrderPtr order = nullptr);
  Polynomial(RingPtr ring, OrderPtr order, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, const mpq_class& c, OrderPtr order = nullptr);
  static Polynomial variable(RingPtr ring, std::size_t index, OrderPtr order = nullptr);
  static Polynomial monomial(RingPtr ring, const Monomial& m, const mpq_class& c = 1,
                             OrderPtr order = nullptr);

  const RingPtr& ring() const { return ring_; }
  const OrderPtr& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const mpq_class& leading_coeff() const { return terms_.front().coeff; }

  Polynomial with_order(const OrderPtr& order) const;
  /// Same coefficients and exponents, moved into another ring with identical
  /// arity semantics given by `index_map` (old variable i -> new variable
  /// index_map[i]).
  Polynomial map_variables(const RingPtr& target, std::span<const std::size_t> index_map,
                           OrderPtr order = nullptr) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const mpq_class& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const mpq_class& c) { return a *= c; }
  friend Polynomial operator*(const mpq_class& c, Polynomial a) { return a *= c; }

  Polynomial pow(unsigned e) const;
  Polynomial times_term(const Monomial& m, const mpq_class& c) const;
  /// this -= c * m * g, the basic reduction step.
  void subtract_multiple(const Polynomial& g, const Monomial& m, const mpq_class& c);
  Polynomial monic() const;

  int total_degree() const;
  int degree_in(std::size_t var) const;
  /// Lowest total degree among the terms; -1 for zero.
  int lowest_degree() const;
  bool is_homogeneous() const;
  bool is_linear() const;
  /// Homogeneous component of the given total degree.
  Polynomial homogeneous_part(int degree) const;
  /// Variables that occur in some term.
  std::vector<std::size_t> support() const;
  bool involves(std::size_t var) const;

  Polynomial derivative(std::size_t var) const;
  mpq_class evaluate(std::span<const mpq_class> point) const;
  /// Replaces variable `var` by `value` (a polynomial in the same ring).
  Polynomial substitute(std::size_t var, const Polynomial& value) const;
  /// Replaces several variables at once by constants.
  Polynomial specialize(std::span<const std::size_t> vars, std::span<const mpq_class> values) const;
  /// f(x + p): moves the point p to the origin.
  Polynomial translate(std::span<const mpq_class> point) const;
  /// Coefficients c_k with f = sum_k c_k * var^k.
  std::vector<Polynomial> coefficients_in(std::size_t var) const;

  std::string to_string() const;

  // Low-level helpers for reduction loops; callers keep the terms descending.
  void drop_leading_term() { terms_.erase(terms_.begin()); }
  void push_back_term(Term t) { terms_.push_back(std::move(t)); }

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void canonicalize();
  void check_ring(const Polynomial& other) const;

  RingPtr ring_;
  OrderPtr order_;
  std::vector<Term> terms_;
};

std::string to_string(const mpq_class& c);

/// Canonical sort for lists of polynomials: ascending by leading monomial,
/// then by printed form.
void sort_polynomials(std::vector<Polynomial>& polys);

}  // namespace behrend
