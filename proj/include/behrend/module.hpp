#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "behrend/groebner.hpp"
#include "behrend/polynomial.hpp"

namespace behrend {

/// How module terms x^a e_i are compared: position first (POT) or the
/// monomial first with the position as a tiebreak (TOP). e_1 > e_2 > ...
enum class ModuleSchedule { PositionOverTerm, TermOverPosition };

/// Element of the free module R^r.
class ModuleVector {
 public:
  ModuleVector(RingPtr ring, std::size_t rank);
  explicit ModuleVector(std::vector<Polynomial> components);

  static ModuleVector unit(RingPtr ring, std::size_t rank, std::size_t index);

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return components_.size(); }
  const Polynomial& operator[](std::size_t i) const { return components_[i]; }
  Polynomial& operator[](std::size_t i) { return components_[i]; }
  const std::vector<Polynomial>& components() const { return components_; }
  bool is_zero() const;

  ModuleVector& operator+=(const ModuleVector& other);
  ModuleVector& operator-=(const ModuleVector& other);
  friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
  friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
  friend ModuleVector operator*(const Polynomial& f, const ModuleVector& v);

  /// sum_i v_i * g_i
  Polynomial contract(std::span<const Polynomial> g) const;
  /// sum_i v_i * g_i for module generators g_i in R^s
  ModuleVector contract(std::span<const ModuleVector> g) const;

  std::string to_string() const;

  friend bool operator==(const ModuleVector& a, const ModuleVector& b);

 private:
  RingPtr ring_;
  std::vector<Polynomial> components_;
};

/// R^r realised inside R[c_1..c_r] as the polynomials linear in the
/// component variables c_i, so the polynomial Groebner engine runs on it in
/// module mode.
class FreeModule {
 public:
  FreeModule(RingPtr base, std::size_t rank, OrderPtr base_order = nullptr,
             ModuleSchedule schedule = ModuleSchedule::PositionOverTerm);

  const RingPtr& base_ring() const { return base_; }
  const OrderPtr& base_order() const { return base_order_; }
  std::size_t rank() const { return rank_; }
  ModuleSchedule schedule() const { return schedule_; }
  const RingPtr& extended_ring() const { return extended_; }
  const OrderPtr& extended_order() const { return extended_order_; }
  GroebnerOptions options() const;

  Polynomial embed(const ModuleVector& v) const;
  ModuleVector extract(const Polynomial& p) const;
  /// Moves a polynomial free of component variables back to the base ring.
  Polynomial to_base(const Polynomial& p) const;
  Polynomial from_base(const Polynomial& p) const;
  /// Component index carried by a module monomial.
  std::size_t component_of(const Monomial& m) const;
  /// Base-ring part of a module monomial.
  Monomial base_part(const Monomial& m) const;

 private:
  RingPtr base_;
  std::size_t rank_;
  OrderPtr base_order_;
  ModuleSchedule schedule_;
  RingPtr extended_;
  OrderPtr extended_order_;
  std::vector<std::size_t> to_ext_;
};

/// A standard basis element of R^r / K: the monomial `mono` in position `component`.
struct ModuleMonomial {
  std::size_t component;
  Monomial mono;
  friend bool operator==(const ModuleMonomial&, const ModuleMonomial&) = default;
};

class ModuleGroebnerBasis {
 public:
  ModuleGroebnerBasis(FreeModule module, GroebnerBasis basis);

  const FreeModule& module() const { return module_; }
  const GroebnerBasis& embedded() const { return basis_; }
  std::vector<ModuleVector> elements() const;
  ModuleVector normal_form(const ModuleVector& v) const;
  bool contains(const ModuleVector& v) const { return normal_form(v).is_zero(); }
  /// Standard monomials of R^r/K when it is finite-dimensional; nullopt otherwise.
  std::optional<std::vector<ModuleMonomial>> standard_monomials() const;

 private:
  FreeModule module_;
  GroebnerBasis basis_;
};

ModuleGroebnerBasis module_groebner(const RingPtr& ring, std::size_t rank, std::span<const ModuleVector> gens,
                                    const OrderPtr& order = nullptr,
                                    ModuleSchedule schedule = ModuleSchedule::PositionOverTerm,
                                    std::size_t max_pairs = 0);

/// Generators of the first syzygy module of `gens` (relations
/// sum a_i gens_i = 0), read off a POT module basis of (gens_i, e_i).
std::vector<ModuleVector> syzygy_basis(std::span<const Polynomial> gens, const OrderPtr& order = nullptr);
std::vector<ModuleVector> module_syzygies(std::span<const ModuleVector> gens, const OrderPtr& order = nullptr);

/// Syzygies of a Groebner basis from reducing its S-pairs (Schreyer). The
/// input must already be a Groebner basis under `order`.
std::vector<ModuleVector> schreyer_syzygies(std::span<const Polynomial> basis, const OrderPtr& order);
std::vector<ModuleVector> schreyer_syzygies(const ModuleGroebnerBasis& basis);

/// Monomials in `nvars` variables divisible by none of `leads`; nullopt
/// when there are infinitely many.
std::optional<std::vector<Monomial>> monomials_outside(std::size_t nvars, const std::vector<Monomial>& leads);

/// Standard monomials of R/I for a Groebner basis; nullopt when infinite.
std::optional<std::vector<Monomial>> standard_monomials(const GroebnerBasis& gb);

}  // namespace behrend
