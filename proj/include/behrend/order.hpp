#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "behrend/monomial.hpp"
#include "behrend/ring.hpp"

namespace behrend {

/// A monomial order given as a sequence of comparison rows, evaluated in
/// turn until one distinguishes the two monomials:
///   Weight  - larger weighted degree wins
///   Lex     - first differing exponent along `vars`, larger wins
///   RevLex  - last differing exponent along `vars`, smaller wins
/// lex, degrevlex and block elimination orders are all expressed this way.
class MonomialOrder {
 public:
  enum class Kind { Lex, DegRevLex, Elimination, Custom };

  struct Row {
    enum class Kind { Weight, Lex, RevLex };
    Kind kind;
    std::vector<int> weights;       // Weight rows, one per variable
    std::vector<std::size_t> vars;  // Lex / RevLex rows
  };

  MonomialOrder(Kind kind, std::size_t nvars, std::vector<Row> rows, std::string description);

  /// Lex with variables compared in `permutation` order (identity when empty).
  static OrderPtr lex(std::size_t nvars, std::vector<std::size_t> permutation = {});
  static OrderPtr degrevlex(std::size_t nvars, std::vector<std::size_t> permutation = {});
  /// Block order: degrevlex on `block` first, ties broken by degrevlex on the
  /// remaining variables. Any GB under it eliminates `block`.
  static OrderPtr elimination(std::size_t nvars, std::vector<std::size_t> block);
  static OrderPtr custom(std::size_t nvars, std::vector<Row> rows, std::string description);

  /// -1, 0, +1
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  Kind kind() const { return kind_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<Row>& rows() const { return rows_; }
  const std::string& description() const { return description_; }

  /// Rows of this order re-indexed for a ring with `nvars` >= nvars()
  /// variables, where the original variables keep their indices.
  std::vector<Row> rows_in(std::size_t nvars) const;

  bool operator==(const MonomialOrder& other) const;

 private:
  Kind kind_;
  std::size_t nvars_;
  std::vector<Row> rows_;
  std::string description_;
};

bool same_order(const OrderPtr& a, const OrderPtr& b);

/// Parses "lex", "degrevlex"/"grevlex"/"drl".
OrderPtr order_from_name(const std::string& name, std::size_t nvars);

}  // namespace behrend
