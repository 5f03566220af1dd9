#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace behrend {

class MonomialOrder;
using OrderPtr = std::shared_ptr<const MonomialOrder>;

/// Raised when two objects from different polynomial rings are combined.
class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Ordered variable names plus the coefficient field: Q (characteristic 0)
/// or F_p. Coefficients are always held as mpq_class; in characteristic p
/// they are kept reduced to integers in [0, p).
class Ring {
 public:
  Ring(std::vector<std::string> variables, std::uint64_t characteristic = 0);

  std::size_t size() const { return variables_.size(); }
  const std::vector<std::string>& variables() const { return variables_; }
  const std::string& variable(std::size_t i) const { return variables_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::uint64_t characteristic() const { return characteristic_; }

  /// Degrevlex on the variables in declaration order.
  const OrderPtr& default_order() const { return default_order_; }

  /// Brings a coefficient into canonical form for this field.
  void normalize(mpq_class& c) const;

  bool operator==(const Ring& other) const {
    return characteristic_ == other.characteristic_ && variables_ == other.variables_;
  }

 private:
  std::vector<std::string> variables_;
  std::uint64_t characteristic_;
  OrderPtr default_order_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> variables, std::uint64_t characteristic = 0);

/// Same ring with extra variables appended.
RingPtr extend_ring(const Ring& base, const std::vector<std::string>& extra);

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

/// Picks `stem1..stemk` names that do not collide with existing variables.
std::vector<std::string> fresh_names(const Ring& ring, const std::string& stem, std::size_t count);

}  // namespace behrend
