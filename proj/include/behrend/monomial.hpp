#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace behrend {

/// Exponent vector x^a. Length equals the ring arity.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exp_(nvars, 0) {}
  explicit Monomial(std::vector<int> exponents);
  Monomial(std::initializer_list<int> exponents) : Monomial(std::vector<int>(exponents)) {}

  static Monomial variable(std::size_t nvars, std::size_t index, int power = 1);

  std::size_t size() const { return exp_.size(); }
  int operator[](std::size_t i) const { return exp_[i]; }
  void set(std::size_t i, int e);
  const std::vector<int>& exponents() const { return exp_; }

  int degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  /// this | other
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b, requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp_ == b.exp_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  /// Plain lexicographic comparison of exponent vectors; for containers only.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.exp_ < b.exp_; }

  std::size_t hash() const;

 private:
  std::vector<int> exp_;
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace behrend
