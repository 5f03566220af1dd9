#include "behrend/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace behrend {

Monomial::Monomial(std::vector<int> exponents) : exp_(std::move(exponents)) {
  for (int e : exp_)
    if (e < 0) throw std::invalid_argument("negative exponent");
  degree_ = std::accumulate(exp_.begin(), exp_.end(), 0);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, int power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, int e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  degree_ += e - exp_[i];
  exp_[i] = e;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exp_.size(); ++i)
    if (exp_[i] > other.exp_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exp_.size(); ++i)
    if (exp_[i] != 0 && other.exp_[i] != 0) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  assert(a.size() == b.size());
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.exp_[i] = a.exp_[i] + b.exp_[i];
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  assert(b.divides(a));
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.exp_[i] = a.exp_[i] - b.exp_[i];
  r.degree_ = a.degree_ - b.degree_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
    d += r.exp_[i];
  }
  r.degree_ = d;
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    r.exp_[i] = std::min(a.exp_[i], b.exp_[i]);
    d += r.exp_[i];
  }
  r.degree_ = d;
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (int e : exp_) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace behrend
