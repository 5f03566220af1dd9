#include "behrend/ring.hpp"

#include <set>

#include "behrend/order.hpp"

namespace behrend {

Ring::Ring(std::vector<std::string> variables, std::uint64_t characteristic)
    : variables_(std::move(variables)), characteristic_(characteristic) {
  std::set<std::string> seen;
  for (const auto& v : variables_) {
    if (v.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable name '" + v + "'");
  }
  if (characteristic_ != 0) {
    mpz_class p(std::to_string(characteristic_));
    if (characteristic_ < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
      throw std::invalid_argument("characteristic must be 0 or a prime");
  }
  default_order_ = MonomialOrder::degrevlex(variables_.size());
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i] == name) return i;
  return std::nullopt;
}

void Ring::normalize(mpq_class& c) const {
  if (characteristic_ == 0) return;
  mpz_class p(std::to_string(characteristic_));
  mpz_class num = c.get_num() % p;
  mpz_class den = c.get_den() % p;
  if (den == 0) throw std::domain_error("denominator divisible by the characteristic");
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  num = (num * inv) % p;
  if (num < 0) num += p;
  c = mpq_class(num);
}

RingPtr make_ring(std::vector<std::string> variables, std::uint64_t characteristic) {
  return std::make_shared<const Ring>(std::move(variables), characteristic);
}

RingPtr extend_ring(const Ring& base, const std::vector<std::string>& extra) {
  auto vars = base.variables();
  vars.insert(vars.end(), extra.begin(), extra.end());
  return make_ring(std::move(vars), base.characteristic());
}

std::vector<std::string> fresh_names(const Ring& ring, const std::string& stem, std::size_t count) {
  std::string s = stem;
  for (;;) {
    std::vector<std::string> out;
    bool clash = false;
    for (std::size_t i = 1; i <= count; ++i) {
      out.push_back(s + std::to_string(i));
      if (ring.index_of(out.back())) clash = true;
    }
    if (!clash) return out;
    s += "_";
  }
}

}  // namespace behrend
