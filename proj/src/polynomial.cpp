#include "behrend/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace behrend {

std::string to_string(const mpq_class& c) { return c.get_str(); }

Polynomial::Polynomial(RingPtr ring, OrderPtr order)
    : ring_(std::move(ring)), order_(order ? std::move(order) : ring_->default_order()) {
  if (order_->nvars() != ring_->size()) throw std::invalid_argument("order arity differs from ring");
}

Polynomial::Polynomial(RingPtr ring, OrderPtr order, std::vector<Term> terms)
    : Polynomial(std::move(ring), std::move(order)) {
  terms_ = std::move(terms);
  for (const auto& t : terms_)
    if (t.mono.size() != ring_->size()) throw std::invalid_argument("monomial arity differs from ring");
  canonicalize();
}

Polynomial Polynomial::constant(RingPtr ring, const mpq_class& c, OrderPtr order) {
  auto n = ring->size();
  return Polynomial(std::move(ring), std::move(order), {Term{Monomial(n), c}});
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index, OrderPtr order) {
  if (index >= ring->size()) throw std::out_of_range("variable index");
  auto n = ring->size();
  return Polynomial(std::move(ring), std::move(order), {Term{Monomial::variable(n, index), 1}});
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const mpq_class& c, OrderPtr order) {
  return Polynomial(std::move(ring), std::move(order), {Term{m, c}});
}

void Polynomial::canonicalize() {
  for (auto& t : terms_) ring_->normalize(t.coeff);
  std::sort(terms_.begin(), terms_.end(),
            [this](const Term& a, const Term& b) { return order_->compare(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
      ring_->normalize(out.back().coeff);
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const Term& t) { return t.coeff == 0; });
  terms_ = std::move(out);
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (!same_ring(ring_, other.ring_)) throw RingMismatch("polynomials belong to different rings");
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1;
}

Polynomial Polynomial::with_order(const OrderPtr& order) const {
  if (same_order(order, order_)) {
    Polynomial p = *this;
    p.order_ = order;
    return p;
  }
  return Polynomial(ring_, order, terms_);
}

Polynomial Polynomial::map_variables(const RingPtr& target, std::span<const std::size_t> index_map,
                                     OrderPtr order) const {
  if (index_map.size() != ring_->size()) throw std::invalid_argument("index map length");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->size());
    for (std::size_t i = 0; i < index_map.size(); ++i)
      if (t.mono[i] != 0) m.set(index_map[i], m[index_map[i]] + t.mono[i]);
    out.push_back({std::move(m), t.coeff});
  }
  return Polynomial(target, std::move(order), std::move(out));
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) {
    t.coeff = -t.coeff;
    ring_->normalize(t.coeff);
  }
  return r;
}

namespace {

// Merges two descending term lists; `sign` multiplies the second.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign,
                              const MonomialOrder& order, const Ring& ring) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = order.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].mono, sign > 0 ? b[j].coeff : mpq_class(-b[j].coeff)});
      ring.normalize(out.back().coeff);
      ++j;
    } else {
      mpq_class s = sign > 0 ? mpq_class(a[i].coeff + b[j].coeff) : mpq_class(a[i].coeff - b[j].coeff);
      ring.normalize(s);
      if (s != 0) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back({b[j].mono, sign > 0 ? b[j].coeff : mpq_class(-b[j].coeff)});
    ring.normalize(out.back().coeff);
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_ring(other);
  if (!same_order(order_, other.order_)) return *this += other.with_order(order_);
  terms_ = merge_terms(terms_, other.terms_, +1, *order_, *ring_);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_ring(other);
  if (!same_order(order_, other.order_)) return *this -= other.with_order(order_);
  terms_ = merge_terms(terms_, other.terms_, -1, *order_, *ring_);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_, a.order_);
  if (b.terms_.size() == 1) return a.times_term(b.terms_[0].mono, b.terms_[0].coeff);
  if (a.terms_.size() == 1) return b.with_order(a.order_).times_term(a.terms_[0].mono, a.terms_[0].coeff);
  std::unordered_map<Monomial, mpq_class, MonomialHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) acc[s.mono * t.mono] += s.coeff * t.coeff;
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) terms.push_back({m, std::move(c)});
  return Polynomial(a.ring_, a.order_, std::move(terms));
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const mpq_class& c) {
  mpq_class cc = c;
  ring_->normalize(cc);
  if (cc == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) {
    t.coeff *= cc;
    ring_->normalize(t.coeff);
  }
  return *this;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1, order_);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

Polynomial Polynomial::times_term(const Monomial& m, const mpq_class& c) const {
  Polynomial r(ring_, order_);
  mpq_class cc = c;
  ring_->normalize(cc);
  if (cc == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    mpq_class x = t.coeff * cc;
    ring_->normalize(x);
    r.terms_.push_back({t.mono * m, std::move(x)});
  }
  return r;
}

void Polynomial::subtract_multiple(const Polynomial& g, const Monomial& m, const mpq_class& c) {
  check_ring(g);
  const Polynomial& gg = same_order(order_, g.order_) ? g : g.with_order(order_);
  Polynomial scaled = gg.times_term(m, c);
  terms_ = merge_terms(terms_, scaled.terms_, -1, *order_, *ring_);
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  // in F_p, normalize() turns the rational 1/lc into the field inverse
  mpq_class inv = 1 / leading_coeff();
  return *this * inv;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

int Polynomial::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono[var]);
  return d;
}

int Polynomial::lowest_degree() const {
  if (terms_.empty()) return -1;
  int d = terms_[0].mono.degree();
  for (const auto& t : terms_) d = std::min(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_[0].mono.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.mono.degree() == d; });
}

bool Polynomial::is_linear() const { return !is_zero() && total_degree() == 1; }

Polynomial Polynomial::homogeneous_part(int degree) const {
  Polynomial r(ring_, order_);
  for (const auto& t : terms_)
    if (t.mono.degree() == degree) r.terms_.push_back(t);
  return r;
}

std::vector<std::size_t> Polynomial::support() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < ring_->size(); ++v)
    if (involves(v)) out.push_back(v);
  return out;
}

bool Polynomial::involves(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [var](const Term& t) { return t.mono[var] != 0; });
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    int e = t.mono[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    out.push_back({std::move(m), t.coeff * e});
  }
  return Polynomial(ring_, order_, std::move(out));
}

mpq_class Polynomial::evaluate(std::span<const mpq_class> point) const {
  if (point.size() != ring_->size()) throw std::invalid_argument("point dimension differs from ring arity");
  mpq_class total = 0;
  for (const auto& t : terms_) {
    mpq_class v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (int k = 0; k < t.mono[i]; ++k) v *= point[i];
    }
    total += v;
  }
  ring_->normalize(total);
  return total;
}

Polynomial Polynomial::substitute(std::size_t var, const Polynomial& value) const {
  check_ring(value);
  auto coeffs = coefficients_in(var);
  // Horner in `var`
  Polynomial r(ring_, order_);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    r = r * value;
    r += *it;
  }
  return r;
}

Polynomial Polynomial::specialize(std::span<const std::size_t> vars, std::span<const mpq_class> values) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    mpq_class c = t.coeff;
    for (std::size_t k = 0; k < vars.size(); ++k) {
      for (int e = 0; e < m[vars[k]]; ++e) c *= values[k];
      m.set(vars[k], 0);
    }
    out.push_back({std::move(m), std::move(c)});
  }
  return Polynomial(ring_, order_, std::move(out));
}

Polynomial Polynomial::translate(std::span<const mpq_class> point) const {
  Polynomial r = *this;
  for (std::size_t v = 0; v < point.size(); ++v) {
    if (point[v] == 0 || !r.involves(v)) continue;
    Polynomial shifted = variable(ring_, v, order_) + constant(ring_, point[v], order_);
    r = r.substitute(v, shifted);
  }
  return r;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
  int d = degree_in(var);
  std::vector<std::vector<Term>> buckets(d < 0 ? 0 : d + 1);
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    int e = m[var];
    m.set(var, 0);
    buckets[e].push_back({std::move(m), t.coeff});
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.emplace_back(ring_, order_, std::move(b));
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    mpq_class c = t.coeff;
    bool negative = c < 0;
    if (ring_->characteristic() != 0) negative = false;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool unit = (c == 1);
    if (t.mono.is_one()) {
      os << c.get_str();
      continue;
    }
    if (!unit) os << c.get_str() << "*";
    bool first_var = true;
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      int e = t.mono[i];
      if (e == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << ring_->variable(i);
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring_, b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  if (!same_order(a.order_, b.order_)) return a == b.with_order(a.order_);
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

void sort_polynomials(std::vector<Polynomial>& polys) {
  std::sort(polys.begin(), polys.end(), [](const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() != b.is_zero()) return a.is_zero();
    if (!a.is_zero()) {
      int c = a.order()->compare(a.leading_monomial(), b.leading_monomial());
      if (c != 0) return c < 0;
    }
    return a.to_string() < b.to_string();
  });
}

}  // namespace behrend
