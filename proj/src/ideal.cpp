#include "behrend/ideal.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>

#include "behrend/linalg.hpp"
#include "behrend/module.hpp"

namespace behrend {

namespace {

std::atomic<std::size_t> g_max_pairs{0};

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  std::vector<Polynomial> d{b};
  Division q = divide(a, d, a.order());
  if (!q.remainder.is_zero()) throw std::logic_error("inexact polynomial division");
  return q.quotients[0];
}

}  // namespace

Polynomial homogenize(const Polynomial& f, const RingPtr& target) {
  const int d = f.total_degree();
  const std::size_t n = f.ring()->size();
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    Monomial m(target->size());
    for (std::size_t i = 0; i < n; ++i) m.set(i, t.mono[i]);
    m.set(n, d - t.mono.degree());
    terms.push_back({std::move(m), t.coeff});
  }
  return Polynomial(target, nullptr, std::move(terms));
}

namespace {

using TPoly = std::vector<mpz_class>;

void trim(TPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

TPoly mul(const TPoly& a, const TPoly& b) {
  if (a.empty() || b.empty()) return {};
  TPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

TPoly add(TPoly a, const TPoly& b) {
  if (b.size() > a.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
  return a;
}

std::vector<Monomial> minimalize(std::vector<Monomial> ms) {
  std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : a < b;
  });
  std::vector<Monomial> out;
  for (auto& m : ms) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& o) { return o.divides(m); });
    if (!redundant) out.push_back(std::move(m));
  }
  return out;
}

// Numerator N with HS(R/M) = N(t) / (1-t)^n.
TPoly hilbert_numerator(std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  if (gens.front().is_one()) return {};
  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size() && coprime; ++j) coprime = gens[i].coprime(gens[j]);
  if (coprime) {
    TPoly out{1};
    for (const auto& m : gens) {
      TPoly f(m.degree() + 1);
      f[0] = 1;
      f[m.degree()] = -1;
      out = mul(out, f);
    }
    return out;
  }
  const std::size_t n = gens.front().size();
  std::vector<int> count(n, 0);
  for (const auto& m : gens)
    if (m.degree() > 1)
      for (std::size_t v = 0; v < n; ++v)
        if (m[v] > 0) ++count[v];
  const std::size_t x = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
  const Monomial xv = Monomial::variable(n, x);
  std::vector<Monomial> plus = gens;
  plus.push_back(xv);
  std::vector<Monomial> colon;
  for (const auto& m : gens) colon.push_back(m / gcd(m, xv));
  TPoly a = hilbert_numerator(std::move(plus));
  TPoly b = hilbert_numerator(std::move(colon));
  b.insert(b.begin(), mpz_class(0));
  return add(std::move(a), b);
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (!same_ring(g.ring(), ring_)) throw RingMismatch("ideal generator from a different ring");
    if (!g.is_zero()) generators_.push_back(g.with_order(ring_->default_order()));
  }
}

Ideal Ideal::unit(const RingPtr& ring) { return Ideal(ring, {Polynomial::constant(ring, 1)}); }

void Ideal::set_max_pairs(std::size_t bound) { g_max_pairs = bound; }
std::size_t Ideal::max_pairs() { return g_max_pairs; }

const GroebnerBasis& Ideal::groebner(const OrderPtr& order) const {
  const OrderPtr& o = order ? order : ring_->default_order();
  std::lock_guard lock(cache_->mutex);
  for (const auto& [key, gb] : cache_->bases)
    if (same_order(key, o)) return *gb;
  GroebnerOptions options;
  options.max_pairs = g_max_pairs;
  auto gb = std::make_unique<GroebnerBasis>(buchberger(ring_, generators_, o, options));
  cache_->bases.emplace_back(o, std::move(gb));
  return *cache_->bases.back().second;
}

bool Ideal::contains(const Polynomial& f) const { return groebner().contains(f); }

bool Ideal::contains(const Ideal& other) const {
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [&](const Polynomial& g) { return contains(g); });
}

bool Ideal::is_monomial() const {
  return std::all_of(generators_.begin(), generators_.end(), [](const Polynomial& g) { return g.size() == 1; });
}

bool Ideal::is_homogeneous() const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const Polynomial& g) { return g.is_homogeneous(); });
}

Ideal Ideal::reduced() const { return Ideal(ring_, groebner().elements()); }

Ideal Ideal::operator+(const Ideal& other) const {
  auto g = generators_;
  g.insert(g.end(), other.generators_.begin(), other.generators_.end());
  return Ideal(ring_, std::move(g));
}

Ideal Ideal::operator+(const Polynomial& f) const {
  auto g = generators_;
  g.push_back(f);
  return Ideal(ring_, std::move(g));
}

Ideal Ideal::operator*(const Ideal& other) const {
  std::vector<Polynomial> g;
  for (const auto& a : generators_)
    for (const auto& b : other.generators_) g.push_back(a * b);
  return Ideal(ring_, std::move(g));
}

Ideal Ideal::power(unsigned e) const {
  Ideal out = unit(ring_);
  for (unsigned k = 0; k < e; ++k) out = (out * *this).reduced();
  return out;
}

std::vector<std::string> Ideal::to_strings() const {
  std::vector<std::string> out;
  for (const auto& g : generators_) out.push_back(g.to_string());
  return out;
}

std::string Ideal::to_string() const {
  if (generators_.empty()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) s += (i ? ", " : "") + generators_[i].to_string();
  return s + ")";
}

bool operator==(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring_, b.ring_)) return false;
  return a.groebner().elements() == b.groebner().elements();
}

Ideal eliminate(const Ideal& I, std::span<const std::size_t> drop) {
  if (drop.empty()) return I;
  const auto& ring = I.ring();
  auto order = MonomialOrder::elimination(ring->size(), std::vector<std::size_t>(drop.begin(), drop.end()));
  std::vector<Polynomial> kept;
  for (const auto& g : I.groebner(order).elements()) {
    bool free = std::none_of(drop.begin(), drop.end(), [&](std::size_t v) { return g.involves(v); });
    if (free) kept.push_back(g);
  }
  return Ideal(ring, std::move(kept));
}

Ideal restrict_to(const Ideal& I, const RingPtr& target) {
  const std::size_t m = target->size();
  std::vector<Polynomial> out;
  for (const auto& g : I.generators()) {
    std::vector<Term> terms;
    for (const auto& t : g.terms()) {
      Monomial mono(m);
      for (std::size_t i = 0; i < t.mono.size(); ++i) {
        if (i >= m) {
          if (t.mono[i] != 0) throw std::invalid_argument("restrict_to: generator involves a dropped variable");
        } else {
          mono.set(i, t.mono[i]);
        }
      }
      terms.push_back({std::move(mono), t.coeff});
    }
    out.emplace_back(target, nullptr, std::move(terms));
  }
  return Ideal(target, std::move(out));
}

Ideal extend_to(const Ideal& I, const RingPtr& target) {
  std::vector<std::size_t> map(I.ring()->size());
  std::iota(map.begin(), map.end(), 0);
  std::vector<Polynomial> out;
  for (const auto& g : I.generators()) out.push_back(g.map_variables(target, map));
  return Ideal(target, std::move(out));
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  if (I.is_zero() || J.is_zero()) return Ideal(I.ring());
  const auto& ring = I.ring();
  auto ext = extend_ring(*ring, fresh_names(*ring, "t", 1));
  const std::size_t t = ring->size();
  auto tv = Polynomial::variable(ext, t);
  auto one_minus_t = Polynomial::constant(ext, 1) - tv;
  std::vector<Polynomial> gens;
  const Ideal I_ext = extend_to(I, ext), J_ext = extend_to(J, ext);
  for (const auto& g : I_ext.generators()) gens.push_back(tv * g);
  for (const auto& g : J_ext.generators()) gens.push_back(one_minus_t * g);
  std::vector<std::size_t> drop{t};
  return restrict_to(eliminate(Ideal(ext, std::move(gens)), drop), ring);
}

Ideal quotient(const Ideal& I, const Polynomial& f) {
  if (f.is_zero()) return Ideal::unit(I.ring());
  Ideal both = intersect(I, Ideal(I.ring(), {f}));
  std::vector<Polynomial> out;
  for (const auto& g : both.generators()) out.push_back(exact_quotient(g, f));
  return Ideal(I.ring(), std::move(out));
}

Ideal quotient(const Ideal& I, const Ideal& J) {
  Ideal out = Ideal::unit(I.ring());
  bool first = true;
  for (const auto& f : J.generators()) {
    Ideal q = quotient(I, f);
    out = first ? q : intersect(out, q);
    first = false;
  }
  return out;
}

Ideal saturate(const Ideal& I, const Polynomial& f) {
  Ideal current = I;
  for (;;) {
    Ideal next = quotient(current, f);
    if (current.contains(next)) return current.reduced();
    current = next;
  }
}

bool in_radical(const Polynomial& f, const Ideal& I) {
  if (f.is_zero()) return true;
  const auto& ring = I.ring();
  auto ext = extend_ring(*ring, fresh_names(*ring, "t", 1));
  std::vector<std::size_t> map(ring->size());
  std::iota(map.begin(), map.end(), 0);
  Ideal big = extend_to(I, ext);
  auto t = Polynomial::variable(ext, ring->size());
  return (big + (Polynomial::constant(ext, 1) - t * f.map_variables(ext, map))).is_unit();
}

bool same_radical(const Ideal& I, const Ideal& J) {
  for (const auto& g : I.generators())
    if (!in_radical(g, J)) return false;
  for (const auto& g : J.generators())
    if (!in_radical(g, I)) return false;
  return true;
}

std::vector<std::size_t> independent_set(const Ideal& I) {
  const std::size_t n = I.ring()->size();
  const auto& gb = I.groebner();
  if (gb.is_unit()) return {};
  std::vector<std::vector<std::size_t>> supports;
  for (const auto& m : gb.leading_monomials()) {
    std::vector<std::size_t> s;
    for (std::size_t v = 0; v < n; ++v)
      if (m[v] > 0) s.push_back(v);
    supports.push_back(std::move(s));
  }
  std::vector<std::size_t> best;
  std::vector<bool> chosen(n, false);
  // branch and bound over subsets, preferring earlier variables
  std::function<void(std::size_t, std::vector<std::size_t>&)> search = [&](std::size_t v,
                                                                          std::vector<std::size_t>& cur) {
    if (cur.size() + (n - v) <= best.size()) return;
    if (v == n) {
      best = cur;
      return;
    }
    chosen[v] = true;
    bool ok = std::none_of(supports.begin(), supports.end(), [&](const std::vector<std::size_t>& s) {
      return std::all_of(s.begin(), s.end(), [&](std::size_t w) { return chosen[w]; });
    });
    if (ok) {
      cur.push_back(v);
      search(v + 1, cur);
      cur.pop_back();
    }
    chosen[v] = false;
    search(v + 1, cur);
  };
  std::vector<std::size_t> cur;
  search(0, cur);
  return best;
}

int dimension(const Ideal& I) {
  if (I.is_unit()) return -1;
  return static_cast<int>(independent_set(I).size());
}

mpz_class HilbertSeries::degree() const {
  mpz_class s = 0;
  for (const auto& c : numerator) s += c;
  return s;
}

mpz_class HilbertSeries::numerator_derivative_at_one() const {
  mpz_class s = 0;
  for (std::size_t k = 1; k < numerator.size(); ++k) s += mpz_class(static_cast<unsigned long>(k)) * numerator[k];
  return s;
}

HilbertSeries hilbert_series_monomial(std::size_t nvars, const std::vector<Monomial>& monomials) {
  TPoly num = hilbert_numerator(monomials);
  HilbertSeries hs;
  if (num.empty()) {
    hs.dim = -1;
    return hs;
  }
  int dim = static_cast<int>(nvars);
  for (;;) {
    mpz_class at_one = 0;
    for (const auto& c : num) at_one += c;
    if (at_one != 0 || dim == 0) break;
    TPoly q(num.size() - 1);
    mpz_class acc = 0;
    for (std::size_t k = 0; k + 1 < num.size(); ++k) {
      acc += num[k];
      q[k] = acc;
    }
    num = std::move(q);
    trim(num);
    --dim;
  }
  hs.numerator = std::move(num);
  hs.dim = dim;
  return hs;
}

HilbertSeries hilbert_series(const Ideal& I) {
  if (!I.is_homogeneous()) throw std::invalid_argument("hilbert_series: ideal is not homogeneous");
  const auto& gb = I.groebner();
  return hilbert_series_monomial(I.ring()->size(), gb.leading_monomials());
}

int hilbert_degree(const Ideal& I) {
  if (I.is_unit()) return 0;
  return static_cast<int>(hilbert_series(I).degree().get_si());
}

Ideal homogenize(const Ideal& I, const RingPtr& with_h) {
  std::vector<Polynomial> out;
  for (const auto& g : I.groebner().elements()) out.push_back(homogenize(g, with_h));
  return Ideal(with_h, std::move(out));
}

int affine_degree(const Ideal& I) {
  if (I.is_unit()) return 0;
  auto ext = extend_ring(*I.ring(), fresh_names(*I.ring(), "h", 1));
  return hilbert_degree(homogenize(I, ext));
}

PolyMatrix jacobian(const Ideal& I) {
  PolyMatrix m;
  for (const auto& g : I.generators()) {
    std::vector<Polynomial> row;
    for (std::size_t v = 0; v < I.ring()->size(); ++v) row.push_back(g.derivative(v));
    m.push_back(std::move(row));
  }
  return m;
}

int tangent_dimension_at_point(const Ideal& I, std::span<const mpq_class> point) {
  const std::size_t n = I.ring()->size();
  if (point.size() != n) throw std::invalid_argument("point has the wrong number of coordinates");
  Point p(point.begin(), point.end());
  for (auto& c : p) I.ring()->normalize(c);
  for (const auto& g : I.generators()) {
    mpq_class v = g.evaluate(p);
    I.ring()->normalize(v);
    if (v != 0) throw PointNotOnVariety("point does not lie on V(I)");
  }
  PolyMatrix jac = jacobian(I);
  DenseMatrix m(jac.size(), n);
  for (std::size_t r = 0; r < jac.size(); ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = jac[r][c].evaluate(p);
  return static_cast<int>(n - rank(m, I.ring()->characteristic()));
}

std::size_t rank_modulo_prime(const PolyMatrix& input, const Ideal& P) {
  const auto& gb = P.groebner();
  PolyMatrix m = input;
  for (auto& row : m)
    for (auto& e : row) e = gb.normal_form(e);
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m.front().size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (!m[i][c].is_zero() && (pivot == rows || m[i][c].size() < m[pivot][c].size())) pivot = i;
    }
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      Polynomial a = m[r][c];
      Polynomial b = m[i][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] = gb.normal_form(a * m[i][k] - b * m[r][k]);
    }
    ++r;
  }
  return r;
}

int generic_tangent_dimension(const Ideal& J, const Ideal& P) {
  const std::size_t n = J.ring()->size();
  if (J.is_zero()) return static_cast<int>(n);
  return static_cast<int>(n - rank_modulo_prime(jacobian(J), P));
}

std::optional<std::size_t> colength(const Ideal& I) {
  auto sm = standard_monomials(I.groebner());
  if (!sm) return std::nullopt;
  return sm->size();
}

}  // namespace behrend
