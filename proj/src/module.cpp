#include "behrend/module.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace behrend {

ModuleVector::ModuleVector(RingPtr ring, std::size_t rank) : ring_(std::move(ring)) {
  components_.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i) components_.emplace_back(ring_);
}

ModuleVector::ModuleVector(std::vector<Polynomial> components) : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("module vector needs at least one component");
  ring_ = components_.front().ring();
  for (const auto& c : components_)
    if (!same_ring(c.ring(), ring_)) throw RingMismatch("module vector components from different rings");
}

ModuleVector ModuleVector::unit(RingPtr ring, std::size_t rank, std::size_t index) {
  ModuleVector v(ring, rank);
  v[index] = Polynomial::constant(ring, 1);
  return v;
}

bool ModuleVector::is_zero() const {
  return std::all_of(components_.begin(), components_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& other) {
  if (other.rank() != rank()) throw std::invalid_argument("module rank mismatch");
  for (std::size_t i = 0; i < rank(); ++i) components_[i] += other.components_[i];
  return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& other) {
  if (other.rank() != rank()) throw std::invalid_argument("module rank mismatch");
  for (std::size_t i = 0; i < rank(); ++i) components_[i] -= other.components_[i];
  return *this;
}

ModuleVector operator*(const Polynomial& f, const ModuleVector& v) {
  ModuleVector r = v;
  for (auto& c : r.components_) c = f * c;
  return r;
}

Polynomial ModuleVector::contract(std::span<const Polynomial> g) const {
  if (g.size() != rank()) throw std::invalid_argument("contract: length mismatch");
  Polynomial total(ring_);
  for (std::size_t i = 0; i < rank(); ++i) total += components_[i] * g[i];
  return total;
}

ModuleVector ModuleVector::contract(std::span<const ModuleVector> g) const {
  if (g.size() != rank() || g.empty()) throw std::invalid_argument("contract: length mismatch");
  ModuleVector total(ring_, g.front().rank());
  for (std::size_t i = 0; i < rank(); ++i) total += components_[i] * g[i];
  return total;
}

std::string ModuleVector::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rank(); ++i) os << (i ? ", " : "") << components_[i].to_string();
  os << "]";
  return os.str();
}

bool operator==(const ModuleVector& a, const ModuleVector& b) { return a.components_ == b.components_; }

FreeModule::FreeModule(RingPtr base, std::size_t rank, OrderPtr base_order, ModuleSchedule schedule)
    : base_(std::move(base)),
      rank_(rank),
      base_order_(base_order ? std::move(base_order) : base_->default_order()),
      schedule_(schedule) {
  if (rank_ == 0) throw std::invalid_argument("free module of rank 0");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < rank_; ++i) names.push_back("[" + std::to_string(i + 1) + "]");
  extended_ = extend_ring(*base_, names);
  const std::size_t n = base_->size();
  const std::size_t total = extended_->size();
  std::vector<std::size_t> comps(rank_);
  std::iota(comps.begin(), comps.end(), n);
  MonomialOrder::Row position{MonomialOrder::Row::Kind::Lex, {}, comps};
  auto rows = base_order_->rows_in(total);
  if (schedule_ == ModuleSchedule::PositionOverTerm) {
    rows.insert(rows.begin(), position);
  } else {
    rows.push_back(position);
  }
  extended_order_ = MonomialOrder::custom(
      total, std::move(rows),
      (schedule_ == ModuleSchedule::PositionOverTerm ? "pot/" : "top/") + base_order_->description());
  to_ext_.resize(n);
  std::iota(to_ext_.begin(), to_ext_.end(), 0);
}

GroebnerOptions FreeModule::options() const {
  GroebnerOptions o;
  for (std::size_t i = 0; i < rank_; ++i) o.component_vars.push_back(base_->size() + i);
  return o;
}

Polynomial FreeModule::from_base(const Polynomial& p) const {
  return p.map_variables(extended_, to_ext_, extended_order_);
}

Polynomial FreeModule::embed(const ModuleVector& v) const {
  if (v.rank() != rank_) throw std::invalid_argument("embed: rank mismatch");
  Polynomial out(extended_, extended_order_);
  for (std::size_t i = 0; i < rank_; ++i) {
    if (v[i].is_zero()) continue;
    Polynomial c = from_base(v[i]);
    out += c.times_term(Monomial::variable(extended_->size(), base_->size() + i), 1);
  }
  return out;
}

std::size_t FreeModule::component_of(const Monomial& m) const {
  for (std::size_t i = 0; i < rank_; ++i)
    if (m[base_->size() + i] != 0) return i;
  throw std::invalid_argument("monomial carries no component");
}

Monomial FreeModule::base_part(const Monomial& m) const {
  Monomial out(base_->size());
  for (std::size_t i = 0; i < base_->size(); ++i) out.set(i, m[i]);
  return out;
}

ModuleVector FreeModule::extract(const Polynomial& p) const {
  std::vector<std::vector<Term>> parts(rank_);
  for (const auto& t : p.terms()) parts[component_of(t.mono)].push_back({base_part(t.mono), t.coeff});
  std::vector<Polynomial> comps;
  for (auto& part : parts) comps.emplace_back(base_, base_order_, std::move(part));
  return ModuleVector(std::move(comps));
}

Polynomial FreeModule::to_base(const Polynomial& p) const {
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    for (std::size_t i = 0; i < rank_; ++i)
      if (t.mono[base_->size() + i] != 0) throw std::invalid_argument("to_base: term carries a component");
    terms.push_back({base_part(t.mono), t.coeff});
  }
  return Polynomial(base_, base_order_, std::move(terms));
}

ModuleGroebnerBasis::ModuleGroebnerBasis(FreeModule module, GroebnerBasis basis)
    : module_(std::move(module)), basis_(std::move(basis)) {}

std::vector<ModuleVector> ModuleGroebnerBasis::elements() const {
  std::vector<ModuleVector> out;
  for (const auto& g : basis_.elements()) out.push_back(module_.extract(g));
  return out;
}

ModuleVector ModuleGroebnerBasis::normal_form(const ModuleVector& v) const {
  return module_.extract(basis_.normal_form(module_.embed(v)));
}

namespace {

// Monomials of exact degree d in n variables, in a fixed order.
void monomials_of_degree(std::size_t n, int d, std::vector<Monomial>& out) {
  std::vector<int> e(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == n) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
  };
  if (n == 0) {
    if (d == 0) out.emplace_back(std::vector<int>{});
    return;
  }
  rec(0, d);
}

}  // namespace

std::optional<std::vector<Monomial>> monomials_outside(std::size_t n, const std::vector<Monomial>& leads) {
  if (std::any_of(leads.begin(), leads.end(), [](const Monomial& m) { return m.is_one(); }))
    return std::vector<Monomial>{};
  for (std::size_t v = 0; v < n; ++v) {
    bool pure = std::any_of(leads.begin(), leads.end(), [&](const Monomial& m) {
      return m[v] > 0 && m.degree() == m[v];
    });
    if (!pure) return std::nullopt;
  }
  std::vector<Monomial> out;
  for (int d = 0;; ++d) {
    std::vector<Monomial> level;
    monomials_of_degree(n, d, level);
    std::size_t found = 0;
    for (auto& m : level) {
      bool divisible = std::any_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
      if (!divisible) {
        out.push_back(std::move(m));
        ++found;
      }
    }
    if (found == 0) break;
  }
  return out;
}

std::optional<std::vector<ModuleMonomial>> ModuleGroebnerBasis::standard_monomials() const {
  std::vector<std::vector<Monomial>> leads(module_.rank());
  for (const auto& g : basis_.elements()) {
    const auto& lm = g.leading_monomial();
    leads[module_.component_of(lm)].push_back(module_.base_part(lm));
  }
  std::vector<ModuleMonomial> out;
  for (std::size_t c = 0; c < module_.rank(); ++c) {
    auto comp = monomials_outside(module_.base_ring()->size(), leads[c]);
    if (!comp) return std::nullopt;
    for (auto& m : *comp) out.push_back({c, std::move(m)});
  }
  return out;
}

std::optional<std::vector<Monomial>> standard_monomials(const GroebnerBasis& gb) {
  if (gb.is_unit()) return std::vector<Monomial>{};
  return monomials_outside(gb.ring()->size(), gb.leading_monomials());
}

ModuleGroebnerBasis module_groebner(const RingPtr& ring, std::size_t rank, std::span<const ModuleVector> gens,
                                    const OrderPtr& order, ModuleSchedule schedule, std::size_t max_pairs) {
  FreeModule module(ring, rank, order, schedule);
  std::vector<Polynomial> embedded;
  for (const auto& g : gens) embedded.push_back(module.embed(g));
  auto options = module.options();
  options.max_pairs = max_pairs;
  auto gb = buchberger(module.extended_ring(), embedded, module.extended_order(), options);
  return ModuleGroebnerBasis(std::move(module), std::move(gb));
}

std::vector<ModuleVector> module_syzygies(std::span<const ModuleVector> gens, const OrderPtr& order) {
  if (gens.empty()) return {};
  const RingPtr& ring = gens.front().ring();
  const std::size_t r = gens.front().rank();
  const std::size_t m = gens.size();
  std::vector<ModuleVector> tagged;
  for (std::size_t i = 0; i < m; ++i) {
    ModuleVector v(ring, r + m);
    for (std::size_t k = 0; k < r; ++k) v[k] = gens[i][k];
    v[r + i] = Polynomial::constant(ring, 1);
    tagged.push_back(std::move(v));
  }
  auto gb = module_groebner(ring, r + m, tagged, order, ModuleSchedule::PositionOverTerm);
  std::vector<ModuleVector> out;
  for (const auto& v : gb.elements()) {
    bool in_kernel = true;
    for (std::size_t k = 0; k < r; ++k) in_kernel = in_kernel && v[k].is_zero();
    if (!in_kernel) continue;
    std::vector<Polynomial> comps(v.components().begin() + static_cast<std::ptrdiff_t>(r), v.components().end());
    out.emplace_back(std::move(comps));
  }
  return out;
}

std::vector<ModuleVector> syzygy_basis(std::span<const Polynomial> gens, const OrderPtr& order) {
  std::vector<ModuleVector> wrapped;
  for (const auto& g : gens) wrapped.emplace_back(std::vector<Polynomial>{g});
  return module_syzygies(wrapped, order);
}

namespace {

std::vector<ModuleVector> schreyer_impl(const std::vector<Polynomial>& basis, const OrderPtr& order,
                                        const RingPtr& out_ring,
                                        const std::function<Polynomial(const Polynomial&)>& lower,
                                        const std::function<bool(const Monomial&, const Monomial&)>& same_slot) {
  const std::size_t m = basis.size();
  std::vector<ModuleVector> out;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const auto& li = basis[i].leading_monomial();
      const auto& lj = basis[j].leading_monomial();
      if (!same_slot(li, lj)) continue;
      Monomial l = lcm(li, lj);
      Monomial mi = l / li, mj = l / lj;
      mpq_class ci = 1 / basis[i].leading_coeff();
      mpq_class cj = 1 / basis[j].leading_coeff();
      Polynomial s = basis[i].times_term(mi, ci);
      s.subtract_multiple(basis[j], mj, cj);
      Division d = divide(s, basis, order);
      if (!d.remainder.is_zero()) throw std::invalid_argument("schreyer_syzygies: input is not a Groebner basis");
      ModuleVector syz(out_ring, m);
      for (std::size_t k = 0; k < m; ++k) syz[k] = -lower(d.quotients[k]);
      auto ring = basis[i].ring();
      syz[i] += lower(Polynomial::monomial(ring, mi, ci, order));
      syz[j] -= lower(Polynomial::monomial(ring, mj, cj, order));
      if (!syz.is_zero()) out.push_back(std::move(syz));
    }
  }
  return out;
}

}  // namespace

std::vector<ModuleVector> schreyer_syzygies(std::span<const Polynomial> basis, const OrderPtr& order) {
  if (basis.empty()) return {};
  std::vector<Polynomial> ordered;
  for (const auto& g : basis) ordered.push_back(g.with_order(order));
  auto ring = ordered.front().ring();
  return schreyer_impl(
      ordered, order, ring, [&](const Polynomial& p) { return p.with_order(ring->default_order()); },
      [](const Monomial&, const Monomial&) { return true; });
}

std::vector<ModuleVector> schreyer_syzygies(const ModuleGroebnerBasis& basis) {
  const auto& elems = basis.embedded().elements();
  if (elems.empty()) return {};
  const FreeModule& mod = basis.module();
  return schreyer_impl(
      elems, basis.embedded().order(), mod.base_ring(), [&](const Polynomial& p) { return mod.to_base(p); },
      [&](const Monomial& a, const Monomial& b) { return mod.component_of(a) == mod.component_of(b); });
}

}  // namespace behrend
