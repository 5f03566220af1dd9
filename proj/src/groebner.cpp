#include "behrend/groebner.hpp"

#include <algorithm>
#include <limits>

namespace behrend {

namespace {

const Polynomial* find_divisor(const Monomial& m, std::span<const Polynomial* const> G) {
  for (const Polynomial* g : G)
    if (g->leading_monomial().divides(m)) return g;
  return nullptr;
}

Polynomial reduce_full(Polynomial p, std::span<const Polynomial* const> G) {
  Polynomial rem(p.ring(), p.order());
  while (!p.is_zero()) {
    if (const Polynomial* g = find_divisor(p.leading_monomial(), G)) {
      mpq_class c = p.leading_coeff() / g->leading_coeff();
      Monomial m = p.leading_monomial() / g->leading_monomial();
      p.subtract_multiple(*g, m, c);
    } else {
      rem.push_back_term(p.leading_term());
      p.drop_leading_term();
    }
  }
  return rem;
}

std::vector<const Polynomial*> pointers(std::span<const Polynomial> G) {
  std::vector<const Polynomial*> out;
  out.reserve(G.size());
  for (const auto& g : G)
    if (!g.is_zero()) out.push_back(&g);
  return out;
}

// Index of the component variable carried by m, or npos outside module mode.
std::size_t component_of(const Monomial& m, const std::vector<std::size_t>& comps) {
  for (std::size_t k = 0; k < comps.size(); ++k)
    if (m[comps[k]] != 0) return k;
  return std::numeric_limits<std::size_t>::max();
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  int sugar;
};

class Engine {
 public:
  Engine(const RingPtr& ring, const OrderPtr& order, const GroebnerOptions& options)
      : ring_(ring), order_(order), options_(options) {}

  GroebnerBasis run(std::span<const Polynomial> gens) {
    std::vector<Polynomial> input;
    for (const auto& g : gens) {
      if (!same_ring(g.ring(), ring_)) throw RingMismatch("generator from a different ring");
      if (!g.is_zero()) input.push_back(g.with_order(order_));
    }
    // small leading terms first keeps early reductions cheap
    std::sort(input.begin(), input.end(), [this](const Polynomial& a, const Polynomial& b) {
      return order_->compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    for (auto& g : input) {
      Polynomial h = reduce_full(std::move(g), active_pointers());
      if (!h.is_zero()) insert(h.monic(), h.total_degree());
      if (unit_) return finish();
    }
    std::size_t processed = 0;
    while (!pairs_.empty()) {
      if (options_.max_pairs != 0 && ++processed > options_.max_pairs)
        throw ResourceLimit("Groebner basis exceeded the S-pair bound");
      Pair p = take_pair();
      Polynomial s = s_polynomial(basis_[p.i], basis_[p.j]);
      Polynomial h = reduce_full(std::move(s), active_pointers());
      if (!h.is_zero()) insert(h.monic(), p.sugar);
      if (unit_) return finish();
    }
    return finish();
  }

 private:
  std::vector<const Polynomial*> active_pointers() const {
    std::vector<const Polynomial*> out;
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (active_[k]) out.push_back(&basis_[k]);
    return out;
  }

  Pair take_pair() {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& a = pairs_[k];
      const Pair& b = pairs_[best];
      if (a.sugar < b.sugar || (a.sugar == b.sugar && order_->compare(a.lcm, b.lcm) < 0)) best = k;
    }
    Pair p = pairs_[best];
    pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
    return p;
  }

  int pair_sugar(std::size_t i, std::size_t j, const Monomial& l) const {
    int a = sugar_[i] + l.degree() - basis_[i].leading_monomial().degree();
    int b = sugar_[j] + l.degree() - basis_[j].leading_monomial().degree();
    return std::max(a, b);
  }

  // Gebauer-Moeller UPDATE (Becker-Weispfenning formulation).
  void insert(Polynomial h, int sugar) {
    if (h.is_constant() && options_.component_vars.empty()) unit_ = true;
    const std::size_t hi = basis_.size();
    basis_.push_back(std::move(h));
    sugar_.push_back(sugar);
    active_.push_back(true);
    const Monomial& lh = basis_[hi].leading_monomial();
    const bool module_mode = !options_.component_vars.empty();
    const std::size_t hcomp = component_of(lh, options_.component_vars);

    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!active_[g]) continue;
      if (module_mode && component_of(basis_[g].leading_monomial(), options_.component_vars) != hcomp)
        continue;
      Monomial l = lcm(lh, basis_[g].leading_monomial());
      int s = pair_sugar(hi, g, l);
      candidates.push_back({hi, g, std::move(l), s});
    }

    auto coprime = [&](const Pair& p) {
      return !module_mode && lh.coprime(basis_[p.j].leading_monomial());
    };

    std::vector<Pair> kept;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const Pair& p = candidates[c];
      bool keep = coprime(p);
      if (!keep) {
        keep = true;
        for (std::size_t d = c + 1; d < candidates.size() && keep; ++d)
          if (candidates[d].lcm.divides(p.lcm)) keep = false;
        for (std::size_t d = 0; d < kept.size() && keep; ++d)
          if (kept[d].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) kept.push_back(p);
    }
    std::erase_if(kept, coprime);

    std::erase_if(pairs_, [&](const Pair& p) {
      if (!lh.divides(p.lcm)) return false;
      Monomial a = lcm(basis_[p.i].leading_monomial(), lh);
      Monomial b = lcm(basis_[p.j].leading_monomial(), lh);
      return a != p.lcm && b != p.lcm;
    });
    for (auto& p : kept) pairs_.push_back(std::move(p));

    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g] && lh.divides(basis_[g].leading_monomial())) active_[g] = false;
  }

  GroebnerBasis finish() {
    if (unit_) {
      return GroebnerBasis(ring_, order_, {Polynomial::constant(ring_, 1, order_)});
    }
    std::vector<Polynomial> minimal;
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (active_[k]) minimal.push_back(basis_[k]);
    std::vector<Polynomial> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<const Polynomial*> others;
      for (std::size_t m = 0; m < minimal.size(); ++m)
        if (m != k) others.push_back(&minimal[m]);
      // leading terms are pairwise non-divisible, so only tails change
      Polynomial tail = minimal[k];
      Term lead = tail.leading_term();
      tail.drop_leading_term();
      Polynomial r = reduce_full(std::move(tail), others);
      Polynomial full = Polynomial::monomial(ring_, lead.mono, lead.coeff, order_);
      full += r;
      reduced.push_back(full.monic());
    }
    std::sort(reduced.begin(), reduced.end(), [this](const Polynomial& a, const Polynomial& b) {
      return order_->compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    return GroebnerBasis(ring_, order_, std::move(reduced));
  }

  RingPtr ring_;
  OrderPtr order_;
  GroebnerOptions options_;
  std::vector<Polynomial> basis_;
  std::vector<int> sugar_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  bool unit_ = false;
};

}  // namespace

GroebnerBasis::GroebnerBasis(RingPtr ring, OrderPtr order, std::vector<Polynomial> elements)
    : ring_(std::move(ring)), order_(std::move(order)), elements_(std::move(elements)) {}

bool GroebnerBasis::is_unit() const { return elements_.size() == 1 && elements_[0].is_constant(); }

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  if (!same_ring(f.ring(), ring_)) throw RingMismatch("normal form across rings");
  return reduce_full(f.with_order(order_), pointers(elements_));
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements_.size());
  for (const auto& g : elements_) out.push_back(g.leading_monomial());
  return out;
}

bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
  if (!same_ring(a.ring_, b.ring_) || !same_order(a.order_, b.order_)) return false;
  return a.elements_ == b.elements_;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G, const OrderPtr& order) {
  for (const auto& g : G)
    if (!same_ring(g.ring(), f.ring())) throw RingMismatch("normal form across rings");
  std::vector<Polynomial> ordered;
  ordered.reserve(G.size());
  for (const auto& g : G) ordered.push_back(g.with_order(order));
  return reduce_full(f.with_order(order), pointers(ordered));
}

Division divide(const Polynomial& f, std::span<const Polynomial> G, const OrderPtr& order) {
  std::vector<Polynomial> ordered;
  for (const auto& g : G) {
    if (!same_ring(g.ring(), f.ring())) throw RingMismatch("division across rings");
    ordered.push_back(g.with_order(order));
  }
  Division out{{}, Polynomial(f.ring(), order)};
  for (std::size_t k = 0; k < G.size(); ++k) out.quotients.emplace_back(f.ring(), order);
  Polynomial p = f.with_order(order);
  while (!p.is_zero()) {
    bool hit = false;
    for (std::size_t k = 0; k < ordered.size(); ++k) {
      const auto& g = ordered[k];
      if (g.is_zero() || !g.leading_monomial().divides(p.leading_monomial())) continue;
      mpq_class c = p.leading_coeff() / g.leading_coeff();
      Monomial m = p.leading_monomial() / g.leading_monomial();
      out.quotients[k] += Polynomial::monomial(f.ring(), m, c, order);
      p.subtract_multiple(g, m, c);
      hit = true;
      break;
    }
    if (!hit) {
      out.remainder.push_back_term(p.leading_term());
      p.drop_leading_term();
    }
  }
  return out;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial s = f.times_term(l / f.leading_monomial(), 1 / f.leading_coeff());
  s.subtract_multiple(g, l / g.leading_monomial(), 1 / g.leading_coeff());
  return s;
}

GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> gens, const OrderPtr& order,
                         const GroebnerOptions& options) {
  if (order->nvars() != ring->size()) throw std::invalid_argument("order arity differs from ring");
  return Engine(ring, order, options).run(gens);
}

GroebnerBasis buchberger(std::span<const Polynomial> gens, const OrderPtr& order,
                         const GroebnerOptions& options) {
  if (gens.empty()) throw std::invalid_argument("buchberger: empty generator list needs a ring");
  return buchberger(gens.front().ring(), gens, order, options);
}

bool is_groebner_basis(std::span<const Polynomial> G, const OrderPtr& order, const GroebnerOptions& options) {
  std::vector<Polynomial> ordered;
  for (const auto& g : G)
    if (!g.is_zero()) ordered.push_back(g.with_order(order));
  auto ptrs = pointers(ordered);
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    for (std::size_t j = i + 1; j < ordered.size(); ++j) {
      const auto& a = ordered[i].leading_monomial();
      const auto& b = ordered[j].leading_monomial();
      if (!options.component_vars.empty() &&
          component_of(a, options.component_vars) != component_of(b, options.component_vars))
        continue;
      if (!reduce_full(s_polynomial(ordered[i], ordered[j]), ptrs).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace behrend
