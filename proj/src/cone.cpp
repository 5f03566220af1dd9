#include "behrend/cone.hpp"

#include <algorithm>
#include <numeric>

namespace behrend {

std::vector<std::size_t> ConeSetup::cone_indices() const {
  std::vector<std::size_t> out(k());
  std::iota(out.begin(), out.end(), base->size());
  return out;
}

ConeSetup cone_setup(const Ideal& J, const std::string& stem) {
  if (J.is_unit()) throw std::invalid_argument("the unit ideal defines the empty scheme");
  std::vector<Polynomial> gens = J.groebner().elements();
  // greedily drop elements generated by the others
  for (std::size_t i = gens.size(); i-- > 0;) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) others.push_back(gens[j]);
    if (!others.empty() && Ideal(J.ring(), others).contains(gens[i])) gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
  }
  ConeSetup s;
  s.base = J.ring();
  s.generators = std::move(gens);
  s.cone_vars = fresh_names(*J.ring(), stem, s.generators.size());
  s.extended = s.cone_vars.empty() ? J.ring() : extend_ring(*J.ring(), s.cone_vars);
  return s;
}

Ideal rees_ideal(const ConeSetup& setup, bool saturate_t) {
  if (setup.k() == 0) return Ideal(setup.extended);
  auto with_t = extend_ring(*setup.extended, fresh_names(*setup.extended, "t", 1));
  const std::size_t n = setup.base->size();
  const std::size_t t = setup.extended->size();
  std::vector<std::size_t> map(n);
  std::iota(map.begin(), map.end(), 0);
  auto tv = Polynomial::variable(with_t, t);
  std::vector<Polynomial> graph;
  for (std::size_t i = 0; i < setup.k(); ++i)
    graph.push_back(Polynomial::variable(with_t, n + i) - tv * setup.generators[i].map_variables(with_t, map));
  Ideal G(with_t, std::move(graph));
  if (saturate_t) G = saturate(G, tv);
  std::vector<std::size_t> drop{t};
  return restrict_to(eliminate(G, drop), setup.extended).reduced();
}

Ideal rees_ideal(const Ideal& J, bool saturate_t) { return rees_ideal(cone_setup(J), saturate_t); }

Ideal normal_cone_ideal(const ConeSetup& setup) {
  Ideal rees = rees_ideal(setup);
  return (rees + extend_to(Ideal(setup.base, setup.generators), setup.extended)).reduced();
}

Ideal normal_cone_ideal(const Ideal& J) { return normal_cone_ideal(cone_setup(J)); }

ConeDecomposition cone_components(const Ideal& J, const std::string& stem) {
  ConeDecomposition out{cone_setup(J, stem), Ideal(J.ring()), {}, {}};
  out.cone_ideal = normal_cone_ideal(out.setup);
  out.y_components = minimal_primes(J, false);
  const auto drop = out.setup.cone_indices();
  for (auto& pc : minimal_primes(out.cone_ideal)) {
    Ideal image = restrict_to(eliminate(pc.prime, drop), out.setup.base).reduced();
    ConeComponent c{pc.prime, pc.multiplicity, image, dimension(image), pc.status, false};
    c.dominates = std::any_of(out.y_components.begin(), out.y_components.end(),
                              [&](const PrimeComponent& y) { return y.prime == image; });
    out.components.push_back(std::move(c));
  }
  return out;
}

void Cycle::add(const CycleTerm& t) {
  for (auto it = terms.begin(); it != terms.end(); ++it) {
    if (it->prime == t.prime) {
      it->coefficient += t.coefficient;
      if (t.status == PrimalityStatus::Undecided) it->status = t.status;
      if (it->coefficient == 0) terms.erase(it);
      return;
    }
  }
  if (t.coefficient != 0) terms.push_back(t);
}

Cycle Cycle::operator+(const Cycle& other) const {
  Cycle out = *this;
  for (const auto& t : other.terms) out.add(t);
  return out;
}

Cycle Cycle::operator*(long k) const {
  Cycle out{ring, {}};
  for (auto t : terms) {
    t.coefficient *= k;
    out.add(t);
  }
  return out;
}

long Cycle::coefficient_of(const Ideal& prime) const {
  for (const auto& t : terms)
    if (t.prime == prime) return t.coefficient;
  return 0;
}

Cycle signed_support_cycle(const ConeDecomposition& cone) {
  Cycle c{cone.setup.base, {}};
  for (const auto& d : cone.components) {
    long sign = d.image_dimension % 2 == 0 ? 1 : -1;
    c.add({d.image, sign * d.multiplicity, d.image_dimension, d.status});
  }
  std::sort(c.terms.begin(), c.terms.end(), [](const CycleTerm& a, const CycleTerm& b) {
    if (a.dimension != b.dimension) return a.dimension > b.dimension;
    return a.prime.to_string() < b.prime.to_string();
  });
  return c;
}

Cycle signed_support_cycle(const Ideal& J) { return signed_support_cycle(cone_components(J)); }

}  // namespace behrend
