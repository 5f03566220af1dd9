#include "behrend/primes.hpp"

#include <algorithm>
#include <random>

#include "behrend/factor.hpp"
#include "behrend/module.hpp"

namespace behrend {

namespace {

struct Candidate {
  Ideal prime;
  bool certified;
  bool geometric;
  std::string method;
};

constexpr int kMaxDepth = 256;

std::size_t count_over_function_field(const Ideal& K, const OrderPtr& order, const std::vector<std::size_t>& v) {
  const auto& gb = K.groebner(order);
  std::vector<Monomial> leads;
  for (const auto& m : gb.leading_monomials()) {
    Monomial proj(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) proj.set(i, m[v[i]]);
    if (proj.is_one()) return 0;
    leads.push_back(std::move(proj));
  }
  auto sm = monomials_outside(v.size(), leads);
  if (!sm) throw std::logic_error("ideal is not zero-dimensional over the independent variables");
  return sm->size();
}

class Decomposer {
 public:
  explicit Decomposer(const RingPtr& ring) : ring_(ring) {}

  void run(const Ideal& J, std::vector<Candidate>& out, int depth = 0) {
    if (depth > kMaxDepth) throw ResourceLimit("minimal primes: splitting recursion too deep");
    const auto& gb = J.groebner();
    if (gb.is_unit()) return;
    const auto& elems = gb.elements();
    if (reduce_linear(elems, out, depth)) return;
    if (split_on_factor(J, elems, out, depth)) return;
    if (elems.empty()) {
      out.push_back({J, true, true, "linear"});
      return;
    }
    if (elems.size() == 1) {
      bool irreducible = irreducibility(elems[0]) == Irreducibility::Irreducible;
      out.push_back({J, irreducible, false, irreducible ? "hypersurface" : "undecided"});
      return;
    }
    if (dimension(J) == 0) {
      zero_dimensional(J, out, depth);
      return;
    }
    positive_dimensional(J, out, depth);
  }

 private:
  // g = c*v + h with c a constant: substitute v away and recurse.
  bool reduce_linear(const std::vector<Polynomial>& elems, std::vector<Candidate>& out, int depth) {
    for (const auto& g : elems) {
      for (std::size_t v : g.support()) {
        if (g.degree_in(v) != 1) continue;
        auto cs = g.coefficients_in(v);
        if (!cs[1].is_constant()) continue;
        Polynomial value = cs[0] * (mpq_class(-1) / cs[1].leading_coeff());
        std::vector<Polynomial> rest;
        for (const auto& e : elems)
          if (&e != &g) rest.push_back(e.substitute(v, value));
        std::vector<Candidate> sub;
        run(Ideal(ring_, std::move(rest)), sub, depth + 1);
        for (auto& c : sub) out.push_back({(c.prime + g).reduced(), c.certified, c.geometric, c.method});
        return true;
      }
    }
    return false;
  }

  bool split(const Ideal& J, const Polynomial& a, const Polynomial& b, std::vector<Candidate>& out, int depth) {
    if (J.contains(a) || J.contains(b)) return false;
    run(J + a, out, depth + 1);
    if (a.monic() != b.monic()) run(J + b, out, depth + 1);
    return true;
  }

  bool split_on_factor(const Ideal& J, const std::vector<Polynomial>& elems, std::vector<Candidate>& out,
                       int depth) {
    for (const auto& g : elems) {
      auto a = find_factor(g);
      if (!a) continue;
      auto b = exact_divide(g, *a);
      if (!b) continue;
      if (split(J, a->monic(), b->monic(), out, depth)) return true;
    }
    return false;
  }

  // Splits along a factor of the eliminant of `form`, or certifies primality
  // when the eliminant is irreducible of degree equal to the colength.
  enum class Outcome { Split, Prime, Nothing };

  // `drop` lists the variables eliminated along with the form; the rest are
  // independent modulo J.
  Outcome try_form(const Ideal& J, const Polynomial& form, std::size_t colen, const std::vector<std::size_t>& drop,
                   std::vector<Candidate>& out, int depth) {
    auto ext = extend_ring(*ring_, fresh_names(*ring_, "s", 1));
    const std::size_t s = ring_->size();
    std::vector<std::size_t> map(ring_->size());
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
    Ideal big = extend_to(J, ext) + (Polynomial::variable(ext, s) - form.map_variables(ext, map));
    Ideal elim = eliminate(big, drop);
    if (elim.size() != 1) return Outcome::Nothing;
    const Polynomial& e = elim.generators()[0];
    if (auto a = find_factor(e)) {
      if (auto b = exact_divide(e, *a)) {
        Polynomial av = a->substitute(s, form.map_variables(ext, map));
        Polynomial bv = b->substitute(s, form.map_variables(ext, map));
        Ideal back_a = restrict_to(Ideal(ext, {av}), ring_);
        Ideal back_b = restrict_to(Ideal(ext, {bv}), ring_);
        if (split(J, back_a.generators()[0], back_b.generators()[0], out, depth)) return Outcome::Split;
      }
    }
    if (static_cast<std::size_t>(e.degree_in(s)) != colen) return Outcome::Nothing;
    const bool univariate = e.support().size() == 1;
    if ((univariate ? univariate_irreducibility(e, s) : irreducibility(e)) == Irreducibility::Irreducible)
      return Outcome::Prime;
    return Outcome::Nothing;
  }

  void zero_dimensional(const Ideal& J, std::vector<Candidate>& out, int depth) {
    auto colen = colength(J);
    if (!colen) {
      out.push_back({J, false, false, "undecided"});
      return;
    }
    std::vector<std::size_t> all(ring_->size());
    for (std::size_t v = 0; v < all.size(); ++v) all[v] = v;
    for (const auto& form : forms_in(all)) {
      switch (try_form(J, form, *colen, all, out, depth)) {
        case Outcome::Split:
          return;
        case Outcome::Prime:
          out.push_back({J, true, *colen == 1, "eliminant"});
          return;
        case Outcome::Nothing:
          break;
      }
    }
    out.push_back({J, false, false, "undecided"});
  }

  std::vector<Polynomial> forms_in(const std::vector<std::size_t>& vars) const {
    std::vector<Polynomial> forms;
    for (std::size_t v : vars) forms.push_back(Polynomial::variable(ring_, v));
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int k = 0; k < 6; ++k) {
      Polynomial l(ring_);
      for (std::size_t v : vars) l += Polynomial::constant(ring_, coef(rng)) * Polynomial::variable(ring_, v);
      if (!l.is_zero()) forms.push_back(l);
    }
    return forms;
  }

  // With u independent and v the remaining variables, J is prime when it is
  // saturated by the leading coefficients in k[u] and a primitive element of
  // k(u)[v]/J has an irreducible minimal polynomial.
  void positive_dimensional(const Ideal& J, std::vector<Candidate>& out, int depth) {
    const std::size_t n = ring_->size();
    auto u = independent_set(J);
    std::vector<std::size_t> v;
    for (std::size_t i = 0; i < n; ++i)
      if (std::find(u.begin(), u.end(), i) == u.end()) v.push_back(i);
    auto order = MonomialOrder::elimination(n, v);
    Polynomial h = Polynomial::constant(ring_, 1);
    for (const auto& g : J.groebner(order).elements()) {
      Monomial lead(n);
      for (std::size_t i : v) lead.set(i, g.leading_monomial()[i]);
      Polynomial c(ring_);
      for (const auto& t : g.terms()) {
        bool same = true;
        for (std::size_t i : v) same = same && t.mono[i] == lead[i];
        if (same) c += Polynomial::monomial(ring_, t.mono / lead, t.coeff);
      }
      if (!c.is_constant()) h *= c;
    }
    if (!h.is_constant()) {
      Ideal sat = saturate(J, h);
      if (!(sat == J)) {
        // V(J) = V(J : h^inf) u V(J + h)
        run(sat, out, depth + 1);
        run(J + h, out, depth + 1);
        return;
      }
    }
    const std::size_t colen = count_over_function_field(J, order, v);
    for (const auto& form : forms_in(v)) {
      switch (try_form(J, form, colen, v, out, depth)) {
        case Outcome::Split:
          return;
        case Outcome::Prime:
          out.push_back({J, true, colen == 1, "generic-projection"});
          return;
        case Outcome::Nothing:
          break;
      }
    }
    out.push_back({J, false, false, "undecided"});
  }

  RingPtr ring_;
};

}  // namespace

std::string to_string(PrimalityStatus s) { return s == PrimalityStatus::Certified ? "certified" : "undecided"; }

Ideal saturate(const Ideal& I, const Ideal& J) {
  if (J.is_zero()) return Ideal::unit(I.ring());
  Ideal out = Ideal::unit(I.ring());
  bool first = true;
  for (const auto& f : J.generators()) {
    Ideal s = saturate(I, f);
    out = first ? s : intersect(out, s);
    first = false;
  }
  return out.reduced();
}

bool is_minimal_over(const Ideal& I, const Ideal& P) {
  if (!P.contains(I) || P.is_unit()) return false;
  if (P.is_zero()) return true;
  return !P.contains(saturate(I, P));
}

int multiplicity_along(const Ideal& I, const Ideal& P, bool check_minimal) {
  if (check_minimal && !is_minimal_over(I, P)) throw NotMinimal("prime is not minimal over the ideal");
  if (P.is_zero()) return 1;
  const std::size_t n = I.ring()->size();
  auto u = independent_set(P);
  std::vector<std::size_t> v;
  for (std::size_t i = 0; i < n; ++i)
    if (std::find(u.begin(), u.end(), i) == u.end()) v.push_back(i);
  auto order = MonomialOrder::elimination(n, v);
  const std::size_t base = count_over_function_field(P, order, v);
  if (base == 0) throw std::logic_error("prime extends to the unit ideal");
  std::size_t prev = base;
  Ideal power = P.reduced();
  for (int N = 2; N <= 64; ++N) {
    power = (power * P).reduced();
    std::size_t cur = count_over_function_field(I + power, order, v);
    if (cur == prev) {
      if (cur % base != 0) throw std::logic_error("length is not a multiple of the residue degree");
      return static_cast<int>(cur / base);
    }
    prev = cur;
  }
  throw ResourceLimit("multiplicity: power chain did not stabilise");
}

std::vector<PrimeComponent> minimal_primes(const Ideal& I, bool with_multiplicity) {
  if (I.is_unit()) throw std::invalid_argument("minimal_primes: unit ideal has no primes");
  std::vector<Candidate> raw;
  Decomposer(I.ring()).run(I, raw);
  std::vector<Candidate> unique;
  for (auto& c : raw) {
    c.prime = c.prime.reduced();
    bool seen = false;
    for (auto& u : unique) {
      if (u.prime == c.prime) {
        seen = true;
        if (c.certified && !u.certified) u = c;
        break;
      }
    }
    if (!seen) unique.push_back(std::move(c));
  }
  std::vector<PrimeComponent> out;
  for (std::size_t i = 0; i < unique.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < unique.size() && minimal; ++j)
      if (i != j && unique[i].prime.contains(unique[j].prime)) minimal = false;
    if (!minimal) continue;
    PrimeComponent pc{unique[i].prime, 0, 0, 0, PrimalityStatus::Undecided, {}, false};
    pc.dimension = dimension(pc.prime);
    pc.degree = affine_degree(pc.prime);
    pc.status = unique[i].certified ? PrimalityStatus::Certified : PrimalityStatus::Undecided;
    pc.method = unique[i].method;
    pc.geometrically_irreducible = unique[i].certified && (unique[i].geometric || pc.degree == 1);
    if (with_multiplicity) pc.multiplicity = multiplicity_along(I, pc.prime, false);
    out.push_back(std::move(pc));
  }
  std::sort(out.begin(), out.end(), [](const PrimeComponent& a, const PrimeComponent& b) {
    if (a.dimension != b.dimension) return a.dimension > b.dimension;
    return a.prime.to_string() < b.prime.to_string();
  });
  return out;
}

}  // namespace behrend
