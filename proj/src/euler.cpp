#include "behrend/euler.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

namespace behrend {

std::string to_string(EuRule r) {
  switch (r) {
    case EuRule::Outside: return "outside";
    case EuRule::Nonsingular: return "nonsingular";
    case EuRule::CurveMultiplicity: return "curve-multiplicity";
    case EuRule::PlaneCone: return "plane-cone";
    case EuRule::AluffiCone: return "aluffi-cone";
    case EuRule::Unsupported: return "unsupported";
  }
  return "unsupported";
}

std::string to_string(ConeCurveData::Status s) {
  switch (s) {
    case ConeCurveData::Status::Cone: return "cone over a smooth curve";
    case ConeCurveData::Status::NotHomogeneous: return "not a cone at the point";
    case ConeCurveData::Status::NotCurve: return "not a cone over a curve";
    case ConeCurveData::Status::Singular: return "cone over a singular curve";
  }
  return "";
}

bool vanishes_at(const Ideal& I, std::span<const mpq_class> p) {
  if (p.size() != I.ring()->size()) throw std::invalid_argument("point has the wrong number of coordinates");
  Point q(p.begin(), p.end());
  for (auto& c : q) I.ring()->normalize(c);
  for (const auto& g : I.generators()) {
    mpq_class v = g.evaluate(q);
    I.ring()->normalize(v);
    if (v != 0) return false;
  }
  return true;
}

Ideal translate(const Ideal& I, std::span<const mpq_class> p) {
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(g.translate(p));
  return Ideal(I.ring(), std::move(gens));
}

namespace {

Polynomial determinant(const PolyMatrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
  if (rows.size() == 1) return m[rows[0]][cols[0]];
  const auto& ring = m[rows[0]][cols[0]].ring();
  Polynomial det(ring);
  std::vector<std::size_t> rest(rows.begin() + 1, rows.end());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const Polynomial& a = m[rows[0]][cols[j]];
    if (a.is_zero()) continue;
    std::vector<std::size_t> sub;
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (c != j) sub.push_back(cols[c]);
    Polynomial term = a * determinant(m, rest, sub);
    if (j % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Polynomial linear_form_at(const RingPtr& ring, const std::vector<long>& c, std::span<const mpq_class> p) {
  Polynomial l(ring);
  for (std::size_t i = 0; i < c.size(); ++i)
    l += mpq_class(c[i]) * (Polynomial::variable(ring, i) - Polynomial::constant(ring, p[i]));
  return l;
}

void require_on(const Ideal& V, std::span<const mpq_class> p) {
  if (!vanishes_at(V, p)) throw PointNotOnVariety("point does not lie on the variety");
}

}  // namespace

std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t k) {
  if (k == 0) throw std::invalid_argument("minors of size 0");
  std::vector<Polynomial> out;
  if (m.empty()) return out;
  const std::size_t rows = m.size(), cols = m.front().size();
  for_each_subset(rows, k, [&](const std::vector<std::size_t>& r) {
    for_each_subset(cols, k, [&](const std::vector<std::size_t>& c) {
      Polynomial d = determinant(m, r, c);
      if (!d.is_zero()) out.push_back(std::move(d));
    });
  });
  return out;
}

Ideal tangent_cone(const Ideal& V, std::span<const mpq_class> p) {
  require_on(V, p);
  const auto& ring = V.ring();
  const std::size_t n = ring->size();
  Ideal moved = translate(V, p);
  if (moved.is_zero()) return moved;
  // standard basis for the local degree order via homogenisation
  auto with_h = extend_ring(*ring, fresh_names(*ring, "h", 1));
  using Row = MonomialOrder::Row;
  std::vector<int> all(n + 1, 1), honly(n + 1, 0);
  honly[n] = 1;
  std::vector<std::size_t> xs(n);
  std::iota(xs.begin(), xs.end(), 0);
  auto order = MonomialOrder::custom(n + 1, {Row{Row::Kind::Weight, all, {}}, Row{Row::Kind::Weight, honly, {}}, Row{Row::Kind::RevLex, {}, xs}},
                                     "local-degree");
  std::vector<Polynomial> hom;
  for (const auto& g : moved.generators()) hom.push_back(homogenize(g, with_h));
  Ideal H(with_h, std::move(hom));
  std::vector<Polynomial> forms;
  std::vector<std::size_t> h_index{n};
  std::vector<mpq_class> one{1};
  for (const auto& g : H.groebner(order).elements()) {
    Polynomial f = g.specialize(h_index, one);
    if (f.is_zero()) continue;
    // specialize keeps the ring; drop the now unused h
    Polynomial back(ring);
    for (const auto& t : f.terms()) {
      Monomial m(std::vector<int>(t.mono.exponents().begin(), t.mono.exponents().begin() + static_cast<std::ptrdiff_t>(n)));
      back += Polynomial::monomial(ring, m, t.coeff);
    }
    forms.push_back(back.homogeneous_part(back.lowest_degree()));
  }
  return Ideal(ring, std::move(forms)).reduced();
}

int tangent_cone_degree(const Ideal& V, std::span<const mpq_class> p) { return hilbert_degree(tangent_cone(V, p)); }

int local_length(const Ideal& I, std::span<const mpq_class> p) {
  const auto& ring = I.ring();
  const std::size_t n = ring->size();
  Ideal moved = translate(I, p);
  if (!vanishes_at(I, p)) return 0;
  std::optional<std::size_t> prev;
  for (unsigned N = 1; N <= 64; ++N) {
    std::vector<Polynomial> gens = moved.generators();
    // all monomials of degree N
    std::vector<int> e(n, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
      if (i + 1 == n) {
        e[i] = left;
        gens.push_back(Polynomial::monomial(ring, Monomial(e)));
        return;
      }
      for (int a = 0; a <= left; ++a) {
        e[i] = a;
        rec(i + 1, left - a);
      }
    };
    if (n > 0) rec(0, static_cast<int>(N));
    auto len = colength(Ideal(ring, std::move(gens)));
    if (!len) throw std::logic_error("truncation by a power of the maximal ideal is not zero-dimensional");
    if (prev && *prev == *len) return static_cast<int>(*len);
    prev = len;
  }
  throw ResourceLimit("local length did not stabilise; the point is not isolated");
}

int curve_multiplicity(const Ideal& V, std::span<const mpq_class> p, std::uint64_t seed) {
  require_on(V, p);
  if (dimension(V) != 1) throw std::invalid_argument("curve multiplicity needs a one-dimensional variety");
  const int from_cone = tangent_cone_degree(V, p);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-9, 9);
  const std::size_t n = V.ring()->size();
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<long> c(n);
    for (auto& x : c) x = coeff(rng);
    if (std::all_of(c.begin(), c.end(), [](long x) { return x == 0; })) continue;
    Ideal cut = V + linear_form_at(V.ring(), c, p);
    if (dimension(cut) > 0) continue;
    const int len = local_length(cut, p);
    if (len == from_cone) return from_cone;
    if (len < from_cone) throw std::logic_error("hyperplane section shorter than the tangent cone degree");
  }
  throw std::runtime_error("no hyperplane draw confirmed the tangent cone degree");
}

ConeCurveData cone_over_curve_data(const Ideal& V, std::span<const mpq_class> vertex) {
  ConeCurveData out;
  require_on(V, vertex);
  Ideal moved = translate(V, vertex).reduced();
  if (!moved.is_homogeneous()) return out;
  const std::size_t n = V.ring()->size();
  if (dimension(moved) != 2) {
    out.status = ConeCurveData::Status::NotCurve;
    return out;
  }
  if (n > 2) {
    auto m = minors(jacobian(moved), n - 2);
    Ideal sing = moved;
    for (auto& f : m) sing = sing + f;
    if (dimension(sing) > 0) {
      out.status = ConeCurveData::Status::Singular;
      return out;
    }
  }
  auto hs = hilbert_series(moved);
  out.status = ConeCurveData::Status::Cone;
  out.degree = static_cast<int>(hs.degree().get_si());
  out.genus = static_cast<int>(1 - hs.degree().get_si() + hs.numerator_derivative_at_one().get_si());
  out.plane = n == 3;
  return out;
}

EuVerdict eu_point(const EuQuery& q, std::uint64_t seed) {
  const Ideal& V = q.variety;
  if (V.is_unit() || !vanishes_at(V, q.point)) return {0, EuRule::Outside, ""};
  PrimalityStatus status;
  if (q.status) {
    status = *q.status;
  } else {
    auto comps = minimal_primes(V, false);
    bool certified = std::all_of(comps.begin(), comps.end(),
                                 [](const PrimeComponent& c) { return c.status == PrimalityStatus::Certified; });
    if (comps.size() != 1 || !(comps[0].prime == V)) {
      if (certified) throw std::invalid_argument("variety ideal is not prime: " + V.to_string());
      return {std::nullopt, EuRule::Unsupported, "primality undecided"};
    }
    status = comps[0].status;
  }
  if (status == PrimalityStatus::Undecided) return {std::nullopt, EuRule::Unsupported, "primality undecided"};

  const int n = static_cast<int>(V.ring()->size());
  const int d = dimension(V);
  if (tangent_dimension_at_point(V, q.point) == d) return {1, EuRule::Nonsingular, ""};
  if (d == 1) return {curve_multiplicity(V, q.point, seed), EuRule::CurveMultiplicity, ""};
  auto cone = cone_over_curve_data(V, q.point);
  if (cone.status == ConeCurveData::Status::Cone) {
    const long deg = cone.degree;
    if (n == 3) return {deg * (2 - deg), EuRule::PlaneCone, ""};
    return {2 - 2L * cone.genus - deg, EuRule::AluffiCone, ""};
  }
  return {std::nullopt, EuRule::Unsupported, to_string(cone.status)};
}

ConstructibleEvaluation eu_cycle(const Cycle& c, std::span<const mpq_class> p, std::uint64_t seed) {
  ConstructibleEvaluation out{Point(p.begin(), p.end()), 0L, {}};
  for (const auto& t : c.terms) {
    EuVerdict v = eu_point({t.prime, out.point, t.status}, seed);
    if (v.value && out.value)
      *out.value += t.coefficient * *v.value;
    else
      out.value.reset();
    out.per_term.push_back({t.prime, t.coefficient, std::move(v)});
  }
  return out;
}

}  // namespace behrend
