#include "behrend/behrend.hpp"

#include <algorithm>

namespace behrend {

namespace {

int parity_sign(int d) { return d % 2 == 0 ? 1 : -1; }

}  // namespace

BehrendEvaluator::BehrendEvaluator(Ideal J, std::uint64_t seed)
    : J_(std::move(J)), seed_(seed), cone_(cone_components(J_)) {}

BehrendEvaluation BehrendEvaluator::at(std::span<const mpq_class> p) const {
  if (!vanishes_at(J_, p)) throw PointNotOnVariety("point does not lie on V(J)");
  BehrendEvaluation out{Point(p.begin(), p.end()), 0L, {}, 0, 0, {}};
  for (const auto& d : cone_.components) {
    if (!vanishes_at(d.image, p)) continue;
    BehrendTerm t{d, eu_point({d.image, out.point, d.status}, seed_), 0};
    if (t.eu.value) {
      t.contribution = parity_sign(d.image_dimension) * d.multiplicity * *t.eu.value;
      (d.dominates ? out.dominant_sum : out.other_sum) += t.contribution;
    } else if (out.value) {
      out.value.reset();
      out.failure = "Eu unsupported on " + d.image.to_string() + ": " + t.eu.note;
    }
    out.breakdown.push_back(std::move(t));
  }
  if (out.value) out.value = out.dominant_sum + out.other_sum;
  return out;
}

BehrendEvaluation behrend_value(const Ideal& J, std::span<const mpq_class> p, std::uint64_t seed) {
  return BehrendEvaluator(J, seed).at(p);
}

Ideal component_open_set_guard(const Ideal& J, const Ideal& Z) {
  std::optional<Ideal> guard;
  bool found = false;
  for (const auto& c : minimal_primes(J, false)) {
    if (c.prime == Z) {
      found = true;
      continue;
    }
    guard = guard ? intersect(*guard, c.prime) : c.prime;
  }
  if (!found) throw NotMinimal("component is not a minimal prime of the ideal");
  return guard ? guard->reduced() : Ideal::unit(J.ring());
}

int dominating_cone_multiplicity(const Ideal& Z) {
  auto cone = cone_components(Z);
  int m = 0;
  for (const auto& d : cone.components)
    if (d.image == Z) m += d.multiplicity;
  if (m == 0) throw std::logic_error("no cone component lies over the prime");
  return m;
}

int smooth_general_value(const Ideal& Z) { return parity_sign(dimension(Z)) * dominating_cone_multiplicity(Z); }

std::string to_string(ComponentReport::Verdict v) {
  switch (v) {
    case ComponentReport::Verdict::Pass: return "pass";
    case ComponentReport::Verdict::Violation: return "violation";
    case ComponentReport::Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::string to_string(ConstancyCertificate::Overall o) {
  switch (o) {
    case ConstancyCertificate::Overall::NecessaryConditionsHold: return "necessary conditions hold";
    case ConstancyCertificate::Overall::NotConstant: return "Behrend function is NOT constant";
    case ConstancyCertificate::Overall::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

ConstancyCertificate constancy_falsifier(const Ideal& J, std::optional<int> sign) {
  if (sign && *sign != 1 && *sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  ConstancyCertificate cert;
  auto comps = minimal_primes(J, true);
  if (sign) {
    cert.sign = *sign;
  } else {
    auto first = std::find_if(comps.begin(), comps.end(),
                              [](const PrimeComponent& c) { return c.status == PrimalityStatus::Certified; });
    cert.sign = parity_sign(first == comps.end() ? comps.front().dimension : first->dimension);
    cert.sign_inferred = true;
  }
  bool undecided = false;
  for (const auto& c : comps) {
    ComponentReport r{c, false, 0, 0, 1, 1, 0, ComponentReport::Verdict::Inconclusive, {}};
    r.dim = c.dimension;
    r.sign_dim = parity_sign(c.dimension);
    if (c.status == PrimalityStatus::Undecided) {
      r.verdict = ComponentReport::Verdict::Inconclusive;
      r.reason = "primality undecided";
      undecided = true;
      cert.reports.push_back(std::move(r));
      continue;
    }
    r.generically_reduced = c.multiplicity == 1;
    r.generic_tangent_dim = generic_tangent_dimension(J, c.prime);
    r.sign_tangent = parity_sign(r.generic_tangent_dim);
    r.m = dominating_cone_multiplicity(c.prime);
    std::vector<std::string> reasons;
    if (!r.generically_reduced)
      reasons.push_back("component multiplicity " + std::to_string(c.multiplicity) + " != 1 (not generically reduced)");
    if (r.generic_tangent_dim != r.dim)
      reasons.push_back("generic tangent dimension " + std::to_string(r.generic_tangent_dim) + " != dim " +
                        std::to_string(r.dim));
    if (r.m != 1) reasons.push_back("dominating cone multiplicity " + std::to_string(r.m) + " != 1");
    if (r.sign_dim != cert.sign)
      reasons.push_back("sign (-1)^" + std::to_string(r.dim) + " = " + std::to_string(r.sign_dim) + " != " +
                        std::to_string(cert.sign));
    if (reasons.empty()) {
      r.verdict = ComponentReport::Verdict::Pass;
    } else {
      r.verdict = ComponentReport::Verdict::Violation;
      for (std::size_t i = 0; i < reasons.size(); ++i) r.reason += (i ? "; " : "") + reasons[i];
      cert.witnesses.push_back(c.prime.to_string() + ": " + r.reason);
    }
    cert.reports.push_back(std::move(r));
  }
  if (!cert.witnesses.empty())
    cert.overall = ConstancyCertificate::Overall::NotConstant;
  else if (undecided)
    cert.overall = ConstancyCertificate::Overall::Inconclusive;
  else
    cert.overall = ConstancyCertificate::Overall::NecessaryConditionsHold;
  return cert;
}

}  // namespace behrend
