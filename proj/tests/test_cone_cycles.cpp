#include <numeric>

#include "doctest.h"

#include "behrend/cone.hpp"
#include "behrend/parse.hpp"

using namespace behrend;

namespace {

Ideal ideal(const RingPtr& r, const char* text) { return Ideal(r, parse_generators(text, r)); }
Polynomial P(const RingPtr& r, const char* s) { return parse_polynomial(s, r); }

// Every generator of the Rees ideal vanishes under e_i -> t*g_i.
void check_substitution(const ConeSetup& s, const Ideal& rees) {
  auto with_t = extend_ring(*s.extended, {"T_"});
  const std::size_t n = s.base->size();
  std::vector<std::size_t> map(s.extended->size());
  std::iota(map.begin(), map.end(), 0);
  std::vector<std::size_t> base_map(n);
  std::iota(base_map.begin(), base_map.end(), 0);
  auto t = Polynomial::variable(with_t, s.extended->size());
  for (const auto& g : rees.generators()) {
    Polynomial h = g.map_variables(with_t, map);
    for (std::size_t i = 0; i < s.k(); ++i) h = h.substitute(n + i, t * s.generators[i].map_variables(with_t, base_map));
    CHECK(h.is_zero());
  }
}

const ConeComponent* with_image(const ConeDecomposition& d, const Ideal& image) {
  for (const auto& c : d.components)
    if (c.image == image) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("rees ideals") {
  auto r1 = make_ring({"x"});
  CHECK(rees_ideal(ideal(r1, "x")).is_zero());

  auto r2 = make_ring({"x", "y"});
  auto s = cone_setup(ideal(r2, "x, y"));
  auto rees = rees_ideal(s);
  REQUIRE(rees.size() == 1);
  // generators are ordered (y, x) by the reduced basis, so e1 <-> y, e2 <-> x
  CHECK(s.generators[0] == P(r2, "y"));
  auto e = s.extended;
  CHECK(rees == Ideal(e, {parse_polynomial("x*e1 - y*e2", e)}));
  check_substitution(s, rees);
  CHECK(rees_ideal(s, true) == rees);

  auto r3 = make_ring({"x", "y", "z"});
  auto axes = cone_setup(ideal(r3, "xy, xz, yz"));
  auto ra = rees_ideal(axes);
  check_substitution(axes, ra);
  // with w_i <-> f_i for (f0, f1, f2) = (xy, xz, yz): w1 f0 - w0 f1 and w2 f0 - w0 f2
  std::vector<std::size_t> idx(3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j)
      if (axes.generators[j] == parse_generators("xy, xz, yz", r3)[i]) idx[i] = j;
  }
  auto ext = axes.extended;
  auto w = [&](std::size_t i) { return Polynomial::variable(ext, 3 + idx[i]); };
  auto f = [&](const char* s) { return parse_polynomial(s, ext); };
  CHECK(ra.contains(w(1) * f("x*y") - w(0) * f("x*z")));
  CHECK(ra.contains(w(2) * f("x*y") - w(0) * f("y*z")));
  CHECK(!ra.contains(w(2) * f("x*y") - w(1) * f("x*z")));
  CHECK(rees_ideal(axes, true) == ra);
}

TEST_CASE("normal cone ideals") {
  auto r2 = make_ring({"x", "y"});
  auto c = normal_cone_ideal(ideal(r2, "x"));
  CHECK(c == Ideal(c.ring(), {parse_polynomial("x", c.ring())}));
  CHECK(c.ring()->size() == 3);
  auto zero = normal_cone_ideal(Ideal(r2));
  CHECK(zero.is_zero());
  CHECK(zero.ring()->size() == 2);

  // restricting to the zero section recovers Y up to radical
  for (const char* text : {"y^2, xy", "x^2", "y - x^2"}) {
    auto J = ideal(r2, text);
    auto s = cone_setup(J);
    auto cone = normal_cone_ideal(s);
    Ideal zero_section = cone;
    for (std::size_t v : s.cone_indices()) zero_section = zero_section + Polynomial::variable(s.extended, v);
    auto back = restrict_to(eliminate(zero_section, s.cone_indices()), r2);
    CHECK(same_radical(back, J));
  }
}

TEST_CASE("cone components of the embedded point") {
  auto r2 = make_ring({"x", "y"});
  auto d = cone_components(ideal(r2, "y^2, xy"));
  REQUIRE(d.components.size() == 2);
  auto origin = with_image(d, ideal(r2, "x, y"));
  auto axis = with_image(d, ideal(r2, "y"));
  REQUIRE(origin);
  REQUIRE(axis);
  CHECK(origin->multiplicity == 2);
  CHECK(origin->image_dimension == 0);
  CHECK(!origin->dominates);
  CHECK(axis->multiplicity == 1);
  CHECK(axis->image_dimension == 1);
  CHECK(axis->dominates);
  for (const auto& comp : d.components) CHECK(dimension(comp.cone_prime) == 2);

  auto cyc = signed_support_cycle(d);
  CHECK(cyc.terms.size() == 2);
  CHECK(cyc.coefficient_of(ideal(r2, "x, y")) == 2);
  CHECK(cyc.coefficient_of(ideal(r2, "y")) == -1);
}

TEST_CASE("cone components of the three axes") {
  auto r3 = make_ring({"x", "y", "z"});
  auto d = cone_components(ideal(r3, "xy, xz, yz"));
  REQUIRE(d.components.size() == 4);
  auto origin = with_image(d, ideal(r3, "x, y, z"));
  REQUIRE(origin);
  CHECK(origin->multiplicity == 2);
  CHECK(origin->image_dimension == 0);
  for (const char* line : {"y, z", "x, z", "x, y"}) {
    auto c = with_image(d, ideal(r3, line));
    REQUIRE(c);
    CHECK(c->multiplicity == 1);
    CHECK(c->image_dimension == 1);
    CHECK(c->dominates);
  }
  for (const auto& comp : d.components) CHECK(dimension(comp.cone_prime) == 3);
  auto cyc = signed_support_cycle(d);
  CHECK(cyc.coefficient_of(ideal(r3, "x, y, z")) == 2);
  CHECK(cyc.coefficient_of(ideal(r3, "y, z")) == -1);
  CHECK(cyc.coefficient_of(ideal(r3, "x, z")) == -1);
  CHECK(cyc.coefficient_of(ideal(r3, "x, y")) == -1);
}

TEST_CASE("smooth schemes have cycle (-1)^d [Y]") {
  auto r2 = make_ring({"x", "y"});
  auto d = cone_components(ideal(r2, "x"));
  REQUIRE(d.components.size() == 1);
  CHECK(d.components[0].multiplicity == 1);
  CHECK(d.components[0].image_dimension == 1);
  CHECK(d.components[0].dominates);

  auto r3 = make_ring({"x", "y", "z"});
  for (const char* text : {"x, y, z", "y - x^2, z - x^3", "z - x*y", ""}) {
    auto J = ideal(r3, text);
    auto cyc = signed_support_cycle(J);
    REQUIRE(cyc.terms.size() == 1);
    int dim = dimension(J);
    CHECK(cyc.terms[0].prime == J);
    CHECK(cyc.terms[0].coefficient == (dim % 2 == 0 ? 1 : -1));
  }
}

TEST_CASE("cycle arithmetic") {
  auto r2 = make_ring({"x", "y"});
  Cycle a{r2, {}};
  a.add({ideal(r2, "x"), 2, 1, PrimalityStatus::Certified});
  a.add({ideal(r2, "x, y"), 1, 0, PrimalityStatus::Certified});
  Cycle b = a * -1;
  CHECK((a + b).terms.empty());
  a.add({ideal(r2, "x"), -2, 1, PrimalityStatus::Certified});
  CHECK(a.terms.size() == 1);
}

TEST_CASE("cone variable names avoid collisions") {
  auto r = make_ring({"e1", "x"});
  auto s = cone_setup(ideal(r, "e1*x, x^2"));
  CHECK(s.cone_vars.size() == 2);
  for (const auto& v : s.cone_vars) CHECK(v != "e1");
}
