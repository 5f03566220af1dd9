#include "doctest.h"

#include "behrend/behrend.hpp"
#include "behrend/parse.hpp"

using namespace behrend;

namespace {

Ideal ideal(const RingPtr& r, const char* text) { return Ideal(r, parse_generators(text, r)); }
Point pt(std::initializer_list<long> c) {
  Point p;
  for (long v : c) p.emplace_back(v);
  return p;
}

long value_at(const Ideal& J, const Point& p) {
  auto e = behrend_value(J, p);
  REQUIRE(e.value);
  return *e.value;
}

const ComponentReport* report_for(const ConstancyCertificate& c, const Ideal& prime) {
  for (const auto& r : c.reports)
    if (r.component.prime == prime) return &r;
  return nullptr;
}

}  // namespace

TEST_CASE("behrend values on the worked examples") {
  auto r2 = make_ring({"x", "y"});
  auto r3 = make_ring({"x", "y", "z"});
  auto embedded = ideal(r2, "y^2, xy");
  CHECK(value_at(embedded, pt({0, 0})) == 1);
  CHECK(value_at(embedded, pt({1, 0})) == -1);
  CHECK(value_at(embedded, pt({-5, 0})) == -1);

  auto axes = ideal(r3, "xy, xz, yz");
  CHECK(value_at(axes, pt({0, 0, 0})) == -1);
  CHECK(value_at(axes, pt({1, 0, 0})) == -1);
  CHECK(value_at(axes, pt({0, 3, 0})) == -1);
  CHECK(value_at(axes, pt({0, 0, -2})) == -1);

  auto e = behrend_value(axes, pt({0, 0, 0}));
  CHECK(e.breakdown.size() == 4);
  CHECK(e.dominant_sum == -3);
  CHECK(e.other_sum == 2);

  CHECK_THROWS_AS(behrend_value(embedded, pt({1, 1})), PointNotOnVariety);
}

TEST_CASE("smooth schemes have constant value (-1)^d") {
  auto r3 = make_ring({"x", "y", "z"});
  struct Case {
    const char* J;
    std::vector<Point> points;
  };
  std::vector<Case> cases{
      {"x, y, z", {pt({0, 0, 0})}},
      {"y - x^2, z - x^3", {pt({0, 0, 0}), pt({2, 4, 8}), pt({-1, 1, -1})}},
      {"z - x*y", {pt({0, 0, 0}), pt({2, 3, 6})}},
      {"x^2 + y^2 + z^2 - 1", {pt({1, 0, 0}), pt({0, 0, -1})}},
      {"", {pt({0, 0, 0}), pt({7, -1, 2})}},
  };
  for (const auto& c : cases) {
    auto J = ideal(r3, c.J);
    BehrendEvaluator ev(J);
    const long expected = dimension(J) % 2 == 0 ? 1 : -1;
    for (const auto& p : c.points) {
      auto v = ev.at(p);
      REQUIRE(v.value);
      CHECK(*v.value == expected);
    }
  }
}

TEST_CASE("cone over a cubic") {
  auto r3 = make_ring({"x", "y", "z"});
  auto J = ideal(r3, "x^3 + y^3 + z^3");
  auto e = behrend_value(J, pt({0, 0, 0}));
  REQUIRE(e.value);
  CHECK(*e.value == -3);
  // the split bucket over Y is (-1)^{dim Y} Eu(Y)(p) m for irreducible Y
  CHECK(e.dominant_sum == 1 * -3 * dominating_cone_multiplicity(J));
  CHECK(value_at(J, pt({1, -1, 0})) == 1);

  // unsupported Eu aborts the total
  auto nodal = ideal(r3, "y^2*z - x^2*z - x^3");
  auto bad = behrend_value(nodal, pt({0, 0, 0}));
  CHECK(!bad.value);
  CHECK(!bad.failure.empty());
}

TEST_CASE("open set guards") {
  auto r2 = make_ring({"x", "y"});
  auto r3 = make_ring({"x", "y", "z"});
  CHECK(component_open_set_guard(ideal(r2, "x*y"), ideal(r2, "x")) == ideal(r2, "y"));
  CHECK(component_open_set_guard(ideal(r2, "y - x^2"), ideal(r2, "y - x^2")).is_unit());
  CHECK(component_open_set_guard(ideal(r3, "xy, xz, yz"), ideal(r3, "y, z")) == ideal(r3, "x, y*z"));
  CHECK_THROWS_AS(component_open_set_guard(ideal(r2, "x*y"), ideal(r2, "x, y")), NotMinimal);
}

TEST_CASE("dominating cone multiplicity and general values") {
  auto r1 = make_ring({"x"});
  auto r2 = make_ring({"x", "y"});
  auto r3 = make_ring({"x", "y", "z"});
  CHECK(dominating_cone_multiplicity(ideal(r2, "y - x^2")) == 1);
  CHECK(dominating_cone_multiplicity(ideal(r1, "x")) == 1);
  CHECK(dominating_cone_multiplicity(ideal(r2, "y")) == 1);
  CHECK(dominating_cone_multiplicity(ideal(r3, "x^3 + y^3 + z^3")) == 1);

  CHECK(smooth_general_value(ideal(r3, "y - x^2, z")) == -1);
  CHECK(smooth_general_value(ideal(r3, "z - x*y")) == 1);
  CHECK(smooth_general_value(ideal(r2, "y")) == -1);
  CHECK(smooth_general_value(ideal(r2, "y")) == value_at(ideal(r2, "y^2, xy"), pt({1, 0})));
}

TEST_CASE("general values agree with pointwise values away from other components") {
  auto r3 = make_ring({"x", "y", "z"});
  struct Case {
    const char* J;
    const char* Z;
    Point p;
  };
  std::vector<Case> cases{
      {"xy, xz, yz", "y, z", pt({2, 0, 0})},
      {"xy, xz", "x", pt({0, 1, 1})},
      {"xy, xz", "y, z", pt({3, 0, 0})},
      {"x*y*z", "z", pt({1, 1, 0})},
      {"x^3 + y^3 + z^3", "x^3 + y^3 + z^3", pt({1, 0, -1})},
  };
  for (const auto& c : cases) {
    auto J = ideal(r3, c.J);
    auto Z = ideal(r3, c.Z);
    REQUIRE(vanishes_at(Z, c.p));
    REQUIRE(!vanishes_at(component_open_set_guard(J, Z), c.p));
    REQUIRE(tangent_dimension_at_point(Z, c.p) == dimension(Z));
    CHECK(value_at(J, c.p) == smooth_general_value(Z));
  }
}

TEST_CASE("constancy falsifier") {
  auto r1 = make_ring({"x"});
  auto r2 = make_ring({"x", "y"});
  auto r3 = make_ring({"x", "y", "z"});
  using O = ConstancyCertificate::Overall;
  using V = ComponentReport::Verdict;

  auto axes = constancy_falsifier(ideal(r3, "xy, xz, yz"), -1);
  CHECK(axes.overall == O::NecessaryConditionsHold);
  CHECK(axes.reports.size() == 3);
  for (const auto& r : axes.reports) {
    CHECK(r.verdict == V::Pass);
    CHECK(r.m == 1);
    CHECK(r.generically_reduced);
    CHECK(r.generic_tangent_dim == 1);
  }

  auto mixed = constancy_falsifier(ideal(r3, "xy, xz"));
  CHECK(mixed.overall == O::NotConstant);
  CHECK(mixed.sign_inferred);
  CHECK(mixed.sign == 1);
  auto line = report_for(mixed, ideal(r3, "y, z"));
  REQUIRE(line);
  CHECK(line->verdict == V::Violation);
  CHECK(line->reason.find("sign") != std::string::npos);
  CHECK(mixed.witnesses.size() == 1);

  auto fat = constancy_falsifier(ideal(r1, "x^2"));
  CHECK(fat.overall == O::NotConstant);
  REQUIRE(fat.reports.size() == 1);
  CHECK(!fat.reports[0].generically_reduced);
  CHECK(fat.reports[0].m == 1);
  CHECK(fat.reports[0].reason.find("multiplicity 2") != std::string::npos);

  // one-directional: passes although nu is not constant
  auto emb = constancy_falsifier(ideal(r2, "y^2, xy"));
  CHECK(emb.overall == O::NecessaryConditionsHold);

  for (const char* smooth : {"y - x^2, z", "z - x*y", "x, y, z"}) {
    auto c = constancy_falsifier(ideal(r3, smooth));
    CHECK(c.overall == O::NecessaryConditionsHold);
  }

  // a wrong sign is refuted
  CHECK(constancy_falsifier(ideal(r3, "xy, xz, yz"), 1).overall == O::NotConstant);
  // a generically non-reduced line with reduced support
  auto doubled = constancy_falsifier(ideal(r3, "y^2, z"));
  CHECK(doubled.overall == O::NotConstant);
  CHECK_THROWS_AS(constancy_falsifier(ideal(r3, "x"), 3), std::invalid_argument);
}

TEST_CASE("behrend values survive re-embedding") {
  auto r2 = make_ring({"x", "y"});
  auto r3 = make_ring({"x", "y", "w"});
  for (const char* J : {"y^2, xy", "y - x^2", "x*y"}) {
    auto base = ideal(r2, J);
    auto redundant = Ideal(r2, parse_generators(J, r2));
    redundant = redundant + (base.generators()[0] * Polynomial::variable(r2, 0));
    auto lifted = extend_to(base, r3) + Polynomial::variable(r3, 2);
    for (const auto& p : {pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})}) {
      if (!vanishes_at(base, p)) continue;
      Point q = p;
      q.emplace_back(0);
      long v = value_at(base, p);
      CHECK(value_at(redundant, p) == v);
      CHECK(value_at(lifted, q) == v);
    }
  }
}
