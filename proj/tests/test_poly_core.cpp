#include <algorithm>
#include <random>

#include "doctest.h"

#include "behrend/groebner.hpp"
#include "behrend/module.hpp"
#include "behrend/parse.hpp"

using namespace behrend;

namespace {

Polynomial P(const RingPtr& r, const char* s) { return parse_polynomial(s, r); }

std::vector<Polynomial> gens(const RingPtr& r, const char* s) { return parse_generators(s, r); }

}  // namespace

TEST_CASE("parsing and printing") {
  auto r = make_ring({"x", "y", "z"});
  CHECK(P(r, "x*y - x*y").is_zero());
  auto y2 = P(make_ring({"x", "y"}), "y^2");
  REQUIRE(y2.size() == 1);
  CHECK(y2.leading_monomial() == Monomial{0, 2});
  auto g = gens(r, "xy, xz, yz");
  REQUIRE(g.size() == 3);
  CHECK(g[0] == P(r, "x*y"));
  CHECK(g[2] == P(r, "y*z"));
  CHECK(P(r, "3/6 x - 2y^2 + 1").to_string() == "-2*y^2 + 1/2*x + 1");
  CHECK(P(r, "(x+y)^2").to_string() == "x^2 + 2*x*y + y^2");
  CHECK(P(r, "-x").to_string() == "-x");
  CHECK(P(r, "0").to_string() == "0");
  for (const char* s : {"x^3*y - 7/3*z + 2", "(x - y)*(x + z)^2 - 1", "x*y*z"}) {
    auto p = P(r, s);
    CHECK(P(r, p.to_string().c_str()) == p);
  }
}

TEST_CASE("parse errors carry positions") {
  auto r = make_ring({"x", "y"});
  try {
    P(r, "x + w");
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(P(r, "x +"), ParseError);
  CHECK_THROWS_AS(P(r, "(x"), ParseError);
  CHECK_THROWS_AS(P(r, "x / y"), ParseError);
  CHECK_THROWS_AS(make_ring({"x", "x"}), std::invalid_argument);
  CHECK_THROWS_AS(make_ring({"x"}, 6), std::invalid_argument);
}

TEST_CASE("ideal files") {
  auto t = parse_ideal_text("# three axes\nring x, y, z;\nxy, xz\nyz\n");
  CHECK(t.ring->size() == 3);
  CHECK(t.generators.size() == 3);
  CHECK_THROWS_AS(parse_ideal_text("x, y"), ParseError);
  auto p = parse_point("0, 1/2, -3");
  REQUIRE(p.size() == 3);
  CHECK(p[1] == mpq_class(1, 2));
}

TEST_CASE("characteristic p normalization") {
  auto r = make_ring({"x", "y"}, 7);
  CHECK(P(r, "8x + 1/2").to_string() == "x + 4");
  CHECK(P(r, "7x").is_zero());
}

TEST_CASE("normal form") {
  auto r = make_ring({"x", "y"});
  auto drl = r->default_order();
  std::vector<Polynomial> G{P(r, "x")};
  CHECK(normal_form(P(r, "x^2"), G, drl).is_zero());
  std::vector<Polynomial> H{P(r, "x*y - 1")};
  auto f = P(r, "x^2*y + y");
  auto nf = normal_form(f, H, drl);
  CHECK(nf == P(r, "x + y"));
  // the quotient certifies f - nf is in the ideal
  auto d = divide(f, H, drl);
  CHECK(d.quotients[0] * H[0] + d.remainder == f);
  CHECK(normal_form(H[0], H, drl).is_zero());
  auto other = make_ring({"a"});
  CHECK_THROWS_AS(normal_form(P(other, "a"), H, drl), RingMismatch);
}

TEST_CASE("buchberger small examples") {
  auto r = make_ring({"x", "y"});
  auto drl = r->default_order();
  auto gb = buchberger(gens(r, "x, y"), drl);
  CHECK(gb.elements() == gens(r, "y, x"));
  auto gb2 = buchberger(gens(r, "y^2, x*y"), drl);
  CHECK(gb2.size() == 2);
  CHECK(normal_form(s_polynomial(gb2.elements()[0], gb2.elements()[1]), gb2.elements(), drl).is_zero());
  auto lex = MonomialOrder::lex(2);
  auto gb3 = buchberger(gens(r, "x^2 - y, x^3 - x"), lex);
  CHECK(gb3.contains(P(r, "y^2 - y")));
  CHECK(is_groebner_basis(gb3.elements(), lex));
  CHECK(buchberger(gens(r, "x*y - 1, x"), drl).is_unit());
}

TEST_CASE("monomial orders are multiplicative well-orders on samples") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> e(0, 4);
  auto random_mono = [&] { return Monomial{e(rng), e(rng), e(rng)}; };
  for (auto order : {MonomialOrder::lex(3), MonomialOrder::degrevlex(3), MonomialOrder::elimination(3, {1}),
                     MonomialOrder::degrevlex(3, {2, 0, 1})}) {
    for (int trial = 0; trial < 300; ++trial) {
      auto a = random_mono(), b = random_mono(), c = random_mono();
      int ab = order->compare(a, b);
      CHECK(ab == -order->compare(b, a));
      CHECK((ab == 0) == (a == b));
      CHECK(order->compare(a * c, b * c) == ab);
      if (ab > 0 && order->compare(b, c) > 0) CHECK(order->compare(a, c) > 0);
      if (!c.is_one()) CHECK(order->compare(a * c, a) > 0);
    }
  }
}

TEST_CASE("reduced basis is independent of the generating set") {
  auto r = make_ring({"x", "y", "z"});
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coef(-3, 3);
  const char* corpus[] = {"xy, xz, yz", "y^2, x*y", "x^2 - y, x^3 - x", "x*z - y^2, x^3 - y*z, y^3 - z^2",
                          "x^2 + y^2 + z^2 - 1, x - y"};
  for (auto order : {r->default_order(), MonomialOrder::lex(3)}) {
    for (const char* text : corpus) {
      auto g = gens(r, text);
      auto ref = buchberger(g, order);
      for (int trial = 0; trial < 20; ++trial) {
        auto h = g;
        std::shuffle(h.begin(), h.end(), rng);
        // add a redundant combination of the generators
        Polynomial extra(r);
        for (const auto& gi : g) extra += Polynomial::constant(r, coef(rng)) * gi * P(r, "x + z");
        h.push_back(extra);
        CHECK(buchberger(h, order) == ref);
      }
    }
  }
}

TEST_CASE("membership of random combinations and idempotence") {
  auto r = make_ring({"x", "y", "z"});
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> coef(-4, 4), ex(0, 2);
  auto random_poly = [&] {
    Polynomial p(r);
    for (int k = 0; k < 4; ++k)
      p += Polynomial::monomial(r, Monomial{ex(rng), ex(rng), ex(rng)}, coef(rng));
    return p;
  };
  auto g = gens(r, "x*z - y^2, x^3 - y*z");
  auto gb = buchberger(g, r->default_order());
  for (int trial = 0; trial < 30; ++trial) {
    Polynomial f = random_poly() * g[0] + random_poly() * g[1];
    CHECK(gb.contains(f));
    auto q = random_poly();
    auto nf = gb.normal_form(q);
    CHECK(gb.normal_form(nf) == nf);
    CHECK(gb.contains(q - nf));
  }
}

TEST_CASE("leading ideals agree over Q and a large prime field") {
  const char* corpus[] = {"xy, xz, yz", "x*z - y^2, x^3 - y*z, y^3 - z^2", "x^2 + 2y^2 - 3z, x*y - z^2"};
  for (const char* text : corpus) {
    auto q = make_ring({"x", "y", "z"});
    auto p = make_ring({"x", "y", "z"}, 1000003);
    auto a = buchberger(gens(q, text), q->default_order());
    auto b = buchberger(gens(p, text), p->default_order());
    CHECK(a.leading_monomials() == b.leading_monomials());
  }
}

TEST_CASE("syzygies") {
  auto r = make_ring({"x", "y", "z"});
  auto xy = gens(r, "x, y");
  auto s = syzygy_basis(xy);
  REQUIRE(s.size() == 1);
  CHECK(s[0].contract(xy).is_zero());
  CHECK((s[0] == ModuleVector({P(r, "y"), P(r, "-x")}) || s[0] == ModuleVector({P(r, "-y"), P(r, "x")})));

  auto axes = gens(r, "xy, xz, yz");
  auto sa = syzygy_basis(axes);
  for (const auto& v : sa) CHECK(v.contract(axes).is_zero());
  // the module generated by sa contains the expected relations
  auto mgb = module_groebner(r, 3, sa);
  CHECK(mgb.contains(ModuleVector({P(r, "z"), P(r, "-y"), P(r, "0")})));
  CHECK(mgb.contains(ModuleVector({P(r, "0"), P(r, "y"), P(r, "-x")})));
  CHECK(mgb.contains(ModuleVector({P(r, "z"), P(r, "0"), P(r, "-x")})));
  // and is generated by those two
  auto two = module_groebner(r, 3, std::vector<ModuleVector>{ModuleVector({P(r, "z"), P(r, "-y"), P(r, "0")}),
                                                             ModuleVector({P(r, "0"), P(r, "y"), P(r, "-x")})});
  for (const auto& v : sa) CHECK(two.contains(v));

  CHECK(syzygy_basis(gens(r, "x^2 + y")).empty());
}

TEST_CASE("schreyer syzygies agree with the elimination route") {
  auto r = make_ring({"x", "y", "z"});
  for (const char* text : {"xy, xz, yz", "x^2, y^2, z^2, xy, xz, yz", "x*z - y^2, x^3 - y*z"}) {
    auto gb = buchberger(gens(r, text), r->default_order());
    auto sch = schreyer_syzygies(gb.elements(), gb.order());
    auto eli = syzygy_basis(gb.elements());
    for (const auto& v : sch) CHECK(v.contract(gb.elements()).is_zero());
    auto a = module_groebner(r, gb.size(), sch);
    auto b = module_groebner(r, gb.size(), eli);
    for (const auto& v : eli) CHECK(a.contains(v));
    for (const auto& v : sch) CHECK(b.contains(v));
  }
}

TEST_CASE("module bases and standard monomials") {
  auto r = make_ring({"x", "y", "z"});
  auto m2 = buchberger(gens(r, "x^2, y^2, z^2, xy, xz, yz"), r->default_order());
  auto sm = standard_monomials(m2);
  REQUIRE(sm);
  CHECK(sm->size() == 4);
  CHECK(!standard_monomials(buchberger(gens(r, "x, y"), r->default_order())));

  // K = R e2 + (x,y,z) e1 has colength 1
  std::vector<ModuleVector> K{ModuleVector({P(r, "0"), P(r, "1")}), ModuleVector({P(r, "x"), P(r, "0")}),
                              ModuleVector({P(r, "y"), P(r, "0")}), ModuleVector({P(r, "z"), P(r, "0")})};
  for (auto sched : {ModuleSchedule::PositionOverTerm, ModuleSchedule::TermOverPosition}) {
    auto mgb = module_groebner(r, 2, K, nullptr, sched);
    auto msm = mgb.standard_monomials();
    REQUIRE(msm);
    REQUIRE(msm->size() == 1);
    CHECK((*msm)[0].component == 0);
    CHECK(mgb.contains(ModuleVector({P(r, "x*y - 3z"), P(r, "x^4 + 2")})));
    CHECK(!mgb.contains(ModuleVector({P(r, "1 + x"), P(r, "0")})));
    for (const auto& v : schreyer_syzygies(mgb)) CHECK(v.contract(mgb.elements()).is_zero());
  }
}
