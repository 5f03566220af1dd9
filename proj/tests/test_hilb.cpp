#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"

#include "behrend/hilb.hpp"
#include "behrend/linalg.hpp"
#include "behrend/parse.hpp"

using namespace behrend;

namespace {

Ideal ideal(const RingPtr& r, const char* text) { return Ideal(r, parse_generators(text, r)); }

// Plane partitions as height arrays h[i][j], nonincreasing along rows and columns.
void heights(std::size_t n, std::vector<std::vector<int>>& h, std::size_t cell, int left, std::set<std::vector<Box>>& out) {
  const std::size_t side = h.size();
  if (left == 0) {
    std::vector<Box> boxes;
    for (std::size_t i = 0; i < side; ++i)
      for (std::size_t j = 0; j < side; ++j)
        for (int k = 0; k < h[i][j]; ++k) boxes.push_back({static_cast<int>(i), static_cast<int>(j), k});
    std::sort(boxes.begin(), boxes.end());
    out.insert(boxes);
    return;
  }
  if (cell == side * side) return;
  const std::size_t i = cell / side, j = cell % side;
  int cap = left;
  if (i > 0) cap = std::min(cap, h[i - 1][j]);
  if (j > 0) cap = std::min(cap, h[i][j - 1]);
  for (int v = cap; v >= 0; --v) {
    h[i][j] = v;
    heights(n, h, cell + 1, left - v, out);
  }
  h[i][j] = 0;
}

std::set<std::vector<Box>> oracle_partitions(std::size_t n) {
  std::vector<std::vector<int>> h(n, std::vector<int>(n, 0));
  std::set<std::vector<Box>> out;
  heights(n, h, 0, static_cast<int>(n), out);
  return out;
}

// Maps I_{<=D} -> R/I commuting with x, y, z for a monomial ideal I.
std::size_t truncated_hom_oracle(const Ideal& I) {
  const auto& gens = I.generators();
  int maxdeg = 0, maxlcm = 0;
  for (const auto& g : gens) maxdeg = std::max(maxdeg, g.leading_monomial().degree());
  for (const auto& a : gens)
    for (const auto& b : gens) maxlcm = std::max(maxlcm, lcm(a.leading_monomial(), b.leading_monomial()).degree());
  const int D = std::max(maxdeg + 1, maxlcm);
  auto in_ideal = [&](const Monomial& m) {
    return std::any_of(gens.begin(), gens.end(), [&](const Polynomial& g) { return g.leading_monomial().divides(m); });
  };
  std::vector<Monomial> inside, outside;
  std::map<Monomial, std::size_t> in_index, out_index;
  for (int a = 0; a <= D; ++a)
    for (int b = 0; a + b <= D; ++b)
      for (int c = 0; a + b + c <= D; ++c) {
        Monomial m{a, b, c};
        if (in_ideal(m)) {
          in_index[m] = inside.size();
          inside.push_back(m);
        } else {
          out_index[m] = outside.size();
          outside.push_back(m);
        }
      }
  const std::size_t nb = outside.size(), cols = inside.size() * nb;
  DenseMatrix mat(0, cols);
  for (const auto& m : inside) {
    if (m.degree() >= D) continue;
    for (std::size_t v = 0; v < 3; ++v) {
      Monomial vm = m * Monomial::variable(3, v);
      // psi(v m) - v psi(m) = 0, coordinatewise in R/I
      for (std::size_t b = 0; b < nb; ++b) {
        std::size_t r = mat.add_row();
        mat(r, in_index.at(vm) * nb + b) += 1;
        // coefficient of outside[b] in v * psi(m) comes from psi(m)'s coordinate at outside[b] / v
        const Monomial& target = outside[b];
        if (target[v] == 0) continue;
        Monomial src = target / Monomial::variable(3, v);
        mat(r, in_index.at(m) * nb + out_index.at(src)) -= 1;
      }
    }
  }
  return cols - rank_serial(mat);
}

PlanePartition permuted(const PlanePartition& p, const std::array<int, 3>& perm) {
  PlanePartition q;
  for (const auto& b : p.boxes) q.boxes.push_back({b[perm[0]], b[perm[1]], b[perm[2]]});
  std::sort(q.boxes.begin(), q.boxes.end());
  return q;
}

}  // namespace

TEST_CASE("plane partition enumeration") {
  const std::size_t counts[] = {0, 1, 3, 6, 13, 24, 48};
  for (std::size_t n = 1; n <= 6; ++n) {
    auto parts = enumerate_plane_partitions(n);
    CHECK(parts.size() == counts[n]);
    CHECK(std::is_sorted(parts.begin(), parts.end()));
    std::set<std::vector<Box>> got;
    for (const auto& p : parts) {
      CHECK(p.size() == n);
      CHECK(is_downward_closed(p.boxes));
      got.insert(p.boxes);
    }
    CHECK(got.size() == parts.size());
    CHECK(got == oracle_partitions(n));
  }
  CHECK(enumerate_plane_partitions(1)[0].to_string() == "[(0,0,0)]");
  CHECK_THROWS_AS(enumerate_plane_partitions(9, 8), ResourceLimit);
  CHECK_THROWS_AS(enumerate_plane_partitions(0), std::invalid_argument);
}

TEST_CASE("monomial ideals of plane partitions") {
  auto r = make_ring({"x", "y", "z"});
  CHECK(monomial_ideal_of({{{0, 0, 0}}}, r) == ideal(r, "x, y, z"));
  PlanePartition four{{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}}};
  CHECK(monomial_ideal_of(four, r) == ideal(r, "x^2, y^2, z^2, xy, xz, yz"));
  CHECK(monomial_ideal_of(four, r).size() == 6);
  PlanePartition column{{{0, 0, 0}, {1, 0, 0}, {2, 0, 0}}};
  CHECK(monomial_ideal_of(column, r) == ideal(r, "x^3, y, z"));
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& p : enumerate_plane_partitions(n)) CHECK(colength(monomial_ideal_of(p, r)) == n);
}

TEST_CASE("hilbert scheme tangent dimensions") {
  auto r = make_ring({"x", "y", "z"});
  auto point = tangent_dimension_hilb(ideal(r, "x, y, z"));
  CHECK(point.colength == 1);
  CHECK(point.tangent_dim == 3);
  CHECK(point.parity_holds);

  auto m2 = tangent_dimension_hilb(ideal(r, "x^2, y^2, z^2, xy, xz, yz"));
  CHECK(m2.colength == 4);
  CHECK(m2.tangent_dim == 18);
  CHECK(m2.parity_holds);

  // n reduced points: a smooth point of Hilb^n, tangent dimension 3n
  auto three = tangent_dimension_hilb(ideal(r, "x^2 - x, y^2 - y, xy, z"));
  CHECK(three.colength == 3);
  CHECK(three.tangent_dim == 9);

  // curvilinear schemes are smooth points too
  auto curvilinear = tangent_dimension_hilb(ideal(r, "y - x^2, z - x^3, x^4"));
  CHECK(curvilinear.colength == 4);
  CHECK(curvilinear.tangent_dim == 12);

  // homogeneous non-monomial ideal
  auto hom = tangent_dimension_hilb(ideal(r, "x^2 - y^2, xy, z"));
  CHECK(hom.colength == 4);
  CHECK(hom.parity_holds);

  CHECK_THROWS_AS(tangent_dimension_hilb(ideal(r, "x, y")), std::invalid_argument);

  // the plane: Hilb^n(A^2) is smooth of dimension 2n
  auto r2 = make_ring({"x", "y"});
  for (const char* I : {"x^2, xy, y^2", "x^3, y", "x^2, y^2"}) {
    auto rep = tangent_dimension_hilb(ideal(r2, I));
    CHECK(rep.tangent_dim == 2 * rep.colength);
  }
}

TEST_CASE("tangent dimensions match the truncated oracle") {
  auto r = make_ring({"x", "y", "z"});
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& p : enumerate_plane_partitions(n)) {
      auto I = monomial_ideal_of(p, r);
      CHECK(tangent_dimension_hilb(I).tangent_dim == truncated_hom_oracle(I));
    }
  auto m2 = ideal(r, "x^2, y^2, z^2, xy, xz, yz");
  CHECK(truncated_hom_oracle(m2) == 18);
}

TEST_CASE("torus symmetry of tangent dimensions") {
  auto r = make_ring({"x", "y", "z"});
  const std::array<std::array<int, 3>, 6> perms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  for (const auto& p : enumerate_plane_partitions(5)) {
    auto base = tangent_dimension_hilb(monomial_ideal_of(p, r)).tangent_dim;
    for (const auto& perm : perms)
      CHECK(tangent_dimension_hilb(monomial_ideal_of(permuted(p, perm), r)).tangent_dim == base);
  }
}

TEST_CASE("parity scans") {
  auto one = parity_scan_serial(1);
  CHECK(one.rows.size() == 1);
  CHECK(one.max_tangent == 3);

  auto four = parity_scan_serial(4);
  CHECK(four.rows.size() == 13);
  CHECK(four.violations.empty());
  CHECK(four.max_tangent == 18);
  auto r = make_ring({"x", "y", "z"});
  CHECK(monomial_ideal_of(four.rows[four.argmax].partition, r) == ideal(r, "x^2, y^2, z^2, xy, xz, yz"));

  for (std::size_t n = 1; n <= 6; ++n) {
    auto serial = parity_scan_serial(n);
    auto parallel = parity_scan_parallel(n, 4);
    CHECK(serial.violations.empty());
    REQUIRE(serial.rows.size() == parallel.rows.size());
    for (std::size_t i = 0; i < serial.rows.size(); ++i) {
      CHECK(serial.rows[i].partition == parallel.rows[i].partition);
      CHECK(serial.rows[i].tangent_dim == parallel.rows[i].tangent_dim);
    }
  }
  CHECK(parity_scan(6, 2).rows.size() == 48);
}

TEST_CASE("quot scheme tangent dimensions") {
  auto r = make_ring({"x", "y", "z"});
  auto vec = [&](const char* a, const char* b) {
    return ModuleVector({parse_polynomial(a, r), parse_polynomial(b, r)});
  };

  // rank one agrees with the Hilbert scheme computation
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& p : enumerate_plane_partitions(n)) {
      auto I = monomial_ideal_of(p, r);
      std::vector<ModuleVector> K;
      for (const auto& g : I.generators()) K.push_back(ModuleVector({g}));
      auto q = quot_tangent_dimension(K, 1);
      CHECK(q.colength == n);
      CHECK(q.tangent_dim == tangent_dimension_hilb(I).tangent_dim);
    }

  // m e1 + m e2: Hom(m + m, k + k) = 4 * 3
  std::vector<ModuleVector> diag{vec("x", "0"), vec("y", "0"), vec("z", "0"), vec("0", "x"), vec("0", "y"), vec("0", "z")};
  auto d = quot_tangent_dimension(diag, 2);
  CHECK(d.colength == 2);
  CHECK(d.tangent_dim == 12);
  CHECK(d.parity_holds);

  // R e2 + m e1: Hom(m, k) + Hom(R, k)
  std::vector<ModuleVector> mixed{vec("0", "1"), vec("x", "0"), vec("y", "0"), vec("z", "0")};
  auto m = quot_tangent_dimension(mixed, 2);
  CHECK(m.colength == 1);
  CHECK(m.tangent_dim == 4);
  CHECK(m.parity_holds);

  // I e1 + I e2 has four copies of Hom(I, R/I)
  auto I = ideal(r, "x^2, y, z");
  std::vector<ModuleVector> twice;
  for (const auto& g : I.generators()) {
    twice.push_back(ModuleVector({g, Polynomial(r)}));
    twice.push_back(ModuleVector({Polynomial(r), g}));
  }
  CHECK(quot_tangent_dimension(twice, 2).tangent_dim == 4 * tangent_dimension_hilb(I).tangent_dim);

  std::vector<ModuleVector> infinite{vec("x", "0"), vec("y", "0"), vec("z", "0")};
  CHECK_THROWS_AS(quot_tangent_dimension(infinite, 2), std::invalid_argument);
}
