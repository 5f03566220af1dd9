#include "behrend/hilb.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <exception>
#include <set>

#include <omp.h>

#include "behrend/linalg.hpp"

namespace behrend {

bool PlanePartition::contains(const Box& b) const { return std::binary_search(boxes.begin(), boxes.end(), b); }

std::string PlanePartition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    if (i) out += ',';
    out += "(" + std::to_string(boxes[i][0]) + "," + std::to_string(boxes[i][1]) + "," + std::to_string(boxes[i][2]) + ")";
  }
  return out + "]";
}

bool is_downward_closed(const std::vector<Box>& boxes) {
  std::set<Box> s(boxes.begin(), boxes.end());
  for (const auto& b : boxes) {
    for (int i = 0; i < 3; ++i) {
      if (b[i] < 0) return false;
      if (b[i] == 0) continue;
      Box c = b;
      --c[i];
      if (!s.count(c)) return false;
    }
  }
  return true;
}

std::vector<PlanePartition> enumerate_plane_partitions(std::size_t n, std::size_t max_n) {
  if (n == 0) throw std::invalid_argument("plane partitions need n >= 1");
  if (n > max_n) throw ResourceLimit("n = " + std::to_string(n) + " exceeds the configured bound " + std::to_string(max_n));
  std::set<std::vector<Box>> level{{Box{0, 0, 0}}};
  for (std::size_t size = 1; size < n; ++size) {
    std::set<std::vector<Box>> next;
    for (const auto& boxes : level) {
      std::set<Box> s(boxes.begin(), boxes.end());
      for (const auto& b : boxes) {
        for (int i = 0; i < 3; ++i) {
          Box c = b;
          ++c[i];
          if (s.count(c)) continue;
          bool addable = true;
          for (int j = 0; j < 3 && addable; ++j) {
            if (c[j] == 0) continue;
            Box d = c;
            --d[j];
            addable = s.count(d) > 0;
          }
          if (!addable) continue;
          auto grown = boxes;
          grown.insert(std::upper_bound(grown.begin(), grown.end(), c), c);
          next.insert(std::move(grown));
        }
      }
    }
    level = std::move(next);
  }
  std::vector<PlanePartition> out;
  for (const auto& b : level) out.push_back({b});
  return out;
}

Ideal monomial_ideal_of(const PlanePartition& p, RingPtr ring) {
  if (!ring) ring = make_ring({"x", "y", "z"});
  if (ring->size() != 3) throw std::invalid_argument("plane partitions live in three variables");
  std::set<Box> gens;
  if (p.boxes.empty()) return Ideal::unit(ring);
  for (const auto& b : p.boxes) {
    for (int i = 0; i < 3; ++i) {
      Box c = b;
      ++c[i];
      if (p.contains(c)) continue;
      bool minimal = true;
      for (int j = 0; j < 3 && minimal; ++j) {
        if (c[j] == 0) continue;
        Box d = c;
        --d[j];
        minimal = p.contains(d);
      }
      if (minimal) gens.insert(c);
    }
  }
  std::vector<Polynomial> polys;
  for (const auto& g : gens) polys.push_back(Polynomial::monomial(ring, Monomial{g[0], g[1], g[2]}));
  sort_polynomials(polys);
  return Ideal(ring, std::move(polys));
}

namespace {

using Coords = std::vector<std::pair<std::size_t, mpq_class>>;
using Basis = std::vector<ModuleMonomial>;

// dim Hom(K, F/K) where K has k generators with the given syzygies, F/K has
// the monomial basis `basis`, and nf(c, m) gives the coordinates of m e_c.
std::size_t hom_dimension(std::size_t k, const Basis& basis, const std::vector<ModuleVector>& syzygies,
                          const std::function<Coords(std::size_t, const Monomial&)>& nf, std::uint64_t characteristic) {
  const std::size_t nb = basis.size();
  if (nb == 0) return 0;
  std::map<std::pair<std::size_t, Monomial>, Coords> cache;
  auto coords = [&](std::size_t c, const Monomial& m) -> const Coords& {
    auto key = std::make_pair(c, m);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, nf(c, m)).first;
    return it->second;
  };
  DenseMatrix mat(0, k * nb);
  for (const auto& a : syzygies) {
    const std::size_t first = mat.rows();
    for (std::size_t i = 0; i < nb; ++i) mat.add_row();
    for (std::size_t j = 0; j < k; ++j) {
      for (const auto& t : a[j].terms()) {
        for (std::size_t b = 0; b < nb; ++b) {
          for (const auto& [row, value] : coords(basis[b].component, t.mono * basis[b].mono))
            mat(first + row, j * nb + b) += t.coeff * value;
        }
      }
    }
  }
  return k * nb - rank(mat, characteristic);
}

bool parity(std::size_t a, std::size_t b) { return a % 2 == b % 2; }

}  // namespace

TangentReport tangent_dimension_hilb(const Ideal& I) {
  const auto& gb = I.groebner();
  auto sm = standard_monomials(gb);
  if (!sm) throw std::invalid_argument("R/I is not finite-dimensional");
  TangentReport out{I, sm->size(), 0, false};
  if (gb.is_unit()) {
    out.parity_holds = true;
    return out;
  }
  Basis basis;
  std::map<Monomial, std::size_t> index;
  for (const auto& m : *sm) {
    index.emplace(m, basis.size());
    basis.push_back({0, m});
  }
  const auto& ring = I.ring();
  auto nf = [&](std::size_t, const Monomial& m) {
    Coords c;
    Polynomial red = gb.normal_form(Polynomial::monomial(ring, m));
    for (const auto& t : red.terms()) c.emplace_back(index.at(t.mono), t.coeff);
    return c;
  };
  auto syz = schreyer_syzygies(gb.elements(), gb.order());
  out.tangent_dim = hom_dimension(gb.size(), basis, syz, nf, ring->characteristic());
  out.parity_holds = parity(out.colength, out.tangent_dim);
  return out;
}

namespace {

ScanRow scan_row(std::size_t id, const PlanePartition& p, const RingPtr& ring) {
  auto report = tangent_dimension_hilb(monomial_ideal_of(p, ring));
  return {id, p, report.tangent_dim, report.parity_holds};
}

ParityScan summarise(std::size_t n, std::vector<ScanRow> rows) {
  ParityScan scan{n, std::move(rows), {}, 0, 0};
  for (const auto& r : scan.rows) {
    if (!r.parity_holds) scan.violations.push_back(r.id);
    if (r.tangent_dim > scan.max_tangent) {
      scan.max_tangent = r.tangent_dim;
      scan.argmax = r.id;
    }
  }
  return scan;
}

}  // namespace

ParityScan parity_scan_serial(std::size_t n, std::size_t max_n) {
  auto parts = enumerate_plane_partitions(n, max_n);
  auto ring = make_ring({"x", "y", "z"});
  std::vector<ScanRow> rows;
  for (std::size_t i = 0; i < parts.size(); ++i) rows.push_back(scan_row(i, parts[i], ring));
  return summarise(n, std::move(rows));
}

ParityScan parity_scan_parallel(std::size_t n, int threads, std::size_t max_n) {
  auto parts = enumerate_plane_partitions(n, max_n);
  auto ring = make_ring({"x", "y", "z"});
  std::vector<ScanRow> rows(parts.size());
  const long count = static_cast<long>(parts.size());
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic) num_threads(threads > 0 ? threads : omp_get_max_threads())
  for (long i = 0; i < count; ++i) {
    try {
      rows[static_cast<std::size_t>(i)] = scan_row(static_cast<std::size_t>(i), parts[static_cast<std::size_t>(i)], ring);
    } catch (...) {
#pragma omp critical
      error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return summarise(n, std::move(rows));
}

ParityScan parity_scan(std::size_t n, int threads, std::size_t max_n) {
  if (threads == 1) return parity_scan_serial(n, max_n);
  return parity_scan_parallel(n, threads, max_n);
}

QuotTangentReport quot_tangent_dimension(const std::vector<ModuleVector>& K, std::size_t r) {
  if (r == 0) throw std::invalid_argument("rank must be positive");
  for (const auto& v : K)
    if (v.rank() != r) throw std::invalid_argument("generator has the wrong rank");
  if (K.empty()) throw std::invalid_argument("R^r/K is not finite-dimensional");
  const auto& ring = K.front().ring();
  auto gb = module_groebner(ring, r, K);
  auto sm = gb.standard_monomials();
  if (!sm) throw std::invalid_argument("R^r/K is not finite-dimensional");
  QuotTangentReport out{K, r, sm->size(), 0, false};
  auto elems = gb.elements();
  if (!sm->empty()) {
    std::map<std::pair<std::size_t, Monomial>, std::size_t> index;
    for (std::size_t i = 0; i < sm->size(); ++i) index.emplace(std::make_pair((*sm)[i].component, (*sm)[i].mono), i);
    auto nf = [&](std::size_t c, const Monomial& m) {
      ModuleVector v(ring, r);
      v[c] = Polynomial::monomial(ring, m);
      auto red = gb.normal_form(v);
      Coords coords;
      for (std::size_t comp = 0; comp < r; ++comp)
        for (const auto& t : red[comp].terms()) coords.emplace_back(index.at({comp, t.mono}), t.coeff);
      return coords;
    };
    auto syz = schreyer_syzygies(gb);
    out.tangent_dim = hom_dimension(elems.size(), *sm, syz, nf, ring->characteristic());
  }
  out.parity_holds = parity(r * out.colength, out.tangent_dim);
  return out;
}

}  // namespace behrend
