#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "behrend/ideal.hpp"
#include "behrend/module.hpp"

namespace behrend {

using Box = std::array<int, 3>;

/// Downward-closed finite set of boxes in N^3, kept sorted.
struct PlanePartition {
  std::vector<Box> boxes;

  std::size_t size() const { return boxes.size(); }
  bool contains(const Box& b) const;
  /// "[(0,0,0),(1,0,0)]"
  std::string to_string() const;
  friend bool operator==(const PlanePartition&, const PlanePartition&) = default;
  friend auto operator<=>(const PlanePartition&, const PlanePartition&) = default;
};

bool is_downward_closed(const std::vector<Box>& boxes);

/// All plane partitions with n boxes, lexicographic on the sorted box lists.
/// Throws ResourceLimit when n exceeds `max_n`.
std::vector<PlanePartition> enumerate_plane_partitions(std::size_t n, std::size_t max_n = 12);

/// Ideal of k[x,y,z] spanned by the monomials outside the boxes, given by its
/// minimal generators. `ring` must have three variables; defaults to x, y, z.
Ideal monomial_ideal_of(const PlanePartition& p, RingPtr ring = nullptr);

struct TangentReport {
  Ideal ideal;
  std::size_t colength = 0;
  std::size_t tangent_dim = 0;
  bool parity_holds = false;
};

/// dim Hom_R(I, R/I): images of the basis elements in R/I subject to the
/// syzygy relations. Throws std::invalid_argument when R/I is infinite.
TangentReport tangent_dimension_hilb(const Ideal& I);

struct ScanRow {
  std::size_t id = 0;
  PlanePartition partition;
  std::size_t tangent_dim = 0;
  bool parity_holds = false;
};

struct ParityScan {
  std::size_t n = 0;
  std::vector<ScanRow> rows;
  std::vector<std::size_t> violations;
  std::size_t max_tangent = 0;
  std::size_t argmax = 0;
};

/// Tangent dimensions of every monomial ideal of colength n, one thread.
ParityScan parity_scan_serial(std::size_t n, std::size_t max_n = 12);
/// Same scan with the ideals distributed over OpenMP threads.
ParityScan parity_scan_parallel(std::size_t n, int threads = 0, std::size_t max_n = 12);
ParityScan parity_scan(std::size_t n, int threads = 0, std::size_t max_n = 12);

struct QuotTangentReport {
  std::vector<ModuleVector> generators;
  std::size_t rank = 0;
  std::size_t colength = 0;
  std::size_t tangent_dim = 0;
  /// (-1)^{rank * colength} == (-1)^{tangent_dim}
  bool parity_holds = false;
};

/// dim Hom_R(K, R^r/K) for a submodule K of R^r of finite colength.
QuotTangentReport quot_tangent_dimension(const std::vector<ModuleVector>& K, std::size_t r);

}  // namespace behrend
