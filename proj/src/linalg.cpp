#include "behrend/linalg.hpp"

#include <omp.h>

namespace behrend {

namespace {

void reduce(mpq_class& c, std::uint64_t p) {
  if (p == 0) return;
  mpz_class mod(static_cast<unsigned long>(p));
  mpz_class num = c.get_num() % mod;
  mpz_class den = c.get_den() % mod;
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
  mpz_class r = (num * inv) % mod;
  if (r < 0) r += mod;
  c = mpq_class(r);
}

// Finds a pivot in column c at or below row r and swaps it into place.
bool place_pivot(DenseMatrix& m, std::size_t r, std::size_t c) {
  for (std::size_t i = r; i < m.rows(); ++i) {
    if (m(i, c) != 0) {
      if (i != r)
        for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(i, k), m(r, k));
      return true;
    }
  }
  return false;
}

void eliminate_row(DenseMatrix& m, std::size_t pivot_row, std::size_t i, std::size_t c, std::uint64_t p) {
  if (m(i, c) == 0) return;
  mpq_class f = m(i, c) / m(pivot_row, c);
  reduce(f, p);
  for (std::size_t k = c; k < m.cols(); ++k) {
    m(i, k) -= f * m(pivot_row, k);
    reduce(m(i, k), p);
  }
}

void normalize_all(DenseMatrix& m, std::uint64_t p) {
  if (p == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) reduce(m(i, k), p);
}

}  // namespace

std::size_t DenseMatrix::add_row() {
  data_.resize(data_.size() + cols_);
  return rows_++;
}

std::size_t rank_serial(DenseMatrix m, std::uint64_t characteristic) {
  normalize_all(m, characteristic);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    if (!place_pivot(m, r, c)) continue;
    for (std::size_t i = r + 1; i < m.rows(); ++i) eliminate_row(m, r, i, c, characteristic);
    ++r;
  }
  return r;
}

std::size_t rank_parallel(DenseMatrix m, std::uint64_t characteristic, int threads) {
  if (threads <= 0) threads = omp_get_max_threads();
  normalize_all(m, characteristic);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    if (!place_pivot(m, r, c)) continue;
    const auto first = static_cast<std::ptrdiff_t>(r + 1);
    const auto last = static_cast<std::ptrdiff_t>(m.rows());
#pragma omp parallel for num_threads(threads) schedule(dynamic, 4)
    for (std::ptrdiff_t i = first; i < last; ++i)
      eliminate_row(m, r, static_cast<std::size_t>(i), c, characteristic);
    ++r;
  }
  return r;
}

std::size_t rank(const DenseMatrix& m, std::uint64_t characteristic) {
  if (m.rows() * m.cols() >= 4096) return rank_parallel(m, characteristic);
  return rank_serial(m, characteristic);
}

}  // namespace behrend
