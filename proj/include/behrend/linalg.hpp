#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace behrend {

/// Dense row-major matrix over Q (or F_p when a characteristic is given).
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpq_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpq_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Appends a zero row and returns its index.
  std::size_t add_row();

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<mpq_class> data_;
};

/// Gaussian elimination, one thread. The reference implementation.
std::size_t rank_serial(DenseMatrix m, std::uint64_t characteristic = 0);

/// Same elimination with the row updates of each pivot step split across
/// OpenMP threads (threads <= 0 means the OpenMP default).
std::size_t rank_parallel(DenseMatrix m, std::uint64_t characteristic = 0, int threads = 0);

/// Picks the parallel kernel for large matrices.
std::size_t rank(const DenseMatrix& m, std::uint64_t characteristic = 0);

inline std::size_t nullity(const DenseMatrix& m, std::uint64_t characteristic = 0) {
  return m.cols() - rank(m, characteristic);
}

}  // namespace behrend
