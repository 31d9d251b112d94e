#pragma once

#include <cstdint>
#include <vector>

#include "koszul/errors.hpp"
#include "koszul/gf.hpp"

namespace koszul {

struct Triplet {
  std::uint64_t row;
  std::uint64_t col;
  std::uint32_t val;  // already reduced mod p, nonzero
};

// Immutable sparse matrix over GF(p): triplets sorted by (col, row), no
// duplicates, no explicit zeros.  Dimensions may be zero in either direction.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::uint64_t rows, std::uint64_t cols,
               std::vector<Triplet> entries, const PrimeField& F);

  std::uint64_t rows() const { return rows_; }
  std::uint64_t cols() const { return cols_; }
  std::uint64_t nnz() const { return entries_.size(); }
  const std::vector<Triplet>& entries() const { return entries_; }

  SparseMatrix transposed(const PrimeField& F) const;

 private:
  std::uint64_t rows_ = 0, cols_ = 0;
  std::vector<Triplet> entries_;
};

// Row-major dense matrix over GF(p), for small blocks and cross-checks.
struct DenseMatrix {
  std::uint64_t rows = 0, cols = 0;
  std::vector<std::uint32_t> a;  // rows*cols entries in [0,p)

  std::uint32_t& at(std::uint64_t r, std::uint64_t c) { return a[r * cols + c]; }
  std::uint32_t at(std::uint64_t r, std::uint64_t c) const { return a[r * cols + c]; }
};

DenseMatrix to_dense(const SparseMatrix& m);

}  // namespace koszul
