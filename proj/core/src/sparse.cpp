#include "koszul/sparse.hpp"

#include <algorithm>

namespace koszul {

SparseMatrix::SparseMatrix(std::uint64_t rows, std::uint64_t cols,
                           std::vector<Triplet> entries, const PrimeField& F)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  const std::uint32_t p = F.characteristic();
  std::size_t keep = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    Triplet t = entries_[i];
    if (t.row >= rows_ || t.col >= cols_)
      throw argument_error("sparse entry outside matrix dimensions");
    if (t.val >= p) throw argument_error("sparse entry not reduced mod p");
    if (t.val == 0) continue;
    entries_[keep++] = t;
  }
  entries_.resize(keep);
  std::sort(entries_.begin(), entries_.end(), [](const Triplet& a, const Triplet& b) {
    return a.col != b.col ? a.col < b.col : a.row < b.row;
  });
  for (std::size_t i = 1; i < entries_.size(); ++i)
    if (entries_[i].col == entries_[i - 1].col && entries_[i].row == entries_[i - 1].row)
      throw argument_error("duplicate sparse entry");
}

SparseMatrix SparseMatrix::transposed(const PrimeField& F) const {
  std::vector<Triplet> t;
  t.reserve(entries_.size());
  for (const Triplet& e : entries_) t.push_back({e.col, e.row, e.val});
  return SparseMatrix(cols_, rows_, std::move(t), F);
}

DenseMatrix to_dense(const SparseMatrix& m) {
  DenseMatrix d;
  d.rows = m.rows();
  d.cols = m.cols();
  d.a.assign(static_cast<std::size_t>(d.rows * d.cols), 0);
  for (const Triplet& e : m.entries()) d.at(e.row, e.col) = e.val;
  return d;
}

}  // namespace koszul
