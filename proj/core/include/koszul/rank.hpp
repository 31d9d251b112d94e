#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "koszul/sparse.hpp"

namespace koszul {

struct RankOptions {
  // dense_rank refuses matrices with more entries than this
  std::uint64_t max_dense_entries = 4'000'000;
  // the sparse eliminator hands the trailing block to the dense kernel when
  // it fits this many entries and the block is small or has filled in
  std::uint64_t dense_switch_entries = 600'000;
  std::uint64_t dense_switch_cols = 192;
};

// Exact rank by structured Gaussian elimination: Markowitz minimum-fill
// pivoting, ties broken by lowest (row, col), with a deterministic dense
// finish on the trailing block.  Same result for any thread count or
// platform; no randomization anywhere.
std::uint64_t rank(const SparseMatrix& m, const PrimeField& F,
                   const RankOptions& opt = {});

// Classical elimination on a dense copy; the independent small-scale check
// for the sparse path.
std::uint64_t dense_rank(DenseMatrix m, const PrimeField& F);
std::uint64_t dense_rank(const SparseMatrix& m, const PrimeField& F,
                         const RankOptions& opt = {});

// The same matrix family over several primes.  Ranks can genuinely differ
// (small primes divide invariant factors); agreement across primes is
// reported, never promoted to a characteristic-zero claim.
struct MultiPrimeRank {
  std::vector<std::uint32_t> primes;
  std::vector<std::uint64_t> ranks;
  bool agree = false;
  std::uint64_t max_rank = 0;
};

MultiPrimeRank rank_multiprime(
    const std::function<SparseMatrix(const PrimeField&)>& build,
    const std::vector<std::uint32_t>& primes, const RankOptions& opt = {});

}  // namespace koszul
