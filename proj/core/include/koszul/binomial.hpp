#pragma once

#include <cstdint>
#include <vector>

#include "koszul/errors.hpp"

namespace koszul {

// All counting in the engine is exact 64-bit integer arithmetic; anything
// that would overflow raises resource_error instead of wrapping.

// C(n,k) for n,k >= 0.  Exact, throws resource_error past 2^64-1.
std::uint64_t binomial(std::int64_t n, std::int64_t k);

// C(x,k) as the polynomial x(x-1)...(x-k+1)/k! evaluated at any integer x.
// Negative x is allowed (Euler characteristics, Serre duality counts).
std::int64_t signed_binomial(std::int64_t x, std::int64_t k);

// Dense Pascal table, built once and then read concurrently.  Entries that
// do not fit in 64 bits are marked and throw on access.
class BinomialTable {
 public:
  explicit BinomialTable(int max_n);

  std::uint64_t operator()(int n, int k) const {
    if (k < 0 || k > n) return 0;
    if (n > max_n_) throw argument_error("binomial table sized to " +
                                         std::to_string(max_n_) +
                                         ", asked for n=" + std::to_string(n));
    std::uint64_t v = at(n, k);
    if (v == kOverflow)
      throw resource_error("binomial(" + std::to_string(n) + "," +
                           std::to_string(k) + ") exceeds 64 bits");
    return v;
  }

  int max_n() const { return max_n_; }

 private:
  static constexpr std::uint64_t kOverflow = ~std::uint64_t{0};
  std::uint64_t at(int n, int k) const { return rows_[static_cast<std::size_t>(n) * (n + 1) / 2 + k]; }

  int max_n_;
  std::vector<std::uint64_t> rows_;
};

}  // namespace koszul
