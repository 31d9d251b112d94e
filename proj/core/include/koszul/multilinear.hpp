#pragma once

#include <cstdint>
#include <vector>

#include "koszul/binomial.hpp"

namespace koszul {

// Wedge basis elements are strictly increasing index tuples s_1 < ... < s_p
// ranked colexicographically: rank = sum_j C(s_j, j) with j 1-based.  The
// enumeration order of p-subsets therefore matches the rank.
using WedgeIndex = std::vector<std::uint32_t>;

std::uint64_t wedge_rank(const WedgeIndex& w, const BinomialTable& binom);
WedgeIndex wedge_unrank(std::uint64_t r, int p, std::uint32_t n,
                        const BinomialTable& binom);

// advance w to the next p-subset of {0..n-1} in rank order; false at the end
bool wedge_next(WedgeIndex& w, std::uint32_t n);

// rank of w with position j (0-based) removed
std::uint64_t wedge_rank_deleted(const WedgeIndex& w, int j,
                                 const BinomialTable& binom);

// sign of moving the j-th slot (0-based) out front: (-1)^j
inline int koszul_sign(int j) { return (j & 1) ? -1 : 1; }

// dim D^n V = C(dim V + n - 1, n), same as S^n V
std::uint64_t divided_power_dim(std::uint64_t dim_v, std::int64_t n);

// The natural map D^nV -> S^nV is diagonal in the monomial basis with the
// multinomial coefficient n!/(e_1!...e_r!) at exponent vector e.  Over a
// field of characteristic p the map may be neither injective nor surjective;
// its rank counts the multinomials not divisible by p.
struct PowerMap {
  std::uint64_t dim_v = 0;
  std::int64_t n = 0;
  std::uint32_t prime = 0;
  std::vector<std::uint32_t> diagonal;  // multinomials mod prime, basis order

  std::uint64_t dimension() const { return diagonal.size(); }
  std::uint64_t rank() const;
  std::uint64_t kernel_dim() const { return dimension() - rank(); }
  std::uint64_t cokernel_dim() const { return dimension() - rank(); }
};

PowerMap divided_to_symmetric(std::uint64_t dim_v, std::int64_t n,
                              std::uint32_t prime);

// multinomial coefficient (sum e_i)!/(prod e_i!) reduced mod p, exact for
// any size via factorials with the p-part stripped
std::uint32_t multinomial_mod(const std::vector<std::int64_t>& e, std::uint32_t p);

// dim D^n(S^d k^2) == dim S^d(D^n k^2), both C(n+d,n); returns the common value
std::uint64_t hermite_dimension_check(std::int64_t n, std::int64_t d);

// dim D^k(U + W) = sum_j dim D^jU * dim D^{k-j}W for all k <= kmax
bool filtration_dimension_check(std::uint64_t dim_u, std::uint64_t dim_w,
                                std::int64_t kmax);

}  // namespace koszul
