#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "koszul/errors.hpp"

namespace koszul {

// A product of projective spaces P^{n_1} x ... x P^{n_k}; the coordinate
// ring has n_i+1 variables per factor, so exponent vectors have total
// length sum(n_i + 1).
struct MultiProjSpace {
  std::vector<int> factors;

  explicit MultiProjSpace(std::vector<int> ns) : factors(std::move(ns)) {
    if (factors.empty()) throw argument_error("space needs at least one factor");
    for (int n : factors)
      if (n < 1) throw argument_error("factor dimensions must be >= 1");
  }

  int dim() const {
    int n = 0;
    for (int f : factors) n += f;
    return n;
  }
  int num_factors() const { return static_cast<int>(factors.size()); }
  // length of a concatenated exponent vector
  int coord_len() const { return dim() + num_factors(); }
};

// A multidegree: one integer per factor.
using MultiDegree = std::vector<std::int64_t>;

// Exponent vector, blocks concatenated factor by factor.
using Exponents = std::vector<std::int32_t>;

void check_degree(const MultiProjSpace& X, const MultiDegree& a, const char* what);

MultiDegree add(const MultiDegree& a, const MultiDegree& b);
MultiDegree scale(std::int64_t c, const MultiDegree& a);

// dim H^0 = prod C(a_i + n_i, n_i), zero as soon as one a_i < 0.
std::uint64_t section_dimension(const MultiProjSpace& X, const MultiDegree& a);

// h^i for all i, by the one-factor support rule (only h^0 or h^{n} can be
// nonzero on a single factor) convolved across factors.  Index i runs from
// 0 to dim X; absent means zero.
std::vector<std::uint64_t> line_bundle_cohomology(const MultiProjSpace& X,
                                                  const MultiDegree& a);

// Euler characteristic as a signed product of binomial polynomials;  used to
// cross-check the table above.
std::int64_t euler_characteristic(const MultiProjSpace& X, const MultiDegree& a);

// dim H^0(B + m*L); requires every coordinate of L >= 1.
std::uint64_t hilbert_function(const MultiProjSpace& X, const MultiDegree& B,
                               const MultiDegree& L, std::int64_t m);

// All monomials of multidegree a, in basis order: the concatenated exponent
// vector, first factor most significant, larger exponent vectors first.
// (P^1, (2)) enumerates (2,0), (1,1), (0,2).
std::vector<Exponents> enumerate_monomials(const MultiProjSpace& X,
                                           const MultiDegree& a);

// basis order comparator: true when a precedes b
inline bool monomial_precedes(const Exponents& a, const Exponents& b) {
  return a > b;  // lexicographically larger exponent vector comes first
}

// An enumerated monomial basis with O(1) index lookup.  Immutable after
// construction; safe for concurrent reads.
class MonomialBasis {
 public:
  MonomialBasis() = default;
  MonomialBasis(const MultiProjSpace& X, const MultiDegree& a);

  std::size_t size() const { return monos_.size(); }
  const Exponents& operator[](std::size_t i) const { return monos_[i]; }

  // index of an exponent vector, or npos when absent
  static constexpr std::uint32_t npos = ~std::uint32_t{0};
  std::uint32_t index_of(const Exponents& e) const;

 private:
  std::vector<Exponents> monos_;
  struct ExpHash {
    std::size_t operator()(const Exponents& e) const {
      std::size_t h = 1469598103934665603ull;
      for (auto v : e) {
        h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(v));
        h *= 1099511628211ull;
      }
      return h;
    }
  };
  std::unordered_map<Exponents, std::uint32_t, ExpHash> index_;
};

std::string degree_to_string(const MultiDegree& a);

}  // namespace koszul
