#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "koszul/binomial.hpp"
#include "koszul/multilinear.hpp"
#include "koszul/multiproj.hpp"
#include "koszul/rank.hpp"
#include "koszul/sparse.hpp"

namespace koszul {

struct ResourceLimits {
  // refuse any graded piece with more basis elements than this
  std::uint64_t max_basis_elements = 20'000'000;
  RankOptions rank;
};

// One graded strand of the three-term complex
//   wedge^{p+1} V (x) R_{q-1}  ->  wedge^p V (x) R_q  ->  wedge^{p-1} V (x) R_{q+1}
// restricted to a single fine degree (torus character).  Basis elements are
// flat ids wedge_rank * dim R + monomial index into the full graded piece.
struct Strand {
  Exponents fine_degree;
  std::vector<std::uint64_t> left_basis;    // in wedge^{p+1} V (x) R_{q-1}
  std::vector<std::uint64_t> middle_basis;  // in wedge^p V (x) R_q
  std::vector<std::uint64_t> right_basis;   // in wedge^{p-1} V (x) R_{q+1}
  SparseMatrix in_block;   // left -> middle
  SparseMatrix out_block;  // middle -> right
};

struct DifferentialRank {
  std::uint64_t rank = 0;
  std::uint32_t strand_count = 0;
  double wall_ms = 0.0;
};

// A fixed (X, B, L, prime) with cached monomial bases.  Logically immutable;
// the internal caches are populated under a lock before any parallel phase
// reads them, so concurrent betti sweeps over one instance are safe.
class KoszulInstance {
 public:
  KoszulInstance(MultiProjSpace X, MultiDegree B, MultiDegree L,
                 std::uint32_t prime = kDefaultPrime, ResourceLimits limits = {});

  const MultiProjSpace& space() const { return X_; }
  const MultiDegree& twist() const { return B_; }
  const MultiDegree& bundle() const { return L_; }
  const PrimeField& field() const { return F_; }
  const ResourceLimits& limits() const { return limits_; }
  const BinomialTable& binom() const { return binom_; }

  std::uint64_t dim_v() const { return dim_v_; }
  // dim of R_m = H^0(B + m L)
  std::uint64_t dim_r(std::int64_t m) const;
  // dim of wedge^p V (x) R_q; zero outside the wedge range
  std::uint64_t term_dim(std::int64_t p, std::int64_t q) const;

  const MonomialBasis& v_basis() const;
  const MonomialBasis& r_basis(std::int64_t m) const;

  // multiplication table: row v * dim_r(q) + f  ->  index of x_v * f in R_{q+1}
  const std::vector<std::uint32_t>& mul_table(std::int64_t q) const;

  // the full matrix of delta_{p,q}: wedge^p V (x) R_q -> wedge^{p-1} V (x) R_{q+1}
  SparseMatrix assemble_differential(std::int64_t p, std::int64_t q) const;

  // graded strands of the three-term complex at (p,q), sorted by fine degree
  std::vector<Strand> strand_decompose(std::int64_t p, std::int64_t q) const;

  // delta_{p,q} restricted to the given domain columns, rows compacted to the
  // given codomain list (both lists hold ascending global ids)
  SparseMatrix restricted_block(std::int64_t p, std::int64_t q,
                                const std::vector<std::uint64_t>& domain,
                                const std::vector<std::uint64_t>& codomain) const;

  // rank of delta_{p,q}, summed over its strands, strands ranked in parallel
  DifferentialRank differential_rank(std::int64_t p, std::int64_t q,
                                     unsigned threads = 1) const;

  // k_{p,q} = dim middle - rank delta_{p,q} - rank delta_{p+1,q-1}
  std::uint64_t koszul_dimension(std::int64_t p, std::int64_t q,
                                 unsigned threads = 1) const;

  // same value through the unstranded whole-matrix route (cross-check path)
  std::uint64_t koszul_dimension_direct(std::int64_t p, std::int64_t q) const;

  // resource_error unless all three graded pieces at (p,q) fit the cap
  void throw_if_over_cap(std::int64_t p, std::int64_t q) const;

  // true when H^i(B + mL) = 0 for every i > 0, m >= 1; under this hypothesis
  // rows q >= dim X + 2 of the Betti table vanish and are asserted to
  bool regularity_hypothesis() const;

 private:
  // cap check for the domain and codomain of delta_{p,q} only
  void throw_if_over_cap_pair(std::int64_t p, std::int64_t q) const;

  MultiProjSpace X_;
  MultiDegree B_, L_;
  PrimeField F_;
  ResourceLimits limits_;
  BinomialTable binom_;
  std::uint64_t dim_v_;

  mutable std::mutex cache_mu_;
  mutable std::unique_ptr<MonomialBasis> v_basis_;
  mutable std::map<std::int64_t, std::unique_ptr<MonomialBasis>> r_bases_;
  mutable std::map<std::int64_t, std::unique_ptr<std::vector<std::uint32_t>>> mul_tables_;
};

struct BettiEntry {
  std::uint64_t dim = 0;
  double wall_ms = 0.0;        // time spent on ranks not already cached
  std::uint32_t strand_count = 0;
};

struct BettiFailure {
  int p, q;
  std::string reason;
};

struct BettiTable {
  std::vector<int> spaces;
  MultiDegree B, L;
  std::uint32_t prime = 0;
  int pmax = 0, qmin = 0, qmax = 0;
  bool regularity_asserted = false;
  std::map<std::pair<int, int>, BettiEntry> entries;
  std::vector<BettiFailure> failures;

  std::optional<std::uint64_t> value(int p, int q) const {
    auto it = entries.find({p, q});
    if (it == entries.end()) return std::nullopt;
    return it->second.dim;
  }
};

BettiTable betti_table(const KoszulInstance& inst, int pmax, int qmin, int qmax,
                       unsigned threads = 1);

// First degree where sum_{p,q} (-1)^p k_{p,q} t^{p+q} disagrees with
// (1-t)^{dim V} * sum_m dim R_m t^m, or nullopt when they agree through
// `through_degree`.  Meaningful when the table covers every nonzero entry
// with p <= pmax.
std::optional<std::int64_t> hilbert_betti_mismatch(const BettiTable& table,
                                                   const KoszulInstance& inst,
                                                   std::int64_t through_degree);

}  // namespace koszul
