#pragma once

#include <cstdint>
#include <vector>

#include "koszul/koszul.hpp"
#include "koszul/report.hpp"

namespace koszul {

struct IntInterval {
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  bool empty() const { return lo > hi; }
  bool contains(std::int64_t x) const { return lo <= x && x <= hi; }
  std::int64_t length() const { return empty() ? 0 : hi - lo + 1; }
};

// Closed-form row bounds.  Conventions: on a product of projective spaces
// with factor dimensions nvec, twist row b and embedding row d are the
// minimum coordinate of B and L.  Binomials C(x,k) evaluate to 0 for
// 0 <= x < k; negative x is outside every stated domain and errors.

// largest p for which row q is proven to vanish:
// floor((d^{q-1} + b d^{q-2}) / (n_1! ... n_k!)), valid for d+b >= 0 and
// 2 <= q <= dim X + 1
std::int64_t vanishing_bound(const std::vector<int>& nvec, std::int64_t b,
                             std::int64_t d, int q);

// conjectured sharp vanishing bound on P^n for b >= 0, 0 <= q <= n,
// d >= b+q+1:  C(d+q,q) - C(d-b-1,q) - q - 1
std::int64_t conjectured_vanishing_bound(int n, std::int64_t b, std::int64_t d,
                                         int q);

// proven nonvanishing window for row q on P^n, b >= 0, 1 <= q <= n:
// [C(d+q,q)-C(d-b-1,q)-q,  C(d+n,n)+C(d+n-q,n-q)-C(n+b,q+b)-q-1]
IntInterval nonvanishing_range(int n, std::int64_t b, std::int64_t d, int q);

// the q=2 window on the plane with trivial twist: [3d-2, r_d-2],
// r_d = C(d+2,2)-1
IntInterval plane_q2_range(std::int64_t d);

// position paired with (p,q) under duality on P^n embedded by O(d):
// p' = r_d - n - p, q' = n+1-q, twist b' = -b-n-1
struct DualPosition {
  std::int64_t p, q, b;
};
DualPosition dual_position(int n, std::int64_t b, std::int64_t d, std::int64_t p,
                           std::int64_t q);

// Syzygy linearity certificate from a computed table with trivial twist.
// NotN0: the degree-0 condition already fails (explicit witness cell).
// Certified: N_k holds and N_{k+1} fails, witness recorded.
// Truncated: N_k holds as far as the table reaches; no failure was found
// before the computed range ran out.
struct NkResult {
  enum class Kind { NotN0, Certified, Truncated };
  Kind kind = Kind::Truncated;
  int k = -1;
  int witness_p = -1, witness_q = -1;
};
NkResult property_Nk(const BettiTable& table);

// [smallest p, largest p] with a nonzero entry in row q; empty when the row
// vanishes or was not computed
IntInterval row_support(const BettiTable& table, int q);

// Descriptive statistics of one row: normalized masses over p, their mean
// and variance, and the sup deviation from the moment-matched discretized
// Gaussian.  Reporting only; carries no verdict.
struct RowStats {
  std::vector<double> mass;  // index p = 0..pmax
  double mean = 0.0;
  double variance = 0.0;
  double sup_deviation = 0.0;
  std::uint64_t total = 0;   // row sum before normalization
};
RowStats row_distribution_stats(const BettiTable& table, int q);

// Records the finite-cover counting identity for k_{p,q} on P^n without
// evaluating it: the right-hand side is a sheaf cohomology count no
// computation path in this artifact produces.  Always not-evaluated.
CheckResult cover_count_identity(int n, std::int64_t d, std::int64_t p,
                                 std::int64_t q);

// overall verdict of a report: refuted beats not-evaluated beats verified
Verdict aggregate(const VerificationReport& report);

// Row-q vanishing check below vanishing_bound.  One check per cell; cells
// the engine cannot finish come back not-evaluated with the reason.
VerificationReport verify_vanishing_bound(const KoszulInstance& inst, int q,
                                          unsigned threads = 1);

// Nonvanishing window check for row q >= 2 on P^n.  q = 1 is excluded by
// design (the window formula can overshoot the resolution length there) and
// reports not-evaluated.
VerificationReport verify_nonvanishing_range(const KoszulInstance& inst, int q,
                                             unsigned threads = 1);

// Full q=2 window shape on the plane with trivial twist: zero strictly below
// the window, nonzero across it.
VerificationReport verify_plane_q2_window(std::int64_t d, std::uint32_t prime,
                                          unsigned threads = 1);

// k_{p,q} equals its dual position's value, both sides computed
VerificationReport verify_duality(const KoszulInstance& inst, std::int64_t p,
                                  std::int64_t q, unsigned threads = 1);

// rows q = dim X + 2 and dim X + 3 vanish through pmax; requires the
// positivity hypothesis on the twist, otherwise not-evaluated
VerificationReport regularity_row_check(const KoszulInstance& inst, int pmax,
                                        unsigned threads = 1);

}  // namespace koszul
