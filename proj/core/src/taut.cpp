#include "koszul/taut.hpp"

#include <string>

#include "koszul/binomial.hpp"
#include "koszul/errors.hpp"

namespace koszul {

namespace {

// h^j(P^dim, O(a)) for a single factor
std::uint64_t hp(int dim, std::int64_t a, int j) {
  if (j == 0 && a >= 0) return binomial(a + dim, dim);
  if (j == dim && a <= -dim - 1) return binomial(-a - 1, dim);
  return 0;
}

std::uint64_t checked_mul_add(std::uint64_t acc, std::uint64_t x, std::uint64_t y) {
  unsigned __int128 wide = static_cast<unsigned __int128>(x) * y + acc;
  if (wide > ~std::uint64_t{0})
    throw resource_error("cohomology dimension exceeds 64 bits");
  return static_cast<std::uint64_t>(wide);
}

}  // namespace

std::uint64_t taut_cohomology(int n, std::int64_t k, std::int64_t m, int i) {
  if (n < 2)
    throw argument_error("taut_cohomology: needs n >= 2 (n = 1 is the line bundle itself)");
  if (i < 0 || i > n) return 0;
  std::uint64_t out = 0;
  if (i >= 1) out = checked_mul_add(out, hp(n - 1, m, i - 1), hp(1, m + k, 1));
  out = checked_mul_add(out, hp(n - 1, m, i), hp(1, m + k, 0));
  return out;
}

std::int64_t taut_rank_probe(int n, std::int64_t k) {
  // h^0(E(m)) is polynomial in m once both factors are effective; the n-th
  // difference there is n! times the leading coefficient
  std::int64_t m0 = k < 0 ? -k : 0;
  __int128 acc = 0;
  for (int j = 0; j <= n; ++j) {
    __int128 term = static_cast<__int128>(binomial(n, j)) *
                    static_cast<__int128>(taut_cohomology(n, k, m0 + j, 0));
    acc += ((n - j) % 2 == 0) ? term : -term;
  }
  if (acc < 0 || acc > (std::int64_t{1} << 62))
    throw internal_error("rank probe out of range");
  return static_cast<std::int64_t>(acc);
}

SplitVerdict splitting_test(int n, std::int64_t k) {
  if (n < 2) throw argument_error("splitting_test: needs n >= 2");
  SplitVerdict v;

  // Support windows for h^i(E(m)), 1 <= i <= n-1.  The first product term
  // needs h^{i-1}(P^{n-1}, O(m)) != 0, which forces i = 1, m >= 0, together
  // with h^1(P^1, O(m+k)) != 0, i.e. m <= -k-2.  The second needs
  // h^i(P^{n-1}, O(m)) != 0, forcing i = n-1, m <= -n, together with
  // m + k >= 0.  Everything else vanishes identically.
  struct Window {
    int i;
    std::int64_t lo, hi;
  };
  Window windows[2] = {{1, 0, -k - 2}, {n - 1, -k, -n}};
  for (const Window& w : windows) {
    for (std::int64_t m = w.lo; m <= w.hi; ++m) {
      std::uint64_t h = taut_cohomology(n, k, m, w.i);
      if (h != 0) {
        v.splits = false;
        v.witness_i = w.i;
        v.witness_m = m;
        return v;
      }
    }
  }

  v.splits = true;
  std::int64_t a = static_cast<std::int64_t>(taut_cohomology(n, k, 0, 0));
  std::int64_t c = static_cast<std::int64_t>(taut_cohomology(n, k, 1, 0)) -
                   static_cast<std::int64_t>(n + 1) * a;
  if (a < 0 || c < 0 || a + c != n)
    throw internal_error("split multiplicities inconsistent with the rank");
  v.trivial_mult = a;
  v.twisted_mult = c;
  return v;
}

VerificationReport verify_finite_cover_linebundle(
    const std::vector<int>& y_factors, const MultiDegree& aY, int n,
    std::int64_t a, int q) {
  if (n < 2) throw argument_error("verify_finite_cover_linebundle: needs n >= 2");
  if (q < 0) throw argument_error("verify_finite_cover_linebundle: needs q >= 0");
  if (y_factors.size() != aY.size())
    throw argument_error("verify_finite_cover_linebundle: Y degree length mismatch");

  std::vector<int> lhs_f = y_factors;
  lhs_f.push_back(n);
  MultiDegree lhs_d = aY;
  lhs_d.push_back(a);

  std::vector<int> rhs_f = y_factors;
  rhs_f.push_back(n - 1);
  rhs_f.push_back(1);
  MultiDegree rhs_d = aY;
  rhs_d.push_back(a);
  rhs_d.push_back(a + n - 1);

  auto hq = [](const std::vector<int>& f, const MultiDegree& d, int qq) {
    MultiProjSpace X(f);
    auto h = line_bundle_cohomology(X, d);
    return qq < static_cast<int>(h.size()) ? h[static_cast<std::size_t>(qq)] : 0;
  };
  std::uint64_t lhs = hq(lhs_f, lhs_d, q);
  std::uint64_t rhs = hq(rhs_f, rhs_d, q);
  std::uint64_t n_lhs = checked_mul_add(0, static_cast<std::uint64_t>(n), lhs);

  VerificationReport rep;
  CheckResult c;
  c.name = "finite cover pushforward q=" + std::to_string(q) + " a=" +
           std::to_string(a) + " n=" + std::to_string(n);
  c.verdict = (n_lhs == rhs) ? Verdict::Verified : Verdict::Refuted;
  c.detail = std::to_string(n) + " * " + std::to_string(lhs) + " vs " +
             std::to_string(rhs);
  rep.checks.push_back(std::move(c));
  return rep;
}

SesRankCheck ses_rank_check(int n, std::int64_t d, std::uint64_t h0y) {
  if (n < 1 || d < 1 || h0y < 1)
    throw argument_error("ses_rank_check: needs n >= 1, d >= 1, h0y >= 1");
  SesRankCheck out;
  std::uint64_t left = checked_mul_add(0, h0y, binomial(d + n - 1, n));
  std::uint64_t mid = checked_mul_add(0, h0y, binomial(d + n - 1, n - 1));
  std::uint64_t right = checked_mul_add(0, h0y, binomial(d + n, n));
  out.main = left + (mid - 1) == right - 1;

  std::int64_t v = d + 1, kk = n - 1;
  out.divided_power = binomial(v - 1 + kk, kk + 1) + binomial(v + kk - 1, kk) ==
                      binomial(v + kk, kk + 1);
  return out;
}

}  // namespace koszul
