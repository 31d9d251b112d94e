// Acceptance gate.  Each numbered criterion prints exactly one PASS/FAIL
// line with its measured wall time; the process exits nonzero when any
// line fails.  All comparisons are exact; the only tolerances are the
// per-criterion time budgets pinned below.
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "koszul/binomial.hpp"
#include "koszul/bounds.hpp"
#include "koszul/koszul.hpp"
#include "koszul/multilinear.hpp"
#include "koszul/taut.hpp"

using namespace koszul;

namespace {

using Clock = std::chrono::steady_clock;

double secs_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// worker count for the strand pool; criterion 3 calls for at least four
constexpr unsigned kWorkers = 4;

// Per-graded-piece cap for the verification grid (criterion 4).  A cell
// touching a piece above the cap reports not-evaluated immediately instead
// of consuming the shared budget.  Measured single-core rank costs pin the
// value (315k columns ~30 s, 525k ~95 s, 675k ~190 s, 815k ~300 s): the
// deep q=3 interiors of P^2 d in {4,5} and P^1xP^1 (3,3) cannot fit the
// 15-minute budget, while 4.5e5 keeps every remaining row whole, including
// all of P^2 d=4 B=(-1) q=3.
constexpr std::uint64_t kGridCellCap = 450'000;

int failures = 0;

void report(int id, bool pass, const std::string& what, double secs,
            double budget = 0.0) {
  std::ostringstream line;
  line << (pass ? "PASS" : "FAIL") << " criterion " << id << ": " << what
       << " [" << std::fixed << std::setprecision(1) << secs << " s";
  if (budget > 0.0) line << ", budget " << budget << " s";
  line << "]";
  std::cout << line.str() << std::endl;
  if (!pass) ++failures;
}

bool eq(const BettiTable& t, int p, int q, std::uint64_t want) {
  auto v = t.value(p, q);
  return v && *v == want;
}

// 1. rational normal curves: q=1 row is p*C(d,p+1), nothing else survives
std::vector<BettiTable> criterion1() {
  auto t0 = Clock::now();
  bool ok = true;
  std::vector<BettiTable> tables;
  for (int d = 2; d <= 7; ++d) {
    KoszulInstance inst(MultiProjSpace({1}), {0}, {d});
    BettiTable t = betti_table(inst, d, 0, 3, kWorkers);
    ok = ok && t.failures.empty();
    for (int p = 0; p <= d; ++p) {
      std::uint64_t row1 = (p >= 1 && p + 1 <= d)
                               ? static_cast<std::uint64_t>(p) * binomial(d, p + 1)
                               : 0;
      ok = ok && eq(t, p, 1, row1);
      ok = ok && eq(t, p, 0, p == 0 ? 1 : 0);
      ok = ok && eq(t, p, 2, 0) && eq(t, p, 3, 0);
    }
    tables.push_back(std::move(t));
  }
  double el = secs_since(t0);
  report(1, ok && el < 5.0,
         "rational normal curves d=2..7 match the closed-form tables", el, 5.0);
  return tables;
}

// 2. plane cubic Veronese: linear strand runs to p=6, k_{7,2}=1
BettiTable criterion2() {
  auto t0 = Clock::now();
  KoszulInstance inst(MultiProjSpace({2}), {0}, {3});
  BettiTable t = betti_table(inst, 7, 0, 3, kWorkers);
  bool ok = t.failures.empty();
  for (int p = 0; p <= 6; ++p) ok = ok && eq(t, p, 2, 0);
  ok = ok && eq(t, 7, 2, 1);
  NkResult nk = property_Nk(t);
  ok = ok && nk.kind == NkResult::Kind::Certified && nk.k == 6;
  double el = secs_since(t0);
  report(2, ok && el < 10.0,
         "cubic Veronese of the plane: k_{p,2}=0 for p<=6, k_{7,2}=1, "
         "linearity certified exactly through k=6",
         el, 10.0);
  return t;
}

// 3. quartic Veronese of the plane: q=2 row dies through p=9, lives on [10,12]
BettiTable criterion3() {
  auto t0 = Clock::now();
  KoszulInstance inst(MultiProjSpace({2}), {0}, {4});
  BettiTable t = betti_table(inst, 12, 0, 2, kWorkers);
  bool ok = t.failures.empty();
  for (int p = 0; p <= 9; ++p) ok = ok && eq(t, p, 2, 0);
  for (int p = 10; p <= 12; ++p) {
    auto v = t.value(p, 2);
    ok = ok && v && *v != 0;
  }
  double el = secs_since(t0);
  report(3, ok && el < 600.0,
         "quartic Veronese of the plane: q=2 row vanishes through p=9 and is "
         "nonzero on 10<=p<=12",
         el, 600.0);
  return t;
}

// 4. row vanishing bound confirmed across the instance grid
void criterion4() {
  auto t0 = Clock::now();
  struct GridCase {
    std::vector<int> f;
    MultiDegree B, L;
    int q;
  };
  std::vector<GridCase> grid;
  for (std::int64_t d = 3; d <= 5; ++d)
    for (std::int64_t b : {-1, 0, 1})
      for (int q : {2, 3}) grid.push_back({{2}, {b}, {d}, q});
  for (const MultiDegree& L :
       {MultiDegree{2, 2}, MultiDegree{2, 3}, MultiDegree{3, 3}})
    for (int q : {2, 3}) grid.push_back({{1, 1}, {0, 0}, L, q});
  grid.push_back({{3}, {0}, {2}, 2});
  for (std::int64_t d = 2; d <= 6; ++d)
    for (std::int64_t b = -d; b <= 2; ++b) grid.push_back({{1}, {b}, {d}, 2});

  ResourceLimits capped;
  capped.max_basis_elements = kGridCellCap;

  auto label = [](const GridCase& g) {
    std::ostringstream s;
    for (std::size_t i = 0; i < g.f.size(); ++i)
      s << (i ? "xP" : "P") << g.f[i];
    s << " B=" << degree_to_string(g.B) << " L=" << degree_to_string(g.L)
      << " q=" << g.q;
    return s.str();
  };

  std::size_t confirmed = 0;
  std::vector<std::string> bad;
  for (const GridCase& g : grid) {
    KoszulInstance inst(MultiProjSpace(g.f), g.B, g.L, kDefaultPrime, capped);
    VerificationReport rep = verify_vanishing_bound(inst, g.q, kWorkers);
    Verdict v = aggregate(rep);
    if (v == Verdict::Verified) {
      ++confirmed;
    } else if (v == Verdict::Refuted) {
      bad.push_back("REFUTED " + label(g));
    } else {
      bad.push_back(label(g) + ": " +
                    std::to_string(rep.count(Verdict::NotEvaluated)) +
                    " cells over the working-set cap");
    }
  }
  double el = secs_since(t0);
  std::ostringstream what;
  what << "row vanishing bound grid: " << confirmed << "/" << grid.size()
       << " instances confirmed";
  for (const std::string& b : bad) what << "; " << b;
  report(4, bad.empty() && el < 900.0, what.str(), el, 900.0);
}

// 5. alternating Betti sums reproduce the Hilbert series
void criterion5(const std::vector<BettiTable>& curves, const BettiTable& cubic,
                const BettiTable& quartic) {
  auto t0 = Clock::now();
  std::vector<const BettiTable*> all;
  for (const BettiTable& t : curves) all.push_back(&t);
  all.push_back(&cubic);
  all.push_back(&quartic);
  bool ok = true;
  int checked = 0;
  for (const BettiTable* t : all) {
    KoszulInstance inst(MultiProjSpace(t->spaces), t->B, t->L, t->prime);
    std::int64_t through = t->pmax + inst.space().dim() + 1;
    if (hilbert_betti_mismatch(*t, inst, through) != std::nullopt) ok = false;
    ++checked;
  }
  report(5, ok,
         "Hilbert series identity holds for all " + std::to_string(checked) +
             " tables from criteria 1-3",
         secs_since(t0));
}

// 6. generator row support, and empty q=2 rows on curves
void criterion6(const std::vector<BettiTable>& curves) {
  auto t0 = Clock::now();
  KoszulInstance inst(MultiProjSpace({2}), {1}, {3});
  BettiTable t = betti_table(inst, 5, 0, 1, kWorkers);
  bool ok = t.failures.empty();
  for (int p = 0; p <= 5; ++p) {
    auto v = t.value(p, 0);
    ok = ok && v && ((*v != 0) == (p <= 2));
  }
  for (const BettiTable& c : curves) ok = ok && row_support(c, 2).empty();
  report(6, ok,
         "twisted plane cubic generators live exactly on p<=2; curve q=2 rows "
         "are empty",
         secs_since(t0));
}

// 7. splitting classification and normalizing section counts
void criterion7() {
  auto t0 = Clock::now();
  bool ok = true;
  for (int n = 2; n <= 5; ++n) {
    for (std::int64_t k = -3; k <= n + 2; ++k) {
      SplitVerdict v = splitting_test(n, k);
      bool expect = -1 <= k && k <= n - 1;
      ok = ok && v.splits == expect;
      if (v.splits)
        ok = ok && v.trivial_mult == k + 1 && v.twisted_mult == n - 1 - k;
      if (k >= -1)
        ok = ok && taut_cohomology(n, k, 0, 0) == static_cast<std::uint64_t>(k + 1);
      if (k >= -2)
        ok = ok && taut_cohomology(n, k, 1, 0) ==
                       static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(k + 2);
    }
  }
  double el = secs_since(t0);
  report(7, ok && el < 1.0,
         "pushforward bundle splits exactly for -1<=k<=n-1 with the stated "
         "multiplicities and section counts",
         el, 1.0);
}

// 8. finite-cover line bundle identity over the full stated window
void criterion8() {
  auto t0 = Clock::now();
  auto degree_box = [](std::size_t len, std::int64_t lo, std::int64_t hi) {
    std::vector<MultiDegree> out;
    MultiDegree cur(len, lo);
    while (true) {
      out.push_back(cur);
      std::size_t i = 0;
      while (i < len && cur[i] == hi) {
        cur[i] = lo;
        ++i;
      }
      if (i == len) break;
      ++cur[i];
    }
    return out;
  };

  bool ok = true;
  std::size_t checks = 0;
  const std::vector<std::vector<int>> ys = {{}, {1}, {1, 1}};
  for (const std::vector<int>& y : ys) {
    int ydim = 0;
    for (int f : y) ydim += f;
    for (const MultiDegree& aY : degree_box(y.size(), -4, 4)) {
      for (int n = 2; n <= 3; ++n) {
        for (std::int64_t a = -7; a <= 7; ++a) {
          for (int q = 0; q <= ydim + n; ++q) {
            VerificationReport rep =
                verify_finite_cover_linebundle(y, aY, n, a, q);
            ok = ok && aggregate(rep) == Verdict::Verified;
            ++checks;
          }
        }
      }
    }
  }
  double el = secs_since(t0);
  report(8, ok && el < 5.0,
         "finite-cover identity n*h^q(lhs)=h^q(rhs) holds at all " +
             std::to_string(checks) + " window points",
         el, 5.0);
}

// 9. characteristic-2 degeneracy of the divided-to-symmetric comparison
void criterion9() {
  auto t0 = Clock::now();
  PowerMap m = divided_to_symmetric(2, 2, 2);
  bool ok = m.rank() == 2 && m.kernel_dim() == 1 && m.cokernel_dim() == 1;
  report(9, ok,
         "divided-to-symmetric map in rank 2, degree 2 has rank 2 with "
         "kernel 1 and cokernel 1 over GF(2)",
         secs_since(t0));
}

// 10. strand sums equal whole-matrix values; worker count and reruns inert
void criterion10() {
  auto t0 = Clock::now();
  struct Inst {
    std::vector<int> f;
    MultiDegree B, L;
  };
  const std::vector<Inst> insts = {
      {{1}, {0}, {2}},      {{1}, {0}, {3}},     {{1}, {0}, {4}},
      {{1}, {0}, {5}},      {{1}, {1}, {3}},     {{1}, {-1}, {3}},
      {{2}, {0}, {2}},      {{2}, {0}, {3}},     {{2}, {-1}, {3}},
      {{2}, {1}, {3}},      {{1, 1}, {0, 0}, {2, 2}},
      {{1, 1}, {0, 0}, {1, 2}}, {{3}, {0}, {2}},
  };
  bool ok = true;
  std::size_t cells = 0;
  for (const Inst& it : insts) {
    KoszulInstance inst(MultiProjSpace(it.f), it.B, it.L);
    std::int64_t pv = static_cast<std::int64_t>(inst.dim_v());
    for (std::int64_t q = 0; q <= 3; ++q) {
      for (std::int64_t p = 0; p <= pv; ++p) {
        if (inst.term_dim(p, q) == 0 || inst.term_dim(p, q) > 5000) continue;
        // the whole-matrix route also materializes the flanks
        if (inst.term_dim(p + 1, q - 1) > 40000 ||
            inst.term_dim(p - 1, q + 1) > 40000)
          continue;
        std::uint64_t stranded = inst.koszul_dimension(p, q, 1);
        std::uint64_t whole = inst.koszul_dimension_direct(p, q);
        std::uint64_t wide = inst.koszul_dimension(p, q, 8);
        std::uint64_t again = inst.koszul_dimension(p, q, 1);
        ok = ok && stranded == whole && stranded == wide && stranded == again;
        ++cells;
      }
    }
  }
  report(10, ok,
         "strand sums equal whole-matrix values on " + std::to_string(cells) +
             " cells, identical across 1 vs 8 workers and repeat runs",
         secs_since(t0));
}

}  // namespace

int main() {
  std::cout << "acceptance gate: exact Koszul engine" << std::endl;
  std::vector<BettiTable> curves = criterion1();
  BettiTable cubic = criterion2();
  BettiTable quartic = criterion3();
  criterion4();
  criterion5(curves, cubic, quartic);
  criterion6(curves);
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  std::cout << (10 - failures) << "/10 criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
