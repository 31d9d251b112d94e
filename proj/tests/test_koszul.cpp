#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "doctest.h"
#include "koszul/koszul.hpp"
#include "oracle.hpp"

using namespace koszul;

namespace {

KoszulInstance make(std::vector<int> ns, MultiDegree b, MultiDegree l,
                    std::uint32_t prime = kDefaultPrime) {
  return KoszulInstance(MultiProjSpace(std::move(ns)), std::move(b),
                        std::move(l), prime);
}

// engine vs reference across a cell rectangle; reference ranks are memoized
// so each dense elimination runs once
void cross_check(const std::vector<int>& ns, const std::vector<long long>& b,
                 const std::vector<long long>& l, int pmax, int qmax) {
  MultiDegree B(b.begin(), b.end()), L(l.begin(), l.end());
  KoszulInstance inst = make(ns, B, L);
  struct ColsRank {
    std::uint64_t cols, rank;
  };
  std::map<std::pair<int, int>, ColsRank> memo;
  auto oracle_map = [&](int p, int q) {
    auto it = memo.find({p, q});
    if (it != memo.end()) return it->second;
    oracle::DenseMat m = oracle::koszul_matrix(ns, b, l, p, q, 32003);
    ColsRank cr{m.cols, oracle::rank_mod(std::move(m), 32003)};
    memo[{p, q}] = cr;
    return cr;
  };
  for (int q = 0; q <= qmax; ++q)
    for (int p = 0; p <= pmax; ++p) {
      INFO("p=", p, " q=", q);
      ColsRank out = oracle_map(p, q);
      ColsRank in = oracle_map(p + 1, q - 1);
      CHECK(inst.koszul_dimension(p, q) == out.cols - out.rank - in.rank);
    }
}

// second * first == 0, column by column through the sparse structure
bool composes_to_zero(const SparseMatrix& second, const SparseMatrix& first,
                      const PrimeField& F) {
  REQUIRE(second.cols() == first.rows());
  std::vector<std::size_t> start(second.cols() + 1, 0);
  for (const Triplet& t : second.entries()) ++start[t.col + 1];
  for (std::size_t c = 0; c < second.cols(); ++c) start[c + 1] += start[c];

  const std::vector<Triplet>& se = second.entries();
  const std::vector<Triplet>& fe = first.entries();
  std::vector<std::uint64_t> acc(second.rows(), 0);
  std::vector<std::uint64_t> touched;
  std::size_t i = 0;
  while (i < fe.size()) {
    std::size_t jend = i;
    while (jend < fe.size() && fe[jend].col == fe[i].col) ++jend;
    for (std::size_t k = i; k < jend; ++k) {
      for (std::size_t s = start[fe[k].row]; s < start[fe[k].row + 1]; ++s) {
        touched.push_back(se[s].row);
        acc[se[s].row] = (acc[se[s].row] +
                          static_cast<std::uint64_t>(fe[k].val) * se[s].val) %
                         F.characteristic();
      }
    }
    for (std::uint64_t r : touched) {
      if (acc[r] != 0) return false;
      acc[r] = 0;
    }
    touched.clear();
    i = jend;
  }
  return true;
}

}  // namespace

TEST_CASE("instance validation") {
  CHECK_THROWS_AS(make({2}, {0}, {0}), argument_error);
  CHECK_THROWS_AS(make({2}, {0, 0}, {3}), argument_error);
  CHECK_THROWS_AS(make({2}, {0}, {3}, 32001), argument_error);
}

TEST_CASE("graded piece dimensions") {
  KoszulInstance inst = make({2}, {0}, {3});
  CHECK(inst.dim_v() == 10);
  CHECK(inst.dim_r(2) == 28);
  CHECK(inst.dim_r(-1) == 0);
  CHECK(inst.term_dim(3, 1) == 1200);
  CHECK(inst.term_dim(11, 1) == 0);
  CHECK(inst.term_dim(-1, 1) == 0);
  CHECK(inst.v_basis()[0] == Exponents{3, 0, 0});
}

TEST_CASE("multiplication table lands on the right monomial") {
  KoszulInstance inst = make({2}, {0}, {3});
  const MonomialBasis& V = inst.v_basis();
  const MonomialBasis& R1 = inst.r_basis(1);
  const MonomialBasis& R2 = inst.r_basis(2);
  const auto& mul = inst.mul_table(1);
  for (std::size_t v = 0; v < V.size(); v += 3)
    for (std::size_t f = 0; f < R1.size(); f += 4) {
      Exponents prod = V[static_cast<std::uint32_t>(v)];
      for (std::size_t i = 0; i < prod.size(); ++i)
        prod[i] += R1[static_cast<std::uint32_t>(f)][i];
      CHECK(mul[v * R1.size() + f] == R2.index_of(prod));
    }
}

TEST_CASE("differential composes to zero") {
  for (auto& [ns, b, l] :
       std::vector<std::tuple<std::vector<int>, MultiDegree, MultiDegree>>{
           {{1}, {0}, {3}},
           {{2}, {0}, {2}},
           {{2}, {-1}, {3}},
           {{1, 1}, {0, 0}, {2, 2}},
       }) {
    KoszulInstance inst(MultiProjSpace(ns), b, l);
    for (int q = 0; q <= 2; ++q)
      for (int p = 1; p + 1 <= static_cast<int>(inst.dim_v()); p += 2) {
        SparseMatrix d2 = inst.assemble_differential(p + 1, q);
        SparseMatrix d1 = inst.assemble_differential(p, q + 1);
        if (d2.cols() == 0 || d1.rows() == 0) continue;
        CHECK(composes_to_zero(d1, d2, inst.field()));
      }
  }
}

TEST_CASE("engine equals the dense reference: rational normal curves") {
  cross_check({1}, {0}, {2}, 2, 3);
  cross_check({1}, {0}, {3}, 3, 3);
  cross_check({1}, {0}, {4}, 4, 3);
  cross_check({1}, {-1}, {3}, 3, 3);
  cross_check({1}, {1}, {3}, 3, 3);
}

TEST_CASE("engine equals the dense reference: surfaces and threefold") {
  cross_check({2}, {0}, {2}, 4, 3);
  cross_check({1, 1}, {0, 0}, {2, 2}, 2, 2);
  cross_check({1, 1}, {0, 0}, {2, 2}, 1, 3);
  cross_check({1, 1}, {0, 0}, {1, 2}, 3, 3);
  cross_check({2}, {0}, {3}, 2, 2);
  cross_check({2}, {-1}, {3}, 2, 2);
  cross_check({2}, {-1}, {3}, 3, 1);
  cross_check({2}, {1}, {3}, 3, 0);
  cross_check({2}, {1}, {3}, 2, 1);
  cross_check({3}, {0}, {2}, 2, 1);
  cross_check({3}, {0}, {2}, 1, 2);
}

TEST_CASE("strand decomposition partitions the middle term") {
  KoszulInstance inst = make({2}, {0}, {2});
  for (int q = 0; q <= 2; ++q)
    for (int p = 0; p <= 4; ++p) {
      auto strands = inst.strand_decompose(p, q);
      std::uint64_t middle = 0;
      for (const Strand& s : strands) {
        middle += s.middle_basis.size();
        CHECK(s.in_block.rows() == s.middle_basis.size());
        CHECK(s.in_block.cols() == s.left_basis.size());
        CHECK(s.out_block.rows() == s.right_basis.size());
        CHECK(s.out_block.cols() == s.middle_basis.size());
        if (s.in_block.cols() && s.out_block.rows())
          CHECK(composes_to_zero(s.out_block, s.in_block, inst.field()));
      }
      CHECK(middle == inst.term_dim(p, q));
    }
}

TEST_CASE("strand-summed ranks equal whole-matrix ranks") {
  for (auto& [ns, b, l] :
       std::vector<std::tuple<std::vector<int>, MultiDegree, MultiDegree>>{
           {{1}, {0}, {4}},
           {{2}, {0}, {2}},
           {{2}, {1}, {3}},
           {{1, 1}, {0, 0}, {2, 2}},
       }) {
    KoszulInstance inst(MultiProjSpace(ns), b, l);
    for (int q = 0; q <= 2; ++q)
      for (int p = 1; p <= 4; ++p) {
        if (inst.term_dim(p, q) > 5000 || inst.term_dim(p - 1, q + 1) > 5000)
          continue;
        std::uint64_t whole = rank(inst.assemble_differential(p, q), inst.field());
        CHECK(inst.differential_rank(p, q).rank == whole);
      }
  }
}

TEST_CASE("stranded and direct cohomology dimensions coincide") {
  KoszulInstance inst = make({1, 1}, {0, 0}, {2, 2});
  for (int q = 0; q <= 3; ++q)
    for (int p = 0; p <= 4; ++p) {
      if (inst.term_dim(p, q) > 5000) continue;
      CHECK(inst.koszul_dimension(p, q) == inst.koszul_dimension_direct(p, q));
    }
}

TEST_CASE("worker count never changes results") {
  KoszulInstance inst = make({2}, {0}, {3});
  for (int p : {2, 5, 7}) {
    DifferentialRank a = inst.differential_rank(p, 2, 1);
    DifferentialRank b = inst.differential_rank(p, 2, 4);
    DifferentialRank c = inst.differential_rank(p, 2, 8);
    CHECK(a.rank == b.rank);
    CHECK(a.rank == c.rank);
    CHECK(a.strand_count == b.strand_count);
  }
}

TEST_CASE("betti table freezes the classical small cases") {
  // conic, twisted cubic, quartic curve
  {
    KoszulInstance inst = make({1}, {0}, {4});
    BettiTable t = betti_table(inst, 4, 0, 3);
    CHECK(t.value(0, 0) == 1);
    CHECK(t.value(1, 1) == 6);
    CHECK(t.value(2, 1) == 8);
    CHECK(t.value(3, 1) == 3);
    CHECK(t.value(4, 1) == 0);
    for (int p = 0; p <= 4; ++p) {
      CHECK(t.value(p, 2) == 0);
      CHECK(t.value(p, 3) == 0);
    }
  }
  // quadratic embedding of the plane: length-3 linear resolution
  {
    KoszulInstance inst = make({2}, {0}, {2});
    BettiTable t = betti_table(inst, 4, 0, 3);
    CHECK(t.value(1, 1) == 6);
    CHECK(t.value(2, 1) == 8);
    CHECK(t.value(3, 1) == 3);
    CHECK(t.value(4, 1) == 0);
    for (int p = 0; p <= 4; ++p) CHECK(t.value(p, 2) == 0);
    CHECK(t.regularity_asserted);
  }
}

TEST_CASE("duality in a hand-checkable case") {
  // twisted cubic: k_{2,1} with trivial twist pairs with k_{0,1} at twist -2
  KoszulInstance a = make({1}, {0}, {3});
  KoszulInstance b = make({1}, {-2}, {3});
  CHECK(a.koszul_dimension(2, 1) == 2);
  CHECK(b.koszul_dimension(0, 1) == 2);
}

TEST_CASE("vanishing rows need the positivity hypothesis") {
  CHECK(make({2}, {0}, {3}).regularity_hypothesis());
  CHECK(make({2}, {-2}, {3}).regularity_hypothesis());
  KoszulInstance bad = make({2}, {-12}, {3});
  CHECK_FALSE(bad.regularity_hypothesis());
  // with the hypothesis broken the row q = dim X + 2 really is nonzero
  CHECK(bad.koszul_dimension(0, 4) == 1);
}

TEST_CASE("betti table records failures past the cap instead of guessing") {
  ResourceLimits tiny;
  tiny.max_basis_elements = 50;
  KoszulInstance inst(MultiProjSpace({2}), {0}, {3}, kDefaultPrime, tiny);
  BettiTable t = betti_table(inst, 4, 0, 2);
  CHECK_FALSE(t.failures.empty());
  CHECK(t.value(0, 0) == 1);  // small cells still land
  bool has_reason = true;
  for (const BettiFailure& f : t.failures) has_reason &= !f.reason.empty();
  CHECK(has_reason);
}

TEST_CASE("alternating sum of the table matches the Hilbert series") {
  {
    KoszulInstance inst = make({1}, {0}, {3});
    BettiTable t = betti_table(inst, 2, 0, 2);
    CHECK(hilbert_betti_mismatch(t, inst, 5) == std::nullopt);
  }
  {
    KoszulInstance inst = make({2}, {0}, {2});
    BettiTable t = betti_table(inst, 3, 0, 3);
    CHECK(hilbert_betti_mismatch(t, inst, 8) == std::nullopt);
    // a tampered entry is caught at its degree
    t.entries[{2, 1}].dim += 1;
    CHECK(hilbert_betti_mismatch(t, inst, 8) == 3);
  }
  {
    // twisted module: the resolution can run long, so cover p through dim V - 1
    KoszulInstance inst = make({1, 1}, {1, -1}, {2, 2});
    BettiTable t = betti_table(inst, 8, 0, 3);
    CHECK(hilbert_betti_mismatch(t, inst, 10) == std::nullopt);
  }
}

TEST_CASE("cells outside the complex vanish without work") {
  KoszulInstance inst = make({2}, {0}, {3});
  CHECK(inst.koszul_dimension(0, -1) == 0);
  CHECK(inst.koszul_dimension(12, 1) == 0);
  CHECK(inst.koszul_dimension(3, -2) == 0);
}
