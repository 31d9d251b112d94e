#include <random>

#include "doctest.h"
#include "koszul/rank.hpp"
#include "oracle.hpp"

using namespace koszul;

namespace {

SparseMatrix random_sparse(std::uint64_t rows, std::uint64_t cols, double density,
                           const PrimeField& F, std::mt19937_64& rng) {
  std::vector<Triplet> t;
  for (std::uint64_t r = 0; r < rows; ++r)
    for (std::uint64_t c = 0; c < cols; ++c)
      if ((rng() % 1000) < density * 1000) {
        std::uint32_t v = static_cast<std::uint32_t>(
            1 + rng() % (F.characteristic() - 1));
        t.push_back({r, c, v});
      }
  return SparseMatrix(rows, cols, std::move(t), F);
}

std::uint64_t oracle_rank(const SparseMatrix& m, std::uint32_t p) {
  oracle::DenseMat d;
  d.rows = m.rows();
  d.cols = m.cols();
  d.a.assign(d.rows * d.cols, 0);
  for (const Triplet& t : m.entries()) d.at(t.row, t.col) = t.val;
  return oracle::rank_mod(std::move(d), p);
}

}  // namespace

TEST_CASE("triplet validation") {
  PrimeField F(101);
  CHECK_THROWS_AS(SparseMatrix(2, 2, {{2, 0, 1}}, F), argument_error);
  CHECK_THROWS_AS(SparseMatrix(2, 2, {{0, 2, 1}}, F), argument_error);
  CHECK_THROWS_AS(SparseMatrix(2, 2, {{0, 0, 101}}, F), argument_error);
  CHECK_THROWS_AS(SparseMatrix(2, 2, {{0, 0, 1}, {0, 0, 2}}, F), argument_error);
  SparseMatrix ok(2, 2, {{1, 1, 5}, {0, 0, 0}}, F);
  CHECK(ok.nnz() == 1);  // explicit zero dropped
}

TEST_CASE("transpose and densify") {
  PrimeField F(101);
  SparseMatrix m(2, 3, {{0, 1, 7}, {1, 2, 9}}, F);
  SparseMatrix t = m.transposed(F);
  CHECK(t.rows() == 3);
  CHECK(t.cols() == 2);
  DenseMatrix d = to_dense(m);
  CHECK(d.at(0, 1) == 7);
  CHECK(d.at(1, 2) == 9);
  CHECK(d.at(0, 0) == 0);
  CHECK(rank(m, F) == rank(t, F));
}

TEST_CASE("known ranks") {
  PrimeField F(32003);
  SparseMatrix zero(5, 7, {}, F);
  CHECK(rank(zero, F) == 0);
  std::vector<Triplet> eye;
  for (std::uint64_t i = 0; i < 6; ++i) eye.push_back({i, i, 1});
  CHECK(rank(SparseMatrix(6, 6, eye, F), F) == 6);
  // rank-1 outer product
  std::vector<Triplet> outer;
  for (std::uint64_t r = 0; r < 4; ++r)
    for (std::uint64_t c = 0; c < 5; ++c)
      outer.push_back({r, c, F.mul(static_cast<std::uint32_t>(r + 1),
                                   static_cast<std::uint32_t>(c + 1))});
  CHECK(rank(SparseMatrix(4, 5, outer, F), F) == 1);
}

TEST_CASE("rank over small characteristic differs where it should") {
  // [[1,1],[1,1]] has rank 1 everywhere; [[1,1],[1,-1]] drops rank only mod 2
  PrimeField F2(2);
  PrimeField F3(3);
  auto build = [](const PrimeField& F) {
    std::uint32_t m1 = F.reduce_signed(-1);
    return SparseMatrix(2, 2, {{0, 0, 1}, {0, 1, 1}, {1, 0, 1}, {1, 1, m1}}, F);
  };
  CHECK(rank(build(F2), F2) == 1);
  CHECK(rank(build(F3), F3) == 2);
  MultiPrimeRank mp = rank_multiprime(build, {2, 3, 5});
  CHECK_FALSE(mp.agree);
  CHECK(mp.max_rank == 2);
  MultiPrimeRank mp2 = rank_multiprime(build, {3, 5, 7});
  CHECK(mp2.agree);
}

TEST_CASE("sparse, dense, and reference ranks agree on random matrices") {
  std::mt19937_64 rng(2024);
  for (std::uint32_t p : {2u, 3u, 101u, 32003u}) {
    PrimeField F(p);
    for (double density : {0.02, 0.1, 0.5}) {
      for (int trial = 0; trial < 4; ++trial) {
        std::uint64_t rows = 10 + rng() % 50, cols = 10 + rng() % 50;
        SparseMatrix m = random_sparse(rows, cols, density, F, rng);
        std::uint64_t r = rank(m, F);
        CHECK(r == dense_rank(m, F));
        CHECK(r == oracle_rank(m, p));
      }
    }
  }
}

TEST_CASE("rank is stable across elimination tuning") {
  std::mt19937_64 rng(99);
  PrimeField F(32003);
  SparseMatrix m = random_sparse(80, 90, 0.08, F, rng);
  RankOptions sparse_only;
  sparse_only.dense_switch_entries = 0;
  sparse_only.dense_switch_cols = 0;
  RankOptions eager_dense;
  eager_dense.dense_switch_entries = 1u << 30;
  eager_dense.dense_switch_cols = 1u << 20;
  std::uint64_t r = rank(m, F);
  CHECK(rank(m, F, sparse_only) == r);
  CHECK(rank(m, F, eager_dense) == r);
}

TEST_CASE("dense guard names the offending size") {
  PrimeField F(101);
  RankOptions opt;
  opt.max_dense_entries = 10;
  SparseMatrix m(6, 6, {{0, 0, 1}}, F);
  CHECK_THROWS_AS(dense_rank(m, F, opt), resource_error);
}
