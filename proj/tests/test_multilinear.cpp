#include "doctest.h"
#include "koszul/multilinear.hpp"

using namespace koszul;

TEST_CASE("subset ranking is the enumeration order") {
  BinomialTable binom(32);
  for (int p = 1; p <= 4; ++p) {
    for (std::uint32_t n = static_cast<std::uint32_t>(p); n <= 12; ++n) {
      WedgeIndex w(static_cast<std::size_t>(p));
      for (int i = 0; i < p; ++i) w[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(i);
      std::uint64_t counter = 0;
      do {
        CHECK(wedge_rank(w, binom) == counter);
        CHECK(wedge_unrank(counter, p, n, binom) == w);
        ++counter;
      } while (wedge_next(w, n));
      CHECK(counter == binom(static_cast<int>(n), p));
    }
  }
}

TEST_CASE("deleted-position rank agrees with explicit deletion") {
  BinomialTable binom(32);
  WedgeIndex w{1, 4, 5, 9};
  for (int j = 0; j < 4; ++j) {
    WedgeIndex sub = w;
    sub.erase(sub.begin() + j);
    CHECK(wedge_rank_deleted(w, j, binom) == wedge_rank(sub, binom));
  }
}

TEST_CASE("rank input validation") {
  BinomialTable binom(32);
  CHECK_THROWS_AS(wedge_rank(WedgeIndex{3, 3}, binom), argument_error);
  CHECK_THROWS_AS(wedge_rank(WedgeIndex{5, 2}, binom), argument_error);
  CHECK_THROWS_AS(wedge_unrank(99, 2, 5, binom), argument_error);
}

TEST_CASE("alternating sign") {
  CHECK(koszul_sign(0) == 1);
  CHECK(koszul_sign(1) == -1);
  CHECK(koszul_sign(2) == 1);
}

TEST_CASE("multinomial residues") {
  CHECK(multinomial_mod({2, 0}, 32003) == 1);
  CHECK(multinomial_mod({1, 1}, 32003) == 2);
  CHECK(multinomial_mod({1, 1}, 2) == 0);
  // 5!/(3!1!1!) = 20
  CHECK(multinomial_mod({3, 1, 1}, 7) == 6);
  CHECK(multinomial_mod({3, 1, 1}, 2) == 0);
  CHECK(multinomial_mod({3, 1, 1}, 5) == 0);
  CHECK(multinomial_mod({3, 1, 1}, 3) == 2);
  // C(8,4) = 70 and C(10,5) = 252
  CHECK(multinomial_mod({4, 4}, 3) == 1);
  CHECK(multinomial_mod({5, 5}, 3) == 0);
  // adding 100000+100000 in base 3 carries, so 3 divides C(200000,100000)
  CHECK(multinomial_mod({100000, 100000}, 3) == 0);
}

TEST_CASE("power map diagonal over the rationals is injective") {
  PowerMap m = divided_to_symmetric(2, 2, 32003);
  CHECK(m.dimension() == 3);
  CHECK(m.diagonal == std::vector<std::uint32_t>{1, 2, 1});
  CHECK(m.rank() == 3);
  CHECK(m.kernel_dim() == 0);
}

TEST_CASE("power map degenerates in characteristic two") {
  PowerMap m = divided_to_symmetric(2, 2, 2);
  CHECK(m.dimension() == 3);
  CHECK(m.rank() == 2);
  CHECK(m.kernel_dim() == 1);
  CHECK(m.cokernel_dim() == 1);
}

TEST_CASE("power map degenerates in characteristic three") {
  PowerMap m = divided_to_symmetric(2, 3, 3);
  // multinomials 1,3,3,1 -> 1,0,0,1
  CHECK(m.dimension() == 4);
  CHECK(m.rank() == 2);
  CHECK(m.kernel_dim() == 2);
}

TEST_CASE("dimension identities") {
  CHECK(divided_power_dim(2, 3) == 4);
  CHECK(divided_power_dim(4, 2) == 10);
  for (int n = 1; n <= 5; ++n)
    for (int d = 1; d <= 5; ++d)
      CHECK(hermite_dimension_check(n, d) == binomial(n + d, n));
  CHECK(filtration_dimension_check(2, 3, 6));
  CHECK(filtration_dimension_check(1, 1, 8));
  CHECK(filtration_dimension_check(5, 4, 4));
}
