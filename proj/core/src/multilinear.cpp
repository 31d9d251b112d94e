#include "koszul/multilinear.hpp"

#include "koszul/errors.hpp"

namespace koszul {

std::uint64_t wedge_rank(const WedgeIndex& w, const BinomialTable& binom) {
  std::uint64_t r = 0;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (j > 0 && w[j] <= w[j - 1]) throw argument_error("wedge index not increasing");
    r += binom(static_cast<int>(w[j]), static_cast<int>(j + 1));
  }
  return r;
}

WedgeIndex wedge_unrank(std::uint64_t r, int p, std::uint32_t n,
                        const BinomialTable& binom) {
  if (p < 0 || static_cast<std::uint32_t>(p) > n)
    throw argument_error("wedge_unrank: p out of range");
  WedgeIndex w(static_cast<std::size_t>(p));
  std::uint32_t hi = n;
  for (int j = p; j >= 1; --j) {
    // largest s < hi with C(s,j) <= r
    std::uint32_t s = hi;
    while (s > 0 && binom(static_cast<int>(s - 1), j) > r) --s;
    if (s == 0) throw argument_error("wedge_unrank: rank out of range");
    --s;
    w[static_cast<std::size_t>(j - 1)] = s;
    r -= binom(static_cast<int>(s), j);
    hi = s;
  }
  if (r != 0) throw argument_error("wedge_unrank: rank out of range");
  return w;
}

bool wedge_next(WedgeIndex& w, std::uint32_t n) {
  const std::size_t p = w.size();
  for (std::size_t i = 0; i < p; ++i) {
    std::uint32_t limit = (i + 1 < p) ? w[i + 1] : n;
    if (w[i] + 1 < limit) {
      ++w[i];
      for (std::size_t j = 0; j < i; ++j) w[j] = static_cast<std::uint32_t>(j);
      return true;
    }
  }
  return false;
}

std::uint64_t wedge_rank_deleted(const WedgeIndex& w, int j,
                                 const BinomialTable& binom) {
  std::uint64_t r = 0;
  std::size_t pos = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (static_cast<int>(i) == j) continue;
    r += binom(static_cast<int>(w[i]), static_cast<int>(pos));
    ++pos;
  }
  return r;
}

std::uint64_t divided_power_dim(std::uint64_t dim_v, std::int64_t n) {
  if (n < 0) throw argument_error("divided_power_dim: negative power");
  if (dim_v == 0) return n == 0 ? 1 : 0;
  return binomial(static_cast<std::int64_t>(dim_v) + n - 1, n);
}

namespace {

// n! mod p with all factors of p stripped, plus the number stripped
struct StrippedFactorial {
  std::uint32_t unit;
  std::int64_t valuation;
};

StrippedFactorial stripped_factorial(std::int64_t n, std::uint32_t p) {
  StrippedFactorial f{1, 0};
  for (std::int64_t i = 2; i <= n; ++i) {
    std::int64_t x = i;
    while (x % p == 0) {
      x /= p;
      ++f.valuation;
    }
    f.unit = static_cast<std::uint32_t>((static_cast<std::uint64_t>(f.unit) *
                                         static_cast<std::uint64_t>(x % p)) % p);
  }
  return f;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // extended euclid
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw argument_error("inv_mod: not invertible");
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace

std::uint32_t multinomial_mod(const std::vector<std::int64_t>& e, std::uint32_t p) {
  std::int64_t total = 0;
  for (auto x : e) {
    if (x < 0) throw argument_error("multinomial_mod: negative exponent");
    total += x;
  }
  StrippedFactorial num = stripped_factorial(total, p);
  std::uint64_t den_unit = 1;
  std::int64_t den_val = 0;
  for (auto x : e) {
    StrippedFactorial f = stripped_factorial(x, p);
    den_unit = (den_unit * f.unit) % p;
    den_val += f.valuation;
  }
  if (num.valuation > den_val) return 0;
  if (num.valuation < den_val)
    throw internal_error("multinomial_mod: negative valuation");
  return static_cast<std::uint32_t>(
      (static_cast<std::uint64_t>(num.unit) *
       inv_mod(static_cast<std::uint32_t>(den_unit), p)) % p);
}

PowerMap divided_to_symmetric(std::uint64_t dim_v, std::int64_t n,
                              std::uint32_t prime) {
  if (n < 0) throw argument_error("divided_to_symmetric: negative power");
  if (prime < 2) throw argument_error("divided_to_symmetric: bad prime");
  PowerMap m;
  m.dim_v = dim_v;
  m.n = n;
  m.prime = prime;
  std::uint64_t dim = divided_power_dim(dim_v, n);
  m.diagonal.reserve(dim);
  // exponent vectors of degree n in dim_v variables, leading exponent
  // largest first to match the monomial basis order
  std::vector<std::int64_t> e(dim_v ? dim_v : 1, 0);
  struct Rec {
    std::uint64_t r;
    std::uint32_t p;
    std::vector<std::int64_t>* e;
    PowerMap* m;
    void go(std::uint64_t var, std::int64_t remaining) {
      if (var + 1 == r) {
        (*e)[var] = remaining;
        m->diagonal.push_back(multinomial_mod(*e, p));
        return;
      }
      for (std::int64_t x = remaining; x >= 0; --x) {
        (*e)[var] = x;
        go(var + 1, remaining - x);
      }
    }
  } rec{dim_v ? dim_v : 1, prime, &e, &m};
  if (dim_v > 0) rec.go(0, n);
  else if (n == 0) m.diagonal.push_back(1);
  return m;
}

std::uint64_t PowerMap::rank() const {
  std::uint64_t r = 0;
  for (auto v : diagonal)
    if (v != 0) ++r;
  return r;
}

std::uint64_t hermite_dimension_check(std::int64_t n, std::int64_t d) {
  if (n < 0 || d < 0) throw argument_error("hermite_dimension_check: negative degree");
  std::uint64_t lhs = divided_power_dim(d + 1, n);        // D^n of S^d k^2
  std::uint64_t rhs = divided_power_dim(n + 1, d);        // S^d of D^n k^2
  if (lhs != rhs) throw internal_error("hermite dimensions disagree");
  if (lhs != binomial(n + d, n)) throw internal_error("hermite closed form disagrees");
  return lhs;
}

bool filtration_dimension_check(std::uint64_t dim_u, std::uint64_t dim_w,
                                std::int64_t kmax) {
  for (std::int64_t k = 0; k <= kmax; ++k) {
    std::uint64_t whole = divided_power_dim(dim_u + dim_w, k);
    std::uint64_t graded = 0;
    for (std::int64_t j = 0; j <= k; ++j)
      graded += divided_power_dim(dim_u, j) * divided_power_dim(dim_w, k - j);
    if (whole != graded) return false;
  }
  return true;
}

}  // namespace koszul
