#include "koszul/multiproj.hpp"

#include <algorithm>

#include "koszul/binomial.hpp"

namespace koszul {

void check_degree(const MultiProjSpace& X, const MultiDegree& a, const char* what) {
  if (static_cast<int>(a.size()) != X.num_factors())
    throw argument_error(std::string(what) + ": degree has " +
                         std::to_string(a.size()) + " entries, space has " +
                         std::to_string(X.num_factors()) + " factors");
}

MultiDegree add(const MultiDegree& a, const MultiDegree& b) {
  if (a.size() != b.size()) throw argument_error("degree length mismatch");
  MultiDegree r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

MultiDegree scale(std::int64_t c, const MultiDegree& a) {
  MultiDegree r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

std::uint64_t section_dimension(const MultiProjSpace& X, const MultiDegree& a) {
  check_degree(X, a, "section_dimension");
  std::uint64_t prod = 1;
  for (int i = 0; i < X.num_factors(); ++i) {
    if (a[i] < 0) return 0;
    std::uint64_t h = binomial(a[i] + X.factors[i], X.factors[i]);
    unsigned __int128 wide = static_cast<unsigned __int128>(prod) * h;
    if (wide > ~std::uint64_t{0})
      throw resource_error("section_dimension exceeds 64 bits");
    prod = static_cast<std::uint64_t>(wide);
  }
  return prod;
}

std::vector<std::uint64_t> line_bundle_cohomology(const MultiProjSpace& X,
                                                  const MultiDegree& a) {
  check_degree(X, a, "line_bundle_cohomology");
  // single factor P^n: h^0 = C(a+n,n) for a >= 0, h^n = C(-a-1,n) for
  // a <= -n-1, nothing else.  Products convolve over the factors.
  std::vector<std::uint64_t> acc{1};
  for (int i = 0; i < X.num_factors(); ++i) {
    int n = X.factors[i];
    std::vector<std::uint64_t> one(static_cast<std::size_t>(n) + 1, 0);
    if (a[i] >= 0)
      one[0] = binomial(a[i] + n, n);
    else if (a[i] <= -n - 1)
      one[n] = binomial(-a[i] - 1, n);
    std::vector<std::uint64_t> next(acc.size() + n, 0);
    for (std::size_t u = 0; u < acc.size(); ++u) {
      if (!acc[u]) continue;
      for (int v = 0; v <= n; ++v) {
        if (!one[v]) continue;
        unsigned __int128 wide = static_cast<unsigned __int128>(acc[u]) * one[v];
        unsigned __int128 sum = wide + next[u + v];
        if (sum > ~std::uint64_t{0})
          throw resource_error("cohomology dimension exceeds 64 bits");
        next[u + v] = static_cast<std::uint64_t>(sum);
      }
    }
    acc = std::move(next);
  }
  acc.resize(static_cast<std::size_t>(X.dim()) + 1, 0);
  return acc;
}

std::int64_t euler_characteristic(const MultiProjSpace& X, const MultiDegree& a) {
  check_degree(X, a, "euler_characteristic");
  __int128 prod = 1;
  for (int i = 0; i < X.num_factors(); ++i)
    prod *= signed_binomial(a[i] + X.factors[i], X.factors[i]);
  if (prod > INT64_MAX || prod < INT64_MIN)
    throw resource_error("euler characteristic exceeds 64 bits");
  return static_cast<std::int64_t>(prod);
}

std::uint64_t hilbert_function(const MultiProjSpace& X, const MultiDegree& B,
                               const MultiDegree& L, std::int64_t m) {
  check_degree(X, B, "hilbert_function");
  check_degree(X, L, "hilbert_function");
  for (auto d : L)
    if (d < 1) throw argument_error("hilbert_function: L must have all degrees >= 1");
  return section_dimension(X, add(B, scale(m, L)));
}

namespace {

// enumerate one factor's degree-d block in basis order
std::vector<Exponents> factor_monomials(int n, std::int64_t d) {
  std::vector<Exponents> out;
  Exponents cur;
  // recursive descent, leading exponent largest first
  struct Rec {
    int nvars;
    std::vector<Exponents>* out;
    Exponents* cur;
    void go(std::int64_t remaining, int var) {
      if (var == nvars - 1) {
        cur->push_back(static_cast<std::int32_t>(remaining));
        out->push_back(*cur);
        cur->pop_back();
        return;
      }
      for (std::int64_t e = remaining; e >= 0; --e) {
        cur->push_back(static_cast<std::int32_t>(e));
        go(remaining - e, var + 1);
        cur->pop_back();
      }
    }
  } rec{n + 1, &out, &cur};
  rec.go(d, 0);
  return out;
}

}  // namespace

std::vector<Exponents> enumerate_monomials(const MultiProjSpace& X,
                                           const MultiDegree& a) {
  check_degree(X, a, "enumerate_monomials");
  for (auto d : a)
    if (d < 0) return {};
  std::vector<std::vector<Exponents>> blocks;
  std::uint64_t total = 1;
  for (int i = 0; i < X.num_factors(); ++i) {
    blocks.push_back(factor_monomials(X.factors[i], a[i]));
    total *= blocks.back().size();
  }
  std::vector<Exponents> out;
  out.reserve(total);
  // cartesian product, first factor most significant
  std::vector<std::size_t> idx(blocks.size(), 0);
  Exponents cur;
  for (;;) {
    cur.clear();
    for (std::size_t i = 0; i < blocks.size(); ++i)
      cur.insert(cur.end(), blocks[i][idx[i]].begin(), blocks[i][idx[i]].end());
    out.push_back(cur);
    std::size_t i = blocks.size();
    while (i > 0) {
      --i;
      if (++idx[i] < blocks[i].size()) break;
      idx[i] = 0;
      if (i == 0) return out;
    }
  }
}

MonomialBasis::MonomialBasis(const MultiProjSpace& X, const MultiDegree& a)
    : monos_(enumerate_monomials(X, a)) {
  index_.reserve(monos_.size() * 2);
  for (std::uint32_t i = 0; i < monos_.size(); ++i) index_.emplace(monos_[i], i);
}

std::uint32_t MonomialBasis::index_of(const Exponents& e) const {
  auto it = index_.find(e);
  return it == index_.end() ? npos : it->second;
}

std::string degree_to_string(const MultiDegree& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + ")";
}

}  // namespace koszul
