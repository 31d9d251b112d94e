#include "koszul/koszul.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <unordered_map>

#include "koszul/parallel.hpp"

namespace koszul {

namespace {

struct ExpVecHash {
  std::size_t operator()(const Exponents& e) const {
    std::size_t h = 1469598103934665603ull;
    for (auto v : e) {
      h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(v));
      h *= 1099511628211ull;
    }
    return h;
  }
};

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

KoszulInstance::KoszulInstance(MultiProjSpace X, MultiDegree B, MultiDegree L,
                               std::uint32_t prime, ResourceLimits limits)
    : X_(std::move(X)),
      B_(std::move(B)),
      L_(std::move(L)),
      F_(prime),
      limits_(limits),
      binom_(1),
      dim_v_(0) {
  check_degree(X_, B_, "KoszulInstance");
  check_degree(X_, L_, "KoszulInstance");
  for (auto d : L_)
    if (d < 1) throw argument_error("KoszulInstance: L must have all degrees >= 1");
  dim_v_ = section_dimension(X_, L_);
  if (dim_v_ > limits_.max_basis_elements)
    throw resource_error("dim H^0(L) = " + std::to_string(dim_v_) +
                         " exceeds the basis cap of " +
                         std::to_string(limits_.max_basis_elements));
  int need = static_cast<int>(dim_v_) + 2;
  binom_ = BinomialTable(need < 64 ? 64 : need);
}

std::uint64_t KoszulInstance::dim_r(std::int64_t m) const {
  return section_dimension(X_, add(B_, scale(m, L_)));
}

std::uint64_t KoszulInstance::term_dim(std::int64_t p, std::int64_t q) const {
  if (p < 0 || p > static_cast<std::int64_t>(dim_v_)) return 0;
  std::uint64_t w = binomial(static_cast<std::int64_t>(dim_v_), p);
  std::uint64_t r = dim_r(q);
  unsigned __int128 wide = static_cast<unsigned __int128>(w) * r;
  if (wide > ~std::uint64_t{0})
    throw resource_error("graded piece dimension exceeds 64 bits");
  return static_cast<std::uint64_t>(wide);
}

const MonomialBasis& KoszulInstance::v_basis() const {
  std::lock_guard<std::mutex> lk(cache_mu_);
  if (!v_basis_) v_basis_ = std::make_unique<MonomialBasis>(X_, L_);
  return *v_basis_;
}

const MonomialBasis& KoszulInstance::r_basis(std::int64_t m) const {
  std::lock_guard<std::mutex> lk(cache_mu_);
  auto it = r_bases_.find(m);
  if (it == r_bases_.end())
    it = r_bases_.emplace(m, std::make_unique<MonomialBasis>(X_, add(B_, scale(m, L_))))
             .first;
  return *it->second;
}

const std::vector<std::uint32_t>& KoszulInstance::mul_table(std::int64_t q) const {
  const MonomialBasis& V = v_basis();
  const MonomialBasis& Rq = r_basis(q);
  const MonomialBasis& Rq1 = r_basis(q + 1);
  std::lock_guard<std::mutex> lk(cache_mu_);
  auto it = mul_tables_.find(q);
  if (it != mul_tables_.end()) return *it->second;
  auto table = std::make_unique<std::vector<std::uint32_t>>();
  table->assign(V.size() * Rq.size(), MonomialBasis::npos);
  Exponents prod;
  for (std::size_t v = 0; v < V.size(); ++v) {
    for (std::size_t f = 0; f < Rq.size(); ++f) {
      prod = V[v];
      const Exponents& rf = Rq[f];
      for (std::size_t i = 0; i < prod.size(); ++i) prod[i] += rf[i];
      std::uint32_t g = Rq1.index_of(prod);
      if (g == MonomialBasis::npos)
        throw internal_error("monomial product missing from target basis");
      (*table)[v * Rq.size() + f] = g;
    }
  }
  it = mul_tables_.emplace(q, std::move(table)).first;
  return *it->second;
}

void KoszulInstance::throw_if_over_cap(std::int64_t p, std::int64_t q) const {
  for (int s = -1; s <= 1; ++s) {
    std::uint64_t d = term_dim(p - s, q + s);
    if (d > limits_.max_basis_elements)
      throw resource_error("graded piece at (p=" + std::to_string(p - s) +
                           ",q=" + std::to_string(q + s) + ") needs " +
                           std::to_string(d) + " basis elements, cap is " +
                           std::to_string(limits_.max_basis_elements));
  }
}

namespace {

// Shared column walk for delta_{p,q}.  Enumerates the domain
// wedge^p V (x) R_q in basis order and hands every column's entries to a
// sink; the deleted-position ranks are computed once per wedge and shared
// over the R_q index.
class ColumnWalker {
 public:
  ColumnWalker(const KoszulInstance& inst, std::int64_t p, std::int64_t q)
      : inst_(inst),
        p_(static_cast<int>(p)),
        V_(inst.v_basis()),
        Rq_(inst.r_basis(q)),
        Rq1_(inst.r_basis(q + 1)),
        mul_(Rq_.size() && Rq1_.size() ? &inst.mul_table(q) : nullptr),
        binom_(inst.binom()) {}

  std::uint64_t domain_cols() const {
    return binom_(static_cast<int>(V_.size()), p_) *
           static_cast<std::uint64_t>(Rq_.size());
  }
  std::uint64_t codomain_rows() const {
    return binom_(static_cast<int>(V_.size()), p_ - 1) *
           static_cast<std::uint64_t>(Rq1_.size());
  }

  // sink(col, fine_degree, entries) where entries are (row, value) pairs
  template <typename Sink>
  void walk(Sink&& sink) const {
    const std::uint32_t N = static_cast<std::uint32_t>(V_.size());
    if (p_ < 0 || static_cast<std::uint32_t>(p_) > N || Rq_.size() == 0) return;
    const std::size_t nr = Rq_.size();
    const std::uint32_t pm1 = inst_.field().characteristic() - 1;

    WedgeIndex w(static_cast<std::size_t>(p_));
    for (int j = 0; j < p_; ++j) w[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(j);
    std::vector<std::uint64_t> deleted(static_cast<std::size_t>(p_));
    Exponents wsum(static_cast<std::size_t>(inst_.space().coord_len()), 0);
    Exponents key = wsum;
    std::vector<std::pair<std::uint64_t, std::uint32_t>> entries;
    entries.reserve(static_cast<std::size_t>(p_ ? p_ : 1));

    std::uint64_t col = 0;
    for (;;) {
      for (int j = 0; j < p_; ++j)
        deleted[static_cast<std::size_t>(j)] = wedge_rank_deleted(w, j, binom_);
      std::fill(wsum.begin(), wsum.end(), 0);
      for (int j = 0; j < p_; ++j) {
        const Exponents& e = V_[w[static_cast<std::size_t>(j)]];
        for (std::size_t i = 0; i < wsum.size(); ++i) wsum[i] += e[i];
      }
      for (std::size_t f = 0; f < nr; ++f, ++col) {
        key = wsum;
        const Exponents& ef = Rq_[f];
        for (std::size_t i = 0; i < key.size(); ++i) key[i] += ef[i];
        entries.clear();
        if (mul_) {
          for (int j = 0; j < p_; ++j) {
            std::uint32_t g = (*mul_)[w[static_cast<std::size_t>(j)] * nr + f];
            std::uint64_t row = deleted[static_cast<std::size_t>(j)] * Rq1_.size() + g;
            entries.emplace_back(row, (j & 1) ? pm1 : 1u);
          }
        }
        sink(col, key, entries);
      }
      if (p_ == 0 || !wedge_next(w, N)) break;
    }
  }

 private:
  const KoszulInstance& inst_;
  int p_;
  const MonomialBasis& V_;
  const MonomialBasis& Rq_;
  const MonomialBasis& Rq1_;
  const std::vector<std::uint32_t>* mul_;
  const BinomialTable& binom_;
};

}  // namespace

SparseMatrix KoszulInstance::assemble_differential(std::int64_t p, std::int64_t q) const {
  throw_if_over_cap_pair(p, q);
  std::uint64_t rows = term_dim(p - 1, q + 1);
  std::uint64_t cols = term_dim(p, q);
  std::vector<Triplet> trips;
  if (cols > 0 && rows > 0 && p >= 1) {
    ColumnWalker walker(*this, p, q);
    trips.reserve(static_cast<std::size_t>(cols) * static_cast<std::size_t>(p));
    walker.walk([&](std::uint64_t col, const Exponents&,
                    const std::vector<std::pair<std::uint64_t, std::uint32_t>>& es) {
      for (auto& e : es) trips.push_back({e.first, col, e.second});
    });
  }
  return SparseMatrix(rows, cols, std::move(trips), F_);
}

namespace {

// bucket of domain columns sharing one fine degree
struct Bucket {
  Exponents key;
  std::vector<std::uint64_t> cols;
};

std::vector<Bucket> bucket_domain(const KoszulInstance& inst, std::int64_t p,
                                  std::int64_t q) {
  std::vector<Bucket> buckets;
  if (inst.term_dim(p, q) == 0) return buckets;
  std::unordered_map<Exponents, std::uint32_t, ExpVecHash> ids;
  ColumnWalker walker(inst, p, q);
  walker.walk([&](std::uint64_t col, const Exponents& key,
                  const std::vector<std::pair<std::uint64_t, std::uint32_t>>&) {
    auto [it, fresh] = ids.emplace(key, static_cast<std::uint32_t>(buckets.size()));
    if (fresh) buckets.push_back({key, {}});
    buckets[it->second].cols.push_back(col);
  });
  std::sort(buckets.begin(), buckets.end(),
            [](const Bucket& a, const Bucket& b) { return a.key < b.key; });
  return buckets;
}

// block of delta_{p,q} on one bucket's columns; rows compacted to the
// touched set in ascending global order
SparseMatrix bucket_block(const KoszulInstance& inst, std::int64_t p, std::int64_t q,
                          const Bucket& bucket) {
  const PrimeField& F = inst.field();
  const MonomialBasis& V = inst.v_basis();
  const MonomialBasis& Rq = inst.r_basis(q);
  const MonomialBasis& Rq1 = inst.r_basis(q + 1);
  if (p < 1 || Rq1.size() == 0 || Rq.size() == 0)
    return SparseMatrix(0, bucket.cols.size(), {}, F);

  const auto& mul = inst.mul_table(q);
  const BinomialTable& binom = inst.binom();
  const std::size_t nr = Rq.size();
  const std::uint32_t pm1 = F.characteristic() - 1;

  struct Raw {
    std::uint64_t rowg;
    std::uint32_t col;
    std::uint32_t val;
  };
  std::vector<Raw> raw;
  raw.reserve(bucket.cols.size() * static_cast<std::size_t>(p));
  std::vector<std::uint64_t> rows;
  rows.reserve(raw.capacity());

  std::uint64_t cached_iw = ~std::uint64_t{0};
  WedgeIndex w;
  std::vector<std::uint64_t> deleted(static_cast<std::size_t>(p));
  for (std::uint32_t lc = 0; lc < bucket.cols.size(); ++lc) {
    std::uint64_t col = bucket.cols[lc];
    std::uint64_t iw = col / nr;
    std::size_t f = static_cast<std::size_t>(col % nr);
    if (iw != cached_iw) {
      w = wedge_unrank(iw, static_cast<int>(p), static_cast<std::uint32_t>(V.size()), binom);
      for (int j = 0; j < p; ++j)
        deleted[static_cast<std::size_t>(j)] = wedge_rank_deleted(w, static_cast<int>(j), binom);
      cached_iw = iw;
    }
    for (int j = 0; j < p; ++j) {
      std::uint32_t g = mul[w[static_cast<std::size_t>(j)] * nr + f];
      std::uint64_t rowg = deleted[static_cast<std::size_t>(j)] * Rq1.size() + g;
      raw.push_back({rowg, lc, (j & 1) ? pm1 : 1u});
      rows.push_back(rowg);
    }
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  std::vector<Triplet> trips;
  trips.reserve(raw.size());
  for (const Raw& r : raw) {
    std::uint64_t lr = static_cast<std::uint64_t>(
        std::lower_bound(rows.begin(), rows.end(), r.rowg) - rows.begin());
    trips.push_back({lr, r.col, r.val});
  }
  return SparseMatrix(rows.size(), bucket.cols.size(), std::move(trips), F);
}

}  // namespace

std::vector<Strand> KoszulInstance::strand_decompose(std::int64_t p, std::int64_t q) const {
  throw_if_over_cap(p, q);
  // bucket all three graded pieces by fine degree
  struct Build {
    Exponents key;
    std::vector<std::uint64_t> left, middle, right;
  };
  std::vector<Build> builds;
  std::unordered_map<Exponents, std::uint32_t, ExpVecHash> ids;
  auto bucket_term = [&](std::int64_t tp, std::int64_t tq, int which) {
    if (term_dim(tp, tq) == 0) return;
    ColumnWalker walker(*this, tp, tq);
    walker.walk([&](std::uint64_t col, const Exponents& key,
                    const std::vector<std::pair<std::uint64_t, std::uint32_t>>&) {
      auto [it, fresh] = ids.emplace(key, static_cast<std::uint32_t>(builds.size()));
      if (fresh) builds.push_back({key, {}, {}, {}});
      Build& b = builds[it->second];
      (which == 0 ? b.left : which == 1 ? b.middle : b.right).push_back(col);
    });
  };
  bucket_term(p + 1, q - 1, 0);
  bucket_term(p, q, 1);
  bucket_term(p - 1, q + 1, 2);
  std::sort(builds.begin(), builds.end(),
            [](const Build& a, const Build& b) { return a.key < b.key; });

  std::vector<Strand> out;
  out.reserve(builds.size());
  for (Build& b : builds) {
    Strand s;
    s.fine_degree = b.key;
    s.left_basis = std::move(b.left);
    s.middle_basis = std::move(b.middle);
    s.right_basis = std::move(b.right);
    s.in_block = restricted_block(p + 1, q - 1, s.left_basis, s.middle_basis);
    s.out_block = restricted_block(p, q, s.middle_basis, s.right_basis);
    out.push_back(std::move(s));
  }
  return out;
}

SparseMatrix KoszulInstance::restricted_block(
    std::int64_t p, std::int64_t q, const std::vector<std::uint64_t>& domain,
    const std::vector<std::uint64_t>& codomain) const {
  const MonomialBasis& Rq = r_basis(q);
  const MonomialBasis& Rq1 = r_basis(q + 1);
  if (p < 1 || domain.empty() || Rq.size() == 0 || Rq1.size() == 0)
    return SparseMatrix(codomain.size(), domain.size(), {}, F_);
  const auto& mul = mul_table(q);
  const std::size_t nr = Rq.size();
  const std::uint32_t pm1 = F_.characteristic() - 1;

  std::vector<Triplet> trips;
  trips.reserve(domain.size() * static_cast<std::size_t>(p));
  std::uint64_t cached_iw = ~std::uint64_t{0};
  WedgeIndex w;
  std::vector<std::uint64_t> deleted(static_cast<std::size_t>(p));
  for (std::uint32_t lc = 0; lc < domain.size(); ++lc) {
    std::uint64_t col = domain[lc];
    std::uint64_t iw = col / nr;
    std::size_t f = static_cast<std::size_t>(col % nr);
    if (iw != cached_iw) {
      w = wedge_unrank(iw, static_cast<int>(p),
                       static_cast<std::uint32_t>(v_basis().size()), binom_);
      for (int j = 0; j < p; ++j)
        deleted[static_cast<std::size_t>(j)] = wedge_rank_deleted(w, static_cast<int>(j), binom_);
      cached_iw = iw;
    }
    for (int j = 0; j < p; ++j) {
      std::uint32_t g = mul[w[static_cast<std::size_t>(j)] * nr + f];
      std::uint64_t rowg = deleted[static_cast<std::size_t>(j)] * Rq1.size() + g;
      auto it = std::lower_bound(codomain.begin(), codomain.end(), rowg);
      if (it == codomain.end() || *it != rowg)
        throw internal_error("differential image leaves its fine-degree slice");
      trips.push_back({static_cast<std::uint64_t>(it - codomain.begin()), lc,
                       (j & 1) ? pm1 : 1u});
    }
  }
  return SparseMatrix(codomain.size(), domain.size(), std::move(trips), F_);
}

DifferentialRank KoszulInstance::differential_rank(std::int64_t p, std::int64_t q,
                                                   unsigned threads) const {
  auto t0 = std::chrono::steady_clock::now();
  DifferentialRank out;
  if (term_dim(p, q) == 0 || term_dim(p - 1, q + 1) == 0 || p < 1) {
    out.wall_ms = ms_since(t0);
    return out;
  }
  throw_if_over_cap_pair(p, q);
  // warm the shared caches before the parallel phase
  (void)mul_table(q);
  std::vector<Bucket> buckets = bucket_domain(*this, p, q);
  out.strand_count = static_cast<std::uint32_t>(buckets.size());

  // biggest strands first for balance; results indexed, so the sum is
  // schedule-independent
  std::vector<std::size_t> order(buckets.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (buckets[a].cols.size() != buckets[b].cols.size())
      return buckets[a].cols.size() > buckets[b].cols.size();
    return a < b;
  });

  ParallelResult<std::uint64_t> res = run_indexed<std::uint64_t>(
      order.size(), threads, [&](std::size_t i) -> std::uint64_t {
        const Bucket& b = buckets[order[i]];
        SparseMatrix block = bucket_block(*this, p, q, b);
        return rank(block, F_, limits_.rank);
      });
  if (!res.ok())
    throw resource_error("strand (" + std::to_string(p) + "," + std::to_string(q) +
                         "): " + res.failures.front().message);
  for (std::uint64_t r : res.values) out.rank += r;
  out.wall_ms = ms_since(t0);
  return out;
}

void KoszulInstance::throw_if_over_cap_pair(std::int64_t p, std::int64_t q) const {
  for (int s = 0; s <= 1; ++s) {
    std::uint64_t d = term_dim(p - s, q + s);
    if (d > limits_.max_basis_elements)
      throw resource_error("graded piece at (p=" + std::to_string(p - s) +
                           ",q=" + std::to_string(q + s) + ") needs " +
                           std::to_string(d) + " basis elements, cap is " +
                           std::to_string(limits_.max_basis_elements));
  }
}

std::uint64_t KoszulInstance::koszul_dimension(std::int64_t p, std::int64_t q,
                                               unsigned threads) const {
  std::uint64_t dim = term_dim(p, q);
  if (dim == 0) return 0;
  std::uint64_t r_out = differential_rank(p, q, threads).rank;
  std::uint64_t r_in = differential_rank(p + 1, q - 1, threads).rank;
  if (r_out + r_in > dim)
    throw internal_error("complex fails to be a complex: ranks exceed dimension");
  return dim - r_out - r_in;
}

std::uint64_t KoszulInstance::koszul_dimension_direct(std::int64_t p,
                                                      std::int64_t q) const {
  std::uint64_t dim = term_dim(p, q);
  if (dim == 0) return 0;
  std::uint64_t r_out = rank(assemble_differential(p, q), F_, limits_.rank);
  std::uint64_t r_in = rank(assemble_differential(p + 1, q - 1), F_, limits_.rank);
  if (r_out + r_in > dim)
    throw internal_error("complex fails to be a complex: ranks exceed dimension");
  return dim - r_out - r_in;
}

bool KoszulInstance::regularity_hypothesis() const {
  for (std::int64_t m = 1;; ++m) {
    MultiDegree a = add(B_, scale(m, L_));
    bool all_nonneg = true;
    for (auto c : a) all_nonneg = all_nonneg && c >= 0;
    if (all_nonneg) return true;  // stays effective from here on
    auto h = line_bundle_cohomology(X_, a);
    for (std::size_t i = 1; i < h.size(); ++i)
      if (h[i] != 0) return false;
    if (m > 1'000'000) throw internal_error("regularity scan runaway");
  }
}

BettiTable betti_table(const KoszulInstance& inst, int pmax, int qmin, int qmax,
                       unsigned threads) {
  if (pmax < 0 || qmin > qmax) throw argument_error("betti_table: empty range");
  BettiTable t;
  t.spaces = inst.space().factors;
  t.B = inst.twist();
  t.L = inst.bundle();
  t.prime = inst.field().characteristic();
  t.pmax = pmax;
  t.qmin = qmin;
  t.qmax = qmax;
  t.regularity_asserted = inst.regularity_hypothesis();
  const int n = inst.space().dim();

  std::map<std::pair<std::int64_t, std::int64_t>, DifferentialRank> cache;
  auto ranked = [&](std::int64_t p, std::int64_t q, double& fresh_ms,
                    std::uint32_t& strands) -> std::uint64_t {
    auto it = cache.find({p, q});
    if (it == cache.end()) {
      it = cache.emplace(std::make_pair(p, q),
                         inst.differential_rank(p, q, threads)).first;
      fresh_ms += it->second.wall_ms;
      strands += it->second.strand_count;
    }
    return it->second.rank;
  };

  for (int q = qmin; q <= qmax; ++q) {
    for (int p = 0; p <= pmax; ++p) {
      std::uint64_t dim = inst.term_dim(p, q);
      BettiEntry e;
      if (dim == 0) {
        t.entries[{p, q}] = e;
        continue;
      }
      try {
        inst.throw_if_over_cap(p, q);
        std::uint64_t r_out = ranked(p, q, e.wall_ms, e.strand_count);
        std::uint64_t r_in = ranked(p + 1, q - 1, e.wall_ms, e.strand_count);
        if (r_out + r_in > dim)
          throw internal_error("complex fails to be a complex: ranks exceed dimension");
        e.dim = dim - r_out - r_in;
        if (t.regularity_asserted && q >= n + 2 && e.dim != 0)
          throw internal_error("nonzero entry in a row that must vanish (q=" +
                               std::to_string(q) + ")");
        t.entries[{p, q}] = e;
      } catch (const resource_error& err) {
        t.failures.push_back({p, q, err.what()});
      }
    }
  }
  return t;
}

std::optional<std::int64_t> hilbert_betti_mismatch(const BettiTable& table,
                                                   const KoszulInstance& inst,
                                                   std::int64_t through_degree) {
  // lowest degree where R can be nonzero
  std::int64_t m0 = std::numeric_limits<std::int64_t>::min();
  for (std::size_t i = 0; i < inst.bundle().size(); ++i) {
    std::int64_t b = inst.twist()[i], d = inst.bundle()[i];
    // smallest m with b + m d >= 0
    std::int64_t m = b >= 0 ? -(b / d) : (-b + d - 1) / d;
    if (m > m0) m0 = m;
  }
  std::int64_t lo = std::min<std::int64_t>(m0, 0);

  std::map<std::int64_t, __int128> lhs, rhs;
  for (const auto& [pq, e] : table.entries) {
    auto [p, q] = pq;
    __int128 term = static_cast<__int128>(e.dim);
    lhs[p + q] += (p % 2 == 0) ? term : -term;
  }
  std::int64_t rp1 = static_cast<std::int64_t>(inst.dim_v());
  for (std::int64_t m = lo; m <= through_degree; ++m) {
    __int128 hm = static_cast<__int128>(inst.dim_r(m));
    if (hm == 0) continue;
    for (std::int64_t j = 0; j + m <= through_degree && j <= rp1; ++j) {
      __int128 c = static_cast<__int128>(binomial(rp1, j));
      rhs[m + j] += (j % 2 == 0) ? c * hm : -c * hm;
    }
  }
  for (std::int64_t d = lo; d <= through_degree; ++d) {
    __int128 a = lhs.count(d) ? lhs[d] : 0;
    __int128 b = rhs.count(d) ? rhs[d] : 0;
    if (a != b) return d;
  }
  return std::nullopt;
}

}  // namespace koszul
