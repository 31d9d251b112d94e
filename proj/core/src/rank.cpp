#include "koszul/rank.hpp"

#include <algorithm>
#include <limits>

namespace koszul {

namespace {

struct Entry {
  std::uint32_t col;
  std::uint32_t val;
};

// Working state of the sparse eliminator.  Row and column ids are compacted
// to the touched set, so formal dimensions way beyond the nonzero support
// cost nothing.
class Eliminator {
 public:
  Eliminator(const SparseMatrix& m, const PrimeField& F, const RankOptions& opt)
      : F_(F), opt_(opt) {
    std::vector<std::uint64_t> row_ids, col_ids;
    row_ids.reserve(m.nnz());
    col_ids.reserve(m.nnz());
    for (const Triplet& t : m.entries()) {
      row_ids.push_back(t.row);
      col_ids.push_back(t.col);
    }
    std::sort(row_ids.begin(), row_ids.end());
    row_ids.erase(std::unique(row_ids.begin(), row_ids.end()), row_ids.end());
    std::sort(col_ids.begin(), col_ids.end());
    col_ids.erase(std::unique(col_ids.begin(), col_ids.end()), col_ids.end());
    nrows_ = row_ids.size();
    ncols_ = col_ids.size();

    rows_.assign(nrows_, {});
    std::vector<std::uint32_t> row_nnz(nrows_, 0);
    for (const Triplet& t : m.entries()) {
      std::uint32_t r = static_cast<std::uint32_t>(
          std::lower_bound(row_ids.begin(), row_ids.end(), t.row) - row_ids.begin());
      ++row_nnz[r];
    }
    for (std::size_t r = 0; r < nrows_; ++r) rows_[r].reserve(row_nnz[r]);
    col_rows_.assign(ncols_, {});
    col_len_.assign(ncols_, 0);
    for (const Triplet& t : m.entries()) {
      std::uint32_t r = static_cast<std::uint32_t>(
          std::lower_bound(row_ids.begin(), row_ids.end(), t.row) - row_ids.begin());
      std::uint32_t c = static_cast<std::uint32_t>(
          std::lower_bound(col_ids.begin(), col_ids.end(), t.col) - col_ids.begin());
      rows_[r].push_back({c, t.val});
      col_rows_[c].push_back(r);
      ++col_len_[c];
    }
    for (auto& row : rows_)
      std::sort(row.begin(), row.end(),
                [](const Entry& a, const Entry& b) { return a.col < b.col; });

    row_active_.assign(nrows_, 1);
    col_active_.assign(ncols_, 1);
    active_rows_ = nrows_;
    active_cols_ = ncols_;
    nnz_ = m.nnz();

    std::size_t max_len = ncols_ + 2;
    rows_by_len_.assign(max_len, {});
    for (std::uint32_t r = 0; r < nrows_; ++r)
      rows_by_len_[rows_[r].size()].push_back(r);
    cols_by_len_.assign(nrows_ + 2, {});
    for (std::uint32_t c = 0; c < ncols_; ++c)
      cols_by_len_[col_len_[c]].push_back(c);
  }

  std::uint64_t run() {
    for (;;) {
      if (active_rows_ == 0 || active_cols_ == 0) return rank_;
      if (should_go_dense()) return rank_ + dense_finish();
      auto [r, c] = select_pivot();
      if (r == kNone) return rank_;  // no nonzero entries left
      eliminate(r, c);
    }
  }

 private:
  static constexpr std::uint32_t kNone = ~std::uint32_t{0};

  std::uint32_t row_value(std::uint32_t r, std::uint32_t c) const {
    const auto& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, std::uint32_t col) { return e.col < col; });
    return (it != row.end() && it->col == c) ? it->val : 0;
  }

  bool should_go_dense() const {
    if (static_cast<std::uint64_t>(active_rows_) * active_cols_ >
        opt_.dense_switch_entries)
      return false;
    if (active_cols_ <= opt_.dense_switch_cols || active_rows_ <= opt_.dense_switch_cols)
      return true;
    // switch once fill makes sparse bookkeeping pointless
    return nnz_ * 5 >= static_cast<std::uint64_t>(active_rows_) * active_cols_;
  }

  // Markowitz cost (row_len-1)*(col_len-1), ties by lowest (row, col).
  std::pair<std::uint32_t, std::uint32_t> select_pivot() {
    std::uint64_t best_cost = std::numeric_limits<std::uint64_t>::max();
    std::uint32_t best_row = kNone, best_col = kNone;
    auto consider = [&](std::uint64_t cost, std::uint32_t r, std::uint32_t c) {
      if (cost < best_cost || (cost == best_cost &&
                               (r < best_row || (r == best_row && c < best_col)))) {
        best_cost = cost;
        best_row = r;
        best_col = c;
      }
    };

    // cost 0 comes only from singleton rows or singleton columns
    for (std::uint32_t r : clean_bucket(rows_by_len_, 1, /*is_row=*/true))
      consider(0, r, rows_[r][0].col);
    for (std::uint32_t c : clean_bucket(cols_by_len_, 1, /*is_row=*/false)) {
      std::uint32_t r = valid_min_row(c);
      if (r != kNone) consider(0, r, c);
    }
    if (best_cost == 0) return {best_row, best_col};

    std::uint64_t min_row_len = min_active_len(rows_by_len_, true);
    for (std::size_t len = 2; len < cols_by_len_.size(); ++len) {
      if ((len - 1) * (min_row_len - 1) > best_cost) break;
      for (std::uint32_t c : clean_bucket(cols_by_len_, len, false)) {
        for (std::uint32_t r : col_rows_[c]) {
          if (!row_active_[r]) continue;
          std::uint32_t v = row_value(r, c);
          if (!v) continue;
          consider((rows_[r].size() - 1) * (len - 1), r, c);
        }
      }
      if (best_cost == (len - 1) * (min_row_len - 1)) break;  // cannot improve
    }
    return {best_row, best_col};
  }

  // drop stale ids from a length bucket and return a stable reference
  const std::vector<std::uint32_t>& clean_bucket(
      std::vector<std::vector<std::uint32_t>>& buckets, std::size_t len, bool is_row) {
    auto& b = buckets[len];
    std::size_t keep = 0;
    for (std::uint32_t id : b) {
      bool ok = is_row ? (row_active_[id] && rows_[id].size() == len)
                       : (col_active_[id] && col_len_[id] == len);
      if (ok) b[keep++] = id;
    }
    b.resize(keep);
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    return b;
  }

  std::uint64_t min_active_len(std::vector<std::vector<std::uint32_t>>& buckets,
                               bool is_row) {
    for (std::size_t len = 1; len < buckets.size(); ++len)
      if (!clean_bucket(buckets, len, is_row).empty()) return len;
    return buckets.size();
  }

  // lowest active row with a true nonzero in column c; compacts col_rows_[c]
  std::uint32_t valid_min_row(std::uint32_t c) {
    auto& list = col_rows_[c];
    std::size_t keep = 0;
    std::uint32_t best = kNone;
    for (std::uint32_t r : list) {
      if (!row_active_[r] || !row_value(r, c)) continue;
      list[keep++] = r;
      if (r < best) best = r;
    }
    list.resize(keep);
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    col_len_[c] = static_cast<std::uint32_t>(list.size());
    return best;
  }

  void bump_col(std::uint32_t c, std::int64_t delta) {
    col_len_[c] = static_cast<std::uint32_t>(col_len_[c] + delta);
    if (col_active_[c] && col_len_[c] < cols_by_len_.size())
      cols_by_len_[col_len_[c]].push_back(c);
  }

  void retire_row(std::uint32_t r) {
    row_active_[r] = 0;
    --active_rows_;
    nnz_ -= rows_[r].size();
    for (const Entry& e : rows_[r])
      if (col_active_[e.col]) bump_col(e.col, -1);
    rows_[r].clear();
    rows_[r].shrink_to_fit();
  }

  void eliminate(std::uint32_t pr, std::uint32_t pc) {
    std::uint32_t pv = row_value(pr, pc);
    std::uint32_t inv = F_.inv(pv);

    // rows actually holding column pc, pivot row excluded
    auto& list = col_rows_[pc];
    std::vector<std::uint32_t> targets;
    targets.reserve(list.size());
    for (std::uint32_t r : list)
      if (r != pr && row_active_[r] && row_value(r, pc)) targets.push_back(r);
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());

    for (std::uint32_t r : targets) {
      std::uint32_t m = F_.mul(row_value(r, pc), inv);
      combine(r, pr, m);
      if (rows_[r].empty()) retire_row(r);
      else if (rows_[r].size() < rows_by_len_.size())
        rows_by_len_[rows_[r].size()].push_back(r);
    }

    ++rank_;
    col_active_[pc] = 0;
    --active_cols_;
    retire_row(pr);
  }

  // row r <- row r - m * row pr
  void combine(std::uint32_t r, std::uint32_t pr, std::uint32_t m) {
    scratch_.clear();
    const auto& a = rows_[r];
    const auto& b = rows_[pr];
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].col < b[j].col)) {
        scratch_.push_back(a[i++]);
      } else if (i == a.size() || b[j].col < a[i].col) {
        std::uint32_t nv = F_.neg(F_.mul(m, b[j].val));
        if (nv) {
          scratch_.push_back({b[j].col, nv});
          if (col_active_[b[j].col]) {
            col_rows_[b[j].col].push_back(r);
            bump_col(b[j].col, +1);
          }
        }
        ++j;
      } else {
        std::uint32_t nv = F_.sub(a[i].val, F_.mul(m, b[j].val));
        if (nv) scratch_.push_back({a[i].col, nv});
        else if (col_active_[a[i].col]) bump_col(a[i].col, -1);
        ++i;
        ++j;
      }
    }
    nnz_ += scratch_.size();
    nnz_ -= rows_[r].size();
    rows_[r].assign(scratch_.begin(), scratch_.end());
  }

  std::uint64_t dense_finish() {
    // gather the active block, columns remapped in ascending order
    std::vector<std::uint32_t> col_map(ncols_, kNone);
    std::uint32_t dc = 0;
    for (std::uint32_t c = 0; c < ncols_; ++c)
      if (col_active_[c]) col_map[c] = dc++;
    DenseMatrix d;
    d.cols = dc;
    d.rows = active_rows_;
    d.a.assign(static_cast<std::size_t>(d.rows) * d.cols, 0);
    std::uint32_t dr = 0;
    for (std::uint32_t r = 0; r < nrows_; ++r) {
      if (!row_active_[r]) continue;
      for (const Entry& e : rows_[r])
        if (col_map[e.col] != kNone) d.at(dr, col_map[e.col]) = e.val;
      ++dr;
    }
    return dense_rank(std::move(d), F_);
  }

  const PrimeField& F_;
  RankOptions opt_;
  std::size_t nrows_ = 0, ncols_ = 0;
  std::vector<std::vector<Entry>> rows_;
  std::vector<std::vector<std::uint32_t>> col_rows_;
  std::vector<std::uint32_t> col_len_;
  std::vector<std::uint8_t> row_active_, col_active_;
  std::vector<std::vector<std::uint32_t>> rows_by_len_, cols_by_len_;
  std::vector<Entry> scratch_;
  std::uint64_t active_rows_ = 0, active_cols_ = 0, nnz_ = 0, rank_ = 0;
};

}  // namespace

std::uint64_t rank(const SparseMatrix& m, const PrimeField& F,
                   const RankOptions& opt) {
  if (m.nnz() == 0) return 0;
  if (m.nnz() > std::numeric_limits<std::uint32_t>::max())
    throw resource_error("sparse rank: more than 2^32 nonzeros");
  Eliminator e(m, F, opt);
  return e.run();
}

std::uint64_t dense_rank(DenseMatrix m, const PrimeField& F) {
  const std::uint64_t rows = m.rows, cols = m.cols;
  std::uint64_t r = 0;
  for (std::uint64_t c = 0; c < cols && r < rows; ++c) {
    std::uint64_t pr = r;
    while (pr < rows && m.at(pr, c) == 0) ++pr;
    if (pr == rows) continue;
    if (pr != r)
      for (std::uint64_t j = c; j < cols; ++j) std::swap(m.at(r, j), m.at(pr, j));
    std::uint32_t inv = F.inv(m.at(r, c));
    for (std::uint64_t rr = r + 1; rr < rows; ++rr) {
      std::uint32_t head = m.at(rr, c);
      if (!head) continue;
      // subtract as addition of p - m to keep the loop branch-free
      FixedMul fm(F.neg(F.mul(head, inv)), F.characteristic());
      std::uint32_t* dst = &m.a[rr * cols + c];
      const std::uint32_t* src = &m.a[r * cols + c];
      const std::uint32_t p = F.characteristic();
      for (std::uint64_t j = 0; j < cols - c; ++j) {
        std::uint32_t t = dst[j] + fm.mul(src[j]);
        dst[j] = t >= p ? t - p : t;
      }
    }
    ++r;
  }
  return r;
}

std::uint64_t dense_rank(const SparseMatrix& m, const PrimeField& F,
                         const RankOptions& opt) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (m.rows() * m.cols() > opt.max_dense_entries)
    throw resource_error("dense_rank: " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + " exceeds the dense cap of " +
                         std::to_string(opt.max_dense_entries) + " entries");
  return dense_rank(to_dense(m), F);
}

MultiPrimeRank rank_multiprime(
    const std::function<SparseMatrix(const PrimeField&)>& build,
    const std::vector<std::uint32_t>& primes, const RankOptions& opt) {
  if (primes.empty()) throw argument_error("rank_multiprime: no primes given");
  MultiPrimeRank out;
  out.primes = primes;
  for (std::uint32_t p : primes) {
    PrimeField F(p);
    out.ranks.push_back(rank(build(F), F, opt));
  }
  out.agree = std::all_of(out.ranks.begin(), out.ranks.end(),
                          [&](std::uint64_t r) { return r == out.ranks[0]; });
  out.max_rank = *std::max_element(out.ranks.begin(), out.ranks.end());
  return out;
}

}  // namespace koszul
