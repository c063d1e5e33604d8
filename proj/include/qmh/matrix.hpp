#pragma once

// Sparse matrices over Q[q, q^-1]: exact (fraction-free) and modular rank,
// exact right-kernel bases.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qmh/laurent.hpp"
#include "qmh/modp.hpp"

namespace qmh {

class ScalarMatrix {
 public:
  using Row = std::map<std::size_t, LaurentPoly>;

  ScalarMatrix() = default;
  ScalarMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows) {}

  static ScalarMatrix identity(std::size_t n) {
    ScalarMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, LaurentPoly(1));
    return m;
  }

  static ScalarMatrix from_dense(const std::vector<std::vector<LaurentPoly>>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    ScalarMatrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("ScalarMatrix::from_dense: ragged rows");
      for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
  }

  std::size_t rows() const { return data_.size(); }
  std::size_t cols() const { return cols_; }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
  }
  bool is_zero() const { return nonzeros() == 0; }

  const Row& row(std::size_t r) const { return data_.at(r); }

  LaurentPoly at(std::size_t r, std::size_t c) const {
    check(r, c);
    auto it = data_[r].find(c);
    return it == data_[r].end() ? LaurentPoly{} : it->second;
  }

  void set(std::size_t r, std::size_t c, LaurentPoly v) {
    check(r, c);
    if (v.is_zero()) {
      data_[r].erase(c);
    } else {
      data_[r][c] = std::move(v);
    }
  }

  /// entry(r, c) += v
  void add(std::size_t r, std::size_t c, const LaurentPoly& v) {
    check(r, c);
    if (v.is_zero()) return;
    auto [it, inserted] = data_[r].try_emplace(c, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) data_[r].erase(it);
    }
  }

  friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("ScalarMatrix: shape mismatch in product");
    ScalarMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (const auto& [k, v] : a.data_[i])
        for (const auto& [j, w] : b.data_[k]) out.add(i, j, v * w);
    return out;
  }

  std::vector<std::vector<LaurentPoly>> to_dense() const {
    std::vector<std::vector<LaurentPoly>> d(rows(), std::vector<LaurentPoly>(cols_));
    for (std::size_t i = 0; i < rows(); ++i)
      for (const auto& [j, v] : data_[i]) d[i][j] = v;
    return d;
  }

 private:
  void check(std::size_t r, std::size_t c) const {
    if (r >= data_.size() || c >= cols_) throw std::out_of_range("ScalarMatrix: index out of range");
  }

  std::size_t cols_ = 0;
  std::vector<Row> data_;
};

enum class RankMode { exact, modular };

inline const char* to_string(RankMode m) { return m == RankMode::exact ? "exact" : "modular"; }

struct RankWitness {
  std::uint64_t prime;
  std::uint64_t q0;
  std::size_t rank;
};

struct RankResult {
  std::size_t rank = 0;
  RankMode mode = RankMode::exact;
  std::vector<RankWitness> witnesses;  // modular mode only
};

class RankDisagreement : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

struct Block {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

/// Connected components of the bipartite row/column incidence graph. The rank
/// of a matrix is the sum of the ranks of these blocks.
inline std::vector<Block> components(const ScalarMatrix& m) {
  const std::size_t R = m.rows();
  const std::size_t C = m.cols();
  std::vector<std::size_t> parent(R + C);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (std::size_t i = 0; i < R; ++i)
    for (const auto& [j, v] : m.row(i)) {
      std::size_t a = find(i);
      std::size_t b = find(R + j);
      if (a != b) parent[a] = b;
    }
  std::map<std::size_t, Block> by_root;
  for (std::size_t i = 0; i < R; ++i)
    if (!m.row(i).empty()) by_root[find(i)].rows.push_back(i);
  for (std::size_t j = 0; j < C; ++j) {
    auto it = by_root.find(find(R + j));
    if (it != by_root.end()) it->second.cols.push_back(j);
  }
  std::vector<Block> out;
  out.reserve(by_root.size());
  for (auto& [root, blk] : by_root) out.push_back(std::move(blk));
  return out;
}

/// Multiply each row by the q-power that makes its lowest exponent zero.
inline void normalize_rows(std::vector<std::vector<LaurentPoly>>& d) {
  for (auto& row : d) {
    bool any = false;
    int lo = 0;
    for (const auto& v : row) {
      if (v.is_zero()) continue;
      lo = any ? std::min(lo, v.min_exponent()) : v.min_exponent();
      any = true;
    }
    if (any && lo != 0)
      for (auto& v : row) v = v.shifted(-lo);
  }
}

/// Fraction-free elimination on a dense block. With `jordan` set, rows above
/// the pivot are cleared too, leaving every pivot equal to the last one.
/// Returns pivot (row, col) positions in elimination order; `d` is modified.
inline std::vector<std::pair<std::size_t, std::size_t>> bareiss(
    std::vector<std::vector<LaurentPoly>>& d, bool jordan) {
  const std::size_t R = d.size();
  const std::size_t C = R == 0 ? 0 : d.front().size();
  std::vector<bool> col_used(C, false);
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  LaurentPoly prev(1);
  for (std::size_t k = 0; k < R; ++k) {
    // Pivot: fewest terms, then lowest column, then lowest row.
    std::size_t best_r = R;
    std::size_t best_c = C;
    std::size_t best_t = 0;
    for (std::size_t j = 0; j < C; ++j) {
      if (col_used[j]) continue;
      for (std::size_t i = k; i < R; ++i) {
        const auto& v = d[i][j];
        if (v.is_zero()) continue;
        if (best_r == R || v.term_count() < best_t) {
          best_r = i;
          best_c = j;
          best_t = v.term_count();
        }
      }
      if (best_t == 1) break;
    }
    if (best_r == R) break;
    std::swap(d[k], d[best_r]);
    col_used[best_c] = true;
    pivots.emplace_back(k, best_c);
    const LaurentPoly piv = d[k][best_c];
    for (std::size_t i = jordan ? 0 : k + 1; i < R; ++i) {
      if (i == k) continue;
      const LaurentPoly factor = d[i][best_c];
      for (std::size_t j = 0; j < C; ++j) {
        if (j == best_c) continue;
        if (!jordan && col_used[j]) continue;
        LaurentPoly v = piv * d[i][j];
        if (!factor.is_zero() && !d[k][j].is_zero()) v -= factor * d[k][j];
        d[i][j] = prev.is_one() ? std::move(v) : divide_exact(v, prev);
      }
      d[i][best_c] = LaurentPoly{};
    }
    prev = piv;
  }
  return pivots;
}

inline std::size_t exact_block_rank(const ScalarMatrix& m, const Block& blk) {
  std::vector<std::vector<LaurentPoly>> d(blk.rows.size(), std::vector<LaurentPoly>(blk.cols.size()));
  std::map<std::size_t, std::size_t> col_pos;
  for (std::size_t j = 0; j < blk.cols.size(); ++j) col_pos[blk.cols[j]] = j;
  for (std::size_t i = 0; i < blk.rows.size(); ++i)
    for (const auto& [c, v] : m.row(blk.rows[i])) d[i][col_pos.at(c)] = v;
  normalize_rows(d);
  return bareiss(d, false).size();
}

/// Rank over F_p by incremental sparse echelon reduction.
inline std::size_t modular_block_rank(const ScalarMatrix& m, const Block& blk,
                                      const PrimeField& f, std::uint64_t q0) {
  const std::size_t C = blk.cols.size();
  std::map<std::size_t, std::size_t> col_pos;
  for (std::size_t j = 0; j < C; ++j) col_pos[blk.cols[j]] = j;

  using SparseRow = std::vector<std::pair<std::size_t, std::uint64_t>>;
  std::vector<SparseRow> rows;
  rows.reserve(blk.rows.size());
  for (std::size_t r : blk.rows) {
    SparseRow sr;
    for (const auto& [c, v] : m.row(r)) {
      std::uint64_t x = v.eval(f, q0);
      if (x != 0) sr.emplace_back(col_pos.at(c), x);
    }
    std::sort(sr.begin(), sr.end());
    if (!sr.empty()) rows.push_back(std::move(sr));
  }
  std::sort(rows.begin(), rows.end(),
            [](const SparseRow& a, const SparseRow& b) { return a.size() < b.size(); });

  std::vector<SparseRow> pivot_rows(C);  // leading coefficient normalized to 1
  std::vector<bool> has_pivot(C, false);
  std::vector<std::uint64_t> acc(C, 0);
  std::size_t rank = 0;
  for (const auto& sr : rows) {
    std::size_t lo = sr.front().first;
    std::size_t hi = 0;
    for (const auto& [c, x] : sr) {
      acc[c] = x;
      hi = std::max(hi, c);
    }
    for (std::size_t c = lo; c < C; ++c) {
      if (acc[c] == 0) continue;
      if (has_pivot[c]) {
        const std::uint64_t t = acc[c];
        for (const auto& [pc, pv] : pivot_rows[c]) acc[pc] = f.sub(acc[pc], f.mul(t, pv));
        continue;
      }
      const std::uint64_t inv = f.inv(acc[c]);
      SparseRow piv;
      for (std::size_t j = c; j < C; ++j)
        if (acc[j] != 0) {
          piv.emplace_back(j, f.mul(acc[j], inv));
          acc[j] = 0;
        }
      pivot_rows[c] = std::move(piv);
      has_pivot[c] = true;
      ++rank;
      break;
    }
    std::fill(acc.begin(), acc.end(), 0);
    (void)hi;
  }
  return rank;
}

}  // namespace detail

/// Exact rank over the fraction field Q(q).
inline RankResult matrix_rank_exact(const ScalarMatrix& m) {
  RankResult r;
  r.mode = RankMode::exact;
  for (const auto& blk : detail::components(m)) r.rank += detail::exact_block_rank(m, blk);
  return r;
}

/// Rank at a single specialization q = q0 in F_p.
inline std::size_t matrix_rank_at(const ScalarMatrix& m, const PrimeField& f, std::uint64_t q0) {
  std::size_t rank = 0;
  for (const auto& blk : detail::components(m)) rank += detail::modular_block_rank(m, blk, f, q0);
  return rank;
}

/// Rank at `witnesses` independent random specializations; all must agree.
inline RankResult matrix_rank_modular(const ScalarMatrix& m, std::mt19937_64& rng, int witnesses = 2) {
  if (witnesses < 1) throw std::invalid_argument("matrix_rank_modular: need at least one witness");
  static constexpr std::uint64_t primes[] = {kMersenne61, kPrime32};
  RankResult r;
  r.mode = RankMode::modular;
  for (int w = 0; w < witnesses; ++w) {
    PrimeField f(primes[static_cast<std::size_t>(w) % 2]);
    std::uniform_int_distribution<std::uint64_t> dist(2, f.p() - 1);
    const std::uint64_t q0 = dist(rng);
    r.witnesses.push_back({f.p(), q0, matrix_rank_at(m, f, q0)});
  }
  r.rank = r.witnesses.front().rank;
  for (const auto& w : r.witnesses)
    if (w.rank != r.rank)
      throw RankDisagreement("modular rank: specializations disagree (" + std::to_string(r.rank) +
                             " vs " + std::to_string(w.rank) + ")");
  return r;
}

inline RankResult matrix_rank(const ScalarMatrix& m, RankMode mode, std::uint64_t seed = 0x5eed) {
  if (mode == RankMode::exact) return matrix_rank_exact(m);
  std::mt19937_64 rng(seed);
  return matrix_rank_modular(m, rng);
}

/// Basis of the right kernel over Q(q), denominators cleared. Exact only.
inline std::vector<std::vector<LaurentPoly>> kernel_basis(const ScalarMatrix& m) {
  auto d = m.to_dense();
  detail::normalize_rows(d);
  const auto pivots = detail::bareiss(d, true);
  std::vector<std::size_t> pivot_row_of_col(m.cols(), m.rows());
  for (const auto& [r, c] : pivots) pivot_row_of_col[c] = r;
  const LaurentPoly det = pivots.empty() ? LaurentPoly(1) : d[pivots.back().first][pivots.back().second];

  std::vector<std::vector<LaurentPoly>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (pivot_row_of_col[f] != m.rows()) continue;
    std::vector<LaurentPoly> v(m.cols());
    v[f] = det;
    for (const auto& [r, c] : pivots) v[c] = -d[r][f];
    // Strip the common q-power.
    int lo = 0;
    bool any = false;
    for (const auto& x : v)
      if (!x.is_zero()) {
        lo = any ? std::min(lo, x.min_exponent()) : x.min_exponent();
        any = true;
      }
    for (auto& x : v) x = x.shifted(-lo);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace qmh
