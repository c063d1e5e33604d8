#pragma once

// Finite-dimensional algebras over Q given by structure constants, their
// modules and bimodules, the mapping cylinder Z = P (+) Q of a morphism
// phi: Q -> P, and exact Hochschild homology / Tor from normalized complexes.

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qmh/laurent.hpp"
#include "qmh/matrix.hpp"
#include "qmh/oracle.hpp"

namespace qmh {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;  // row-major; column c is the image of basis vector c

inline QVec unit_vector(std::size_t d, std::size_t i) {
  QVec v(d, Rational(0));
  v.at(i) = 1;
  return v;
}

inline QMat identity_qmat(std::size_t d) {
  QMat m(d, QVec(d, Rational(0)));
  for (std::size_t i = 0; i < d; ++i) m[i][i] = 1;
  return m;
}

inline QVec apply(const QMat& m, const QVec& v) {
  QVec out(m.size(), Rational(0));
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c)
      if (v[c] != 0 && m[r][c] != 0) out[r] += m[r][c] * v[c];
  return out;
}

inline QMat compose(const QMat& a, const QMat& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b.front().size();
  QMat out(a.size(), QVec(cols, Rational(0)));
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t k = 0; k < inner; ++k)
      if (a[r][k] != 0)
        for (std::size_t c = 0; c < cols; ++c) out[r][c] += a[r][k] * b[k][c];
  return out;
}

class FinDimAlgebra {
 public:
  /// table[i][j] is the coordinate vector of e_i e_j.
  FinDimAlgebra(std::vector<std::string> labels, std::vector<std::vector<QVec>> table, QVec unit)
      : labels_(std::move(labels)), table_(std::move(table)), unit_(std::move(unit)) {
    validate();
  }

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const QVec& unit() const { return unit_; }
  const QVec& product(std::size_t i, std::size_t j) const { return table_.at(i).at(j); }
  const std::vector<std::vector<QVec>>& table() const { return table_; }

  QVec multiply(const QVec& a, const QVec& b) const {
    QVec out(dim(), Rational(0));
    for (std::size_t i = 0; i < dim(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (b[j] == 0) continue;
        const Rational s = a[i] * b[j];
        const QVec& e = table_[i][j];
        for (std::size_t k = 0; k < dim(); ++k)
          if (e[k] != 0) out[k] += s * e[k];
      }
    }
    return out;
  }

  /// A basis index whose vector, together with the unit, can be dropped to
  /// span a complement of the unit line.
  std::size_t unit_pivot() const {
    for (std::size_t k = 0; k < dim(); ++k)
      if (unit_[k] != 0) return k;
    throw std::logic_error("FinDimAlgebra: zero unit");
  }

  static FinDimAlgebra ground_field() { return FinDimAlgebra({"1"}, {{QVec{Rational(1)}}}, QVec{Rational(1)}); }

  /// k[x]/x^k with basis 1, x, ..., x^{k-1}.
  static FinDimAlgebra truncated_polynomial(int k, const std::string& var = "x") {
    if (k < 1) throw std::invalid_argument("truncated_polynomial: k < 1");
    const auto d = static_cast<std::size_t>(k);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < d; ++i)
      labels.push_back(i == 0 ? std::string("1") : i == 1 ? var : var + "^" + std::to_string(i));
    std::vector<std::vector<QVec>> table(d, std::vector<QVec>(d, QVec(d, Rational(0))));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; i + j < d; ++j) table[i][j][i + j] = 1;
    return FinDimAlgebra(std::move(labels), std::move(table), unit_vector(d, 0));
  }

 private:
  void validate() const {
    const std::size_t d = dim();
    if (d == 0) throw std::invalid_argument("FinDimAlgebra: empty basis");
    if (table_.size() != d || unit_.size() != d) throw std::invalid_argument("FinDimAlgebra: shape mismatch");
    for (const auto& row : table_) {
      if (row.size() != d) throw std::invalid_argument("FinDimAlgebra: shape mismatch");
      for (const auto& v : row)
        if (v.size() != d) throw std::invalid_argument("FinDimAlgebra: shape mismatch");
    }
    for (std::size_t i = 0; i < d; ++i) {
      const QVec e = unit_vector(d, i);
      if (multiply(unit_, e) != e || multiply(e, unit_) != e)
        throw std::invalid_argument("FinDimAlgebra: unit law fails on " + labels_[i]);
    }
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k)
          if (multiply(table_[i][j], unit_vector(d, k)) != multiply(unit_vector(d, i), table_[j][k]))
            throw std::invalid_argument("FinDimAlgebra: not associative on (" + labels_[i] + "," + labels_[j] +
                                        "," + labels_[k] + ")");
  }

  std::vector<std::string> labels_;
  std::vector<std::vector<QVec>> table_;
  QVec unit_;
};

/// Linear map A -> B as a dim B x dim A matrix.
struct AlgebraMap {
  QMat matrix;

  QVec operator()(const QVec& a) const { return apply(matrix, a); }
};

inline void check_algebra_map(const FinDimAlgebra& src, const FinDimAlgebra& dst, const AlgebraMap& f) {
  if (f.matrix.size() != dst.dim()) throw std::invalid_argument("algebra map: wrong number of rows");
  for (const auto& row : f.matrix)
    if (row.size() != src.dim()) throw std::invalid_argument("algebra map: wrong number of columns");
  if (f(src.unit()) != dst.unit()) throw std::invalid_argument("algebra map: not unital");
  for (std::size_t i = 0; i < src.dim(); ++i)
    for (std::size_t j = 0; j < src.dim(); ++j) {
      const QVec ei = unit_vector(src.dim(), i);
      const QVec ej = unit_vector(src.dim(), j);
      if (f(src.multiply(ei, ej)) != dst.multiply(f(ei), f(ej)))
        throw std::invalid_argument("algebra map: not multiplicative");
    }
}

enum class Side { left, right };

/// One-sided module; action[a] is the matrix of the basis element e_a.
struct FinDimModule {
  Side side = Side::left;
  std::size_t dim = 0;
  std::vector<QMat> action;

  QVec act(const QVec& a, const QVec& m) const {
    QVec out(dim, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != 0) {
        const QVec t = apply(action[i], m);
        for (std::size_t k = 0; k < dim; ++k) out[k] += a[i] * t[k];
      }
    return out;
  }
};

struct FinDimBimodule {
  std::size_t dim = 0;
  std::vector<QMat> left;   // a . m
  std::vector<QMat> right;  // m . a
};

namespace detail {

inline QMat action_of(const std::vector<QMat>& act, const QVec& a, std::size_t dim) {
  QMat out(dim, QVec(dim, Rational(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) out[r][c] += a[i] * act[i][r][c];
  return out;
}

inline void check_action(const FinDimAlgebra& A, const std::vector<QMat>& act, std::size_t dim, Side side) {
  if (act.size() != A.dim()) throw std::invalid_argument("module: one action matrix per basis element required");
  for (const auto& m : act) {
    if (m.size() != dim) throw std::invalid_argument("module: action matrix shape");
    for (const auto& row : m)
      if (row.size() != dim) throw std::invalid_argument("module: action matrix shape");
  }
  if (action_of(act, A.unit(), dim) != identity_qmat(dim)) throw std::invalid_argument("module: unit does not act as 1");
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j) {
      const QMat ab = action_of(act, A.product(i, j), dim);
      // left: (ab).m = a.(b.m); right: m.(ab) = (m.a).b
      const QMat expect = side == Side::left ? compose(act[i], act[j]) : compose(act[j], act[i]);
      if (ab != expect) throw std::invalid_argument("module: action is not compatible with the product");
    }
}

}  // namespace detail

inline FinDimModule make_module(const FinDimAlgebra& A, Side side, std::vector<QMat> action) {
  const std::size_t dim = action.empty() ? 0 : action.front().size();
  detail::check_action(A, action, dim, side);
  return {side, dim, std::move(action)};
}

inline FinDimBimodule make_bimodule(const FinDimAlgebra& A, std::vector<QMat> left, std::vector<QMat> right) {
  const std::size_t dim = left.empty() ? 0 : left.front().size();
  detail::check_action(A, left, dim, Side::left);
  detail::check_action(A, right, dim, Side::right);
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j)
      if (compose(left[i], right[j]) != compose(right[j], left[i]))
        throw std::invalid_argument("bimodule: left and right actions do not commute");
  return {dim, std::move(left), std::move(right)};
}

/// Matrices of left and right multiplication by each basis element.
inline std::vector<QMat> regular_action(const FinDimAlgebra& A, Side side) {
  std::vector<QMat> out;
  for (std::size_t a = 0; a < A.dim(); ++a) {
    QMat m(A.dim(), QVec(A.dim(), Rational(0)));
    for (std::size_t c = 0; c < A.dim(); ++c) {
      const QVec& v = side == Side::left ? A.product(a, c) : A.product(c, a);
      for (std::size_t r = 0; r < A.dim(); ++r) m[r][c] = v[r];
    }
    out.push_back(std::move(m));
  }
  return out;
}

inline FinDimModule regular_module(const FinDimAlgebra& A, Side side) {
  return make_module(A, side, regular_action(A, side));
}

inline FinDimBimodule regular_bimodule(const FinDimAlgebra& A) {
  return make_bimodule(A, regular_action(A, Side::left), regular_action(A, Side::right));
}

/// One-dimensional module through a character chi (values on the basis).
inline std::vector<QMat> character_action(const QVec& chi) {
  std::vector<QMat> out;
  for (const auto& v : chi) out.push_back(QMat{QVec{v}});
  return out;
}

inline FinDimModule character_module(const FinDimAlgebra& A, Side side, const QVec& chi) {
  return make_module(A, side, character_action(chi));
}

inline FinDimBimodule character_bimodule(const FinDimAlgebra& A, const QVec& left, const QVec& right) {
  return make_bimodule(A, character_action(left), character_action(right));
}

/// Pull a module back along f: A -> B.
inline FinDimModule restrict_module(const FinDimAlgebra& A, const FinDimModule& M, const AlgebraMap& f) {
  std::vector<QMat> act;
  for (std::size_t i = 0; i < A.dim(); ++i)
    act.push_back(detail::action_of(M.action, f(unit_vector(A.dim(), i)), M.dim));
  return make_module(A, M.side, std::move(act));
}

inline FinDimBimodule restrict_bimodule(const FinDimAlgebra& A, const FinDimBimodule& M, const AlgebraMap& f) {
  std::vector<QMat> l, r;
  for (std::size_t i = 0; i < A.dim(); ++i) {
    const QVec fi = f(unit_vector(A.dim(), i));
    l.push_back(detail::action_of(M.left, fi, M.dim));
    r.push_back(detail::action_of(M.right, fi, M.dim));
  }
  return make_bimodule(A, std::move(l), std::move(r));
}

// ---------------------------------------------------------------------------
// Mapping cylinder

/// Z = P (+) Q with (p,q)(p',q') = (pp' + p phi(q') + phi(q) p', qq') and unit (0,1).
/// Basis: P's basis followed by Q's.
inline FinDimAlgebra mapping_cylinder(const FinDimAlgebra& P, const FinDimAlgebra& Q, const AlgebraMap& phi) {
  check_algebra_map(Q, P, phi);
  const std::size_t dp = P.dim(), dq = Q.dim(), d = dp + dq;
  auto embed_p = [&](const QVec& p) {
    QVec v(d, Rational(0));
    for (std::size_t k = 0; k < dp; ++k) v[k] = p[k];
    return v;
  };
  std::vector<std::string> labels;
  for (const auto& l : P.labels()) labels.push_back("(" + l + ",0)");
  for (const auto& l : Q.labels()) labels.push_back("(0," + l + ")");
  std::vector<std::vector<QVec>> table(d, std::vector<QVec>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const bool ip = i < dp, jp = j < dp;
      if (ip && jp) {
        table[i][j] = embed_p(P.product(i, j));
      } else if (ip) {
        table[i][j] = embed_p(P.multiply(unit_vector(dp, i), phi(unit_vector(dq, j - dp))));
      } else if (jp) {
        table[i][j] = embed_p(P.multiply(phi(unit_vector(dq, i - dp)), unit_vector(dp, j)));
      } else {
        QVec v(d, Rational(0));
        const QVec& w = Q.product(i - dp, j - dp);
        for (std::size_t k = 0; k < dq; ++k) v[dp + k] = w[k];
        table[i][j] = std::move(v);
      }
    }
  QVec unit(d, Rational(0));
  for (std::size_t k = 0; k < dq; ++k) unit[dp + k] = Q.unit()[k];
  return FinDimAlgebra(std::move(labels), std::move(table), std::move(unit));
}

/// The algebra map Z -> P, (p,q) -> p + phi(q).
inline AlgebraMap cylinder_projection(const FinDimAlgebra& P, const FinDimAlgebra& Q, const AlgebraMap& phi) {
  QMat m(P.dim(), QVec(P.dim() + Q.dim(), Rational(0)));
  for (std::size_t r = 0; r < P.dim(); ++r) {
    m[r][r] = 1;
    for (std::size_t c = 0; c < Q.dim(); ++c) m[r][P.dim() + c] = phi.matrix[r][c];
  }
  return {m};
}

// ---------------------------------------------------------------------------
// Normalized complexes

namespace detail {

/// Coordinates on A / k.1 using the basis vectors other than the unit pivot.
struct UnitComplement {
  const FinDimAlgebra* A;
  std::size_t pivot;
  std::vector<std::size_t> basis;  // indices of A's basis kept

  explicit UnitComplement(const FinDimAlgebra& alg) : A(&alg), pivot(alg.unit_pivot()) {
    for (std::size_t k = 0; k < alg.dim(); ++k)
      if (k != pivot) basis.push_back(k);
  }

  std::size_t size() const { return basis.size(); }

  /// Image of v in the quotient, as coordinates over `basis`.
  QVec project(const QVec& v) const {
    const Rational t = v[pivot] / A->unit()[pivot];
    QVec out;
    for (std::size_t k : basis) out.push_back(v[k] - t * A->unit()[k]);
    return out;
  }
};

/// Mixed-radix index of (m, i_1, ..., i_p, y) with radices (dm, dbar, ..., dbar, dy).
struct TensorIndexer {
  std::size_t dm, dbar, dy;

  std::size_t count(int p) const {
    std::size_t n = dm * dy;
    for (int k = 0; k < p; ++k) n *= dbar;
    return n;
  }
  std::size_t encode(std::size_t m, const std::vector<std::size_t>& bars, std::size_t y) const {
    std::size_t idx = m;
    for (std::size_t b : bars) idx = idx * dbar + b;
    return idx * dy + y;
  }
  void decode(std::size_t idx, int p, std::size_t& m, std::vector<std::size_t>& bars, std::size_t& y) const {
    y = idx % dy;
    idx /= dy;
    bars.assign(static_cast<std::size_t>(p), 0);
    for (int k = p - 1; k >= 0; --k) {
      bars[static_cast<std::size_t>(k)] = idx % dbar;
      idx /= dbar;
    }
    m = idx;
  }
};

using OuterFace = std::function<void(std::size_t m, std::size_t bar, std::size_t y,
                                     const std::function<void(std::size_t, std::size_t, const Rational&)>& emit)>;

/// Boundary C_p -> C_{p-1} of a two-sided bar-type complex. `first` absorbs
/// a_1 into the left coefficient, `last` absorbs a_p into the right one.
inline ScalarMatrix bar_boundary(const UnitComplement& bar, const TensorIndexer& ix, int p, const OuterFace& first,
                                 const OuterFace& last) {
  const FinDimAlgebra& A = *bar.A;
  ScalarMatrix b(ix.count(p - 1), ix.count(p));
  std::vector<std::size_t> bars, face;
  std::size_t m = 0, y = 0;
  for (std::size_t col = 0; col < ix.count(p); ++col) {
    ix.decode(col, p, m, bars, y);
    face.assign(bars.begin() + 1, bars.end());
    first(m, bars.front(), y, [&](std::size_t m2, std::size_t y2, const Rational& c) {
      b.add(ix.encode(m2, face, y2), col, LaurentPoly(c));
    });
    for (int i = 1; i < p; ++i) {
      const auto k = static_cast<std::size_t>(i);
      const QVec prod = bar.project(A.product(bar.basis[bars[k - 1]], bar.basis[bars[k]]));
      const Rational sign = i % 2 == 0 ? 1 : -1;
      for (std::size_t t = 0; t < prod.size(); ++t) {
        if (prod[t] == 0) continue;
        face.assign(bars.begin(), bars.end());
        face[k - 1] = t;
        face.erase(face.begin() + i);
        b.add(ix.encode(m, face, y), col, LaurentPoly(Rational(sign * prod[t])));
      }
    }
    face.assign(bars.begin(), bars.end() - 1);
    const Rational sign = p % 2 == 0 ? 1 : -1;
    last(m, bars.back(), y, [&](std::size_t m2, std::size_t y2, const Rational& c) {
      b.add(ix.encode(m2, face, y2), col, LaurentPoly(Rational(sign * c)));
    });
  }
  return b;
}

inline std::vector<long long> homology_dims(const TensorIndexer& ix, int pmax,
                                            const std::function<ScalarMatrix(int)>& boundary) {
  std::vector<std::size_t> rank(static_cast<std::size_t>(pmax) + 2, 0);
  for (int p = 1; p <= pmax + 1; ++p) rank[static_cast<std::size_t>(p)] = matrix_rank_exact(boundary(p)).rank;
  std::vector<long long> dims;
  for (int p = 0; p <= pmax; ++p)
    dims.push_back(static_cast<long long>(ix.count(p)) - static_cast<long long>(rank[static_cast<std::size_t>(p)]) -
                   static_cast<long long>(rank[static_cast<std::size_t>(p) + 1]));
  return dims;
}

inline HomologyReport exact_report(std::string algebra, std::string coefficients, int pmax,
                                   std::vector<long long> dims) {
  HomologyReport r;
  r.algebra = std::move(algebra);
  r.coefficients = std::move(coefficients);
  r.pmax = pmax;
  r.dims = std::move(dims);
  r.stable.assign(r.dims.size(), true);
  r.mode = ArithmeticMode::exact;
  return r;
}

}  // namespace detail

/// Boundary of the normalized Hochschild complex M (x) Abar^{(x)p}.
inline ScalarMatrix findim_hochschild_boundary(const FinDimAlgebra& A, const FinDimBimodule& M, int p) {
  if (p < 1) throw std::invalid_argument("findim_hochschild_boundary: p < 1");
  const detail::UnitComplement bar(A);
  const detail::TensorIndexer ix{M.dim, bar.size(), 1};
  auto column = [&](const std::vector<QMat>& act, std::size_t a, std::size_t m, const auto& emit) {
    for (std::size_t r = 0; r < M.dim; ++r)
      if (act[a][r][m] != 0) emit(r, 0, act[a][r][m]);
  };
  return detail::bar_boundary(
      bar, ix, p,
      [&](std::size_t m, std::size_t a, std::size_t, const auto& emit) { column(M.right, bar.basis[a], m, emit); },
      [&](std::size_t m, std::size_t a, std::size_t, const auto& emit) { column(M.left, bar.basis[a], m, emit); });
}

inline HomologyReport findim_hochschild(const FinDimAlgebra& A, const FinDimBimodule& M, int pmax) {
  if (pmax < 0) throw std::invalid_argument("findim_hochschild: pmax < 0");
  const detail::TensorIndexer ix{M.dim, detail::UnitComplement(A).size(), 1};
  auto dims = detail::homology_dims(ix, pmax, [&](int p) { return findim_hochschild_boundary(A, M, p); });
  return detail::exact_report("dim " + std::to_string(A.dim()) + " algebra",
                              "bimodule of dim " + std::to_string(M.dim), pmax, std::move(dims));
}

/// Boundary of the normalized bar complex X (x) Abar^{(x)p} (x) Y.
inline ScalarMatrix findim_tor_boundary(const FinDimAlgebra& A, const FinDimModule& X, const FinDimModule& Y, int p) {
  if (p < 1) throw std::invalid_argument("findim_tor_boundary: p < 1");
  if (X.side != Side::right || Y.side != Side::left)
    throw std::invalid_argument("findim_tor: need a right module and a left module");
  const detail::UnitComplement bar(A);
  const detail::TensorIndexer ix{X.dim, bar.size(), Y.dim};
  return detail::bar_boundary(
      bar, ix, p,
      [&](std::size_t x, std::size_t a, std::size_t y, const auto& emit) {
        const QMat& act = X.action[bar.basis[a]];
        for (std::size_t r = 0; r < X.dim; ++r)
          if (act[r][x] != 0) emit(r, y, act[r][x]);
      },
      [&](std::size_t x, std::size_t a, std::size_t y, const auto& emit) {
        const QMat& act = Y.action[bar.basis[a]];
        for (std::size_t r = 0; r < Y.dim; ++r)
          if (act[r][y] != 0) emit(x, r, act[r][y]);
      });
}

inline std::vector<long long> findim_tor(const FinDimAlgebra& A, const FinDimModule& X, const FinDimModule& Y,
                                         int pmax) {
  if (pmax < 0) throw std::invalid_argument("findim_tor: pmax < 0");
  const detail::TensorIndexer ix{X.dim, detail::UnitComplement(A).size(), Y.dim};
  return detail::homology_dims(ix, pmax, [&](int p) { return findim_tor_boundary(A, X, Y, p); });
}

// ---------------------------------------------------------------------------
// Cylinder demos: Z versus P on a corpus of modules

struct CylinderCase {
  std::string label;
  FinDimAlgebra Q;
  AlgebraMap phi;
};

struct NamedBimodule {
  std::string name;
  FinDimBimodule module;  // over P
};

struct NamedTorPair {
  std::string name;
  FinDimModule right;  // over P
  FinDimModule left;   // over P
};

struct CylinderDemo {
  std::string name;
  std::string description;
  FinDimAlgebra P;
  std::vector<CylinderCase> cases;
  std::vector<NamedBimodule> bimodules;
  std::vector<NamedTorPair> tor;
};

struct CylinderCheck {
  std::string cylinder;
  std::string kind;  // "hochschild" or "tor"
  std::string coefficients;
  std::vector<long long> over_Z;
  std::vector<long long> over_P;
  bool agree() const { return over_Z == over_P; }
};

inline std::vector<CylinderCheck> run_cylinder_demo(const CylinderDemo& demo, int pmax) {
  std::vector<CylinderCheck> out;
  for (const auto& c : demo.cases) {
    const FinDimAlgebra Z = mapping_cylinder(demo.P, c.Q, c.phi);
    const AlgebraMap pi = cylinder_projection(demo.P, c.Q, c.phi);
    for (const auto& m : demo.bimodules)
      out.push_back({c.label, "hochschild", m.name, findim_hochschild(Z, restrict_bimodule(Z, m.module, pi), pmax).dims,
                     findim_hochschild(demo.P, m.module, pmax).dims});
    for (const auto& t : demo.tor)
      out.push_back({c.label, "tor", t.name,
                     findim_tor(Z, restrict_module(Z, t.right, pi), restrict_module(Z, t.left, pi), pmax),
                     findim_tor(demo.P, t.right, t.left, pmax)});
  }
  return out;
}

}  // namespace qmh
