#pragma once

// Brute-force Hochschild homology of M_q(n, m) with one-dimensional
// coefficients, from the normalized complex truncated at total degree D.
//
// Chains of length p are p-tuples of positive-degree ordered monomials. With
// coefficient module k (left action by a character, right action by another),
//
//   b(a_1 | ... | a_p) = right(a_1) (a_2 | ... | a_p)
//                      + sum_{i=1}^{p-1} (-1)^i (... | a_i a_{i+1} | ...)
//                      + (-1)^p left(a_p) (a_1 | ... | a_{p-1}).
//
// Inner faces preserve total degree and outer faces lower it, so the chains of
// total degree <= D form a subcomplex. Dimensions are reported per cap, and a
// degree is flagged stable when two successive caps agree.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qmh/engine.hpp"
#include "qmh/matrix.hpp"
#include "qmh/qma.hpp"

namespace qmh {

class ResourceGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One-dimensional bimodule: x acts on the left by `left(x)`, on the right by `right(x)`.
struct CoefficientModule {
  Character left;
  Character right;

  /// Left action by c; right action by the counit, or by eta when c is eta.
  static CoefficientModule from_character(const Character& c) {
    if (c.is_eta()) return {c, Character::eta(c.n)};
    return {c, Character::epsilon(c.n)};
  }
};

enum class ArithmeticMode { exact, modular, automatic };

inline const char* to_string(ArithmeticMode m) {
  switch (m) {
    case ArithmeticMode::exact: return "exact";
    case ArithmeticMode::modular: return "modular";
    case ArithmeticMode::automatic: return "auto";
  }
  return "?";
}

struct OracleLimits {
  std::size_t max_nonzeros = 5'000'000;
  std::size_t exact_chain_limit = 20'000;  // automatic mode: exact below this many chains
  int witnesses = 2;
  std::uint64_t seed = 0x5eed;
};

/// Normalized chains of lengths 0..pmax with total degree <= D.
class ChainBasis {
 public:
  ChainBasis(Signature s, int D, int pmax) : sig_(s), cap_(D) {
    if (D < 0 || pmax < 0) throw std::invalid_argument("ChainBasis: negative cap or length");
    monomials_.push_back({});  // id 0 unused: ids start at 1
    degree_.push_back(0);
    for (int d = 1; d <= D; ++d)
      for (auto& m : monomials_of_degree(s, d)) {
        id_of_[m] = static_cast<int>(monomials_.size());
        monomials_.push_back(std::move(m));
        degree_.push_back(d);
      }
    chains_.resize(static_cast<std::size_t>(pmax) + 1);
    index_.resize(static_cast<std::size_t>(pmax) + 1);
    std::vector<int> cur;
    for (int p = 0; p <= pmax; ++p) {
      cur.clear();
      fill(p, D, cur);
    }
  }

  const Signature& signature() const { return sig_; }
  int cap() const { return cap_; }
  int max_length() const { return static_cast<int>(chains_.size()) - 1; }

  std::size_t size(int p) const { return chains_.at(static_cast<std::size_t>(p)).size(); }
  const std::vector<int>& chain(int p, std::size_t k) const { return chains_.at(static_cast<std::size_t>(p))[k]; }
  const Monomial& monomial(int id) const { return monomials_.at(static_cast<std::size_t>(id)); }
  int monomial_id(const Monomial& m) const { return id_of_.at(m); }
  int degree(int id) const { return degree_.at(static_cast<std::size_t>(id)); }

  std::size_t index(int p, const std::vector<int>& chain) const {
    return index_.at(static_cast<std::size_t>(p)).at(chain);
  }

 private:
  struct Hash {
    std::size_t operator()(const std::vector<int>& v) const {
      std::size_t h = v.size();
      for (int x : v) h = h * 1000003u ^ static_cast<std::size_t>(x);
      return h;
    }
  };

  void fill(int p, int budget, std::vector<int>& cur) {
    if (static_cast<int>(cur.size()) == p) {
      auto& list = chains_[static_cast<std::size_t>(p)];
      index_[static_cast<std::size_t>(p)][cur] = list.size();
      list.push_back(cur);
      return;
    }
    const int left = p - static_cast<int>(cur.size()) - 1;  // factors still needed after this one
    for (std::size_t id = 1; id < monomials_.size(); ++id) {
      if (degree_[id] + left > budget) continue;
      cur.push_back(static_cast<int>(id));
      fill(p, budget - degree_[id], cur);
      cur.pop_back();
    }
  }

  Signature sig_;
  int cap_;
  std::vector<Monomial> monomials_;
  std::vector<int> degree_;
  std::map<Monomial, int> id_of_;
  std::vector<std::vector<std::vector<int>>> chains_;
  std::vector<std::unordered_map<std::vector<int>, std::size_t, Hash>> index_;
};

/// Matrix of b: C_p -> C_{p-1} on a chain basis.
inline ScalarMatrix build_boundary(const ChainBasis& basis, const CoefficientModule& coeff, int p) {
  if (p < 1 || p > basis.max_length()) throw std::invalid_argument("build_boundary: p out of range");
  const Signature s = basis.signature();
  if (coeff.left.n != s.rows || coeff.right.n != s.rows)
    throw std::invalid_argument("build_boundary: character size does not match the signature");
  auto& alg = QuantumMatrixAlgebra::shared(s);
  ScalarMatrix b(basis.size(p - 1), basis.size(p));
  std::vector<int> face;
  for (std::size_t col = 0; col < basis.size(p); ++col) {
    const std::vector<int>& c = basis.chain(p, col);
    // First face: right action of a_1.
    if (const LaurentPoly r = coeff.right.on_monomial(s, basis.monomial(c.front())); !r.is_zero()) {
      face.assign(c.begin() + 1, c.end());
      b.add(basis.index(p - 1, face), col, r);
    }
    for (int i = 1; i < p; ++i) {
      const LaurentPoly sign(i % 2 == 0 ? 1 : -1);
      const NCElement prod = alg.multiply_monomials(basis.monomial(c[static_cast<std::size_t>(i - 1)]),
                                                    basis.monomial(c[static_cast<std::size_t>(i)]));
      for (const auto& [m, k] : prod.terms()) {
        face.assign(c.begin(), c.end());
        face[static_cast<std::size_t>(i - 1)] = basis.monomial_id(m);
        face.erase(face.begin() + i);
        b.add(basis.index(p - 1, face), col, sign * k);
      }
    }
    if (const LaurentPoly l = coeff.left.on_monomial(s, basis.monomial(c.back())); !l.is_zero()) {
      face.assign(c.begin(), c.end() - 1);
      b.add(basis.index(p - 1, face), col, p % 2 == 0 ? l : -l);
    }
  }
  return b;
}

struct HomologyReport {
  std::string algebra;       // e.g. "M_q(2,2)"
  std::string coefficients;  // e.g. "left q^(1,-1), right eps"
  int pmax = 0;
  std::vector<int> caps;                          // ascending; empty for untruncated complexes
  std::map<int, std::vector<long long>> dims_by_cap;
  std::vector<long long> dims;                    // at the largest cap
  std::vector<bool> stable;                       // per degree
  std::vector<std::size_t> chain_counts;          // at the largest cap, lengths 0..pmax+1
  ArithmeticMode mode = ArithmeticMode::exact;
  std::vector<RankWitness> witnesses;
};

namespace detail {

inline std::string describe(const Character& c) {
  if (c.is_eta()) return "eta";
  std::string s = "q^(";
  for (std::size_t i = 0; i < c.exponents.size(); ++i) s += (i ? "," : "") + std::to_string(c.exponents[i]);
  return s + ")";
}

inline std::size_t rank_of(const ScalarMatrix& m, ArithmeticMode mode, std::mt19937_64& rng, int witnesses,
                           std::vector<RankWitness>& log) {
  if (mode == ArithmeticMode::exact) return matrix_rank_exact(m).rank;
  const RankResult r = matrix_rank_modular(m, rng, witnesses);
  log.insert(log.end(), r.witnesses.begin(), r.witnesses.end());
  return r.rank;
}

/// dims[p] for p <= pmax at one cap.
inline std::vector<long long> homology_at_cap(Signature s, const CoefficientModule& coeff, int D, int pmax,
                                              ArithmeticMode mode, const OracleLimits& limits,
                                              std::mt19937_64& rng, std::vector<RankWitness>& log,
                                              std::vector<std::size_t>* counts) {
  const ChainBasis basis(s, D, pmax + 1);
  std::vector<std::size_t> rank(static_cast<std::size_t>(pmax) + 2, 0);
  std::size_t nonzeros = 0;
  for (int p = 1; p <= pmax + 1; ++p) {
    const ScalarMatrix b = build_boundary(basis, coeff, p);
    nonzeros += b.nonzeros();
    if (nonzeros > limits.max_nonzeros)
      throw ResourceGuardError("oracle: boundary matrices exceed " + std::to_string(limits.max_nonzeros) +
                               " nonzero entries");
    rank[static_cast<std::size_t>(p)] = rank_of(b, mode, rng, limits.witnesses, log);
  }
  std::vector<long long> dims;
  for (int p = 0; p <= pmax; ++p)
    dims.push_back(static_cast<long long>(basis.size(p)) - static_cast<long long>(rank[static_cast<std::size_t>(p)]) -
                   static_cast<long long>(rank[static_cast<std::size_t>(p) + 1]));
  if (counts) {
    counts->clear();
    for (int p = 0; p <= pmax + 1; ++p) counts->push_back(basis.size(p));
  }
  return dims;
}

inline std::size_t total_chains(Signature s, int D, int pmax) {
  const ChainBasis basis(s, D, pmax + 1);
  std::size_t t = 0;
  for (int p = 0; p <= pmax + 1; ++p) t += basis.size(p);
  return t;
}

}  // namespace detail

/// Homology at each of the given caps (ascending), stability from the last two.
inline HomologyReport truncated_homology_caps(Signature s, const CoefficientModule& coeff, std::vector<int> caps,
                                              int pmax, ArithmeticMode mode, const OracleLimits& limits = {}) {
  if (caps.empty()) throw std::invalid_argument("truncated_homology: no caps");
  if (pmax < 0) throw std::invalid_argument("truncated_homology: pmax < 0");
  std::sort(caps.begin(), caps.end());
  HomologyReport rep;
  rep.algebra = "M_q(" + std::to_string(s.rows) + "," + std::to_string(s.cols) + ")";
  rep.coefficients = "left " + detail::describe(coeff.left) + ", right " +
                     (coeff.right.is_eta() ? std::string("eta") : coeff.right == Character::epsilon(coeff.right.n)
                                                                       ? std::string("eps")
                                                                       : detail::describe(coeff.right));
  rep.pmax = pmax;
  rep.caps = caps;
  if (mode == ArithmeticMode::automatic)
    mode = detail::total_chains(s, caps.back(), pmax) < limits.exact_chain_limit ? ArithmeticMode::exact
                                                                                 : ArithmeticMode::modular;
  rep.mode = mode;
  std::mt19937_64 rng(limits.seed);
  for (int D : caps)
    rep.dims_by_cap[D] = detail::homology_at_cap(s, coeff, D, pmax, mode, limits, rng, rep.witnesses,
                                                 D == caps.back() ? &rep.chain_counts : nullptr);
  rep.dims = rep.dims_by_cap.at(caps.back());
  rep.stable.assign(static_cast<std::size_t>(pmax) + 1, false);
  if (caps.size() >= 2) {
    const auto& lo = rep.dims_by_cap.at(caps[caps.size() - 2]);
    for (std::size_t p = 0; p < rep.dims.size(); ++p) rep.stable[p] = lo[p] == rep.dims[p];
  }
  return rep;
}

/// Homology at caps D-1 and D.
inline HomologyReport truncated_homology(Signature s, const Character& c, int D, int pmax, ArithmeticMode mode,
                                         const OracleLimits& limits = {}) {
  std::vector<int> caps;
  if (D >= 2) caps.push_back(D - 1);
  caps.push_back(D);
  return truncated_homology_caps(s, CoefficientModule::from_character(c), caps, pmax, mode, limits);
}

// ---------------------------------------------------------------------------
// Adjudication of engine vs stored figure

struct Adjudication {
  int n = 0;
  std::vector<int> character;
  int m_max = 0;
  HomologyReport oracle;
  std::vector<long long> engine;                 // full enumeration, degrees 0..m_max
  std::optional<std::vector<long long>> figure;  // stored figure, degrees 0..m_max
  bool consistent_across_caps = false;           // every compared degree stable
  std::string verdict;
};

inline Adjudication adjudicate(const CharacterExponents& a, int m_max, std::vector<int> caps, ArithmeticMode mode,
                               const std::optional<FigureSet>& figure, const OracleLimits& limits = {}) {
  const int n = a.n();
  if (mode == ArithmeticMode::automatic && n > 3) mode = ArithmeticMode::modular;
  if (mode == ArithmeticMode::exact && n > 3)
    throw ResourceGuardError("adjudicate: exact arithmetic is limited to n <= 3");
  if (n > 4) throw ResourceGuardError("adjudicate: limited to n <= 4");
  Adjudication out;
  out.n = n;
  out.character = a.a;
  out.m_max = m_max;
  out.oracle = truncated_homology_caps(Signature::square_of(n), CoefficientModule::from_character(Character::diagonal(a.a)),
                                       std::move(caps), m_max, mode, limits);
  const BettiTable eng = betti_M(a);
  for (int m = 0; m <= m_max; ++m) out.engine.push_back(eng.at(m));
  if (figure) {
    std::vector<long long> f;
    for (int m = 0; m <= m_max; ++m) f.push_back(figure->tables.at(Group::M).at(m));
    out.figure = f;
  }
  out.consistent_across_caps = out.oracle.caps.size() >= 2;
  bool any_stable = false;
  bool eng_ok = true;
  bool fig_ok = out.figure.has_value();
  for (int m = 0; m <= m_max; ++m) {
    const auto k = static_cast<std::size_t>(m);
    if (!out.oracle.stable[k]) {
      out.consistent_across_caps = false;
      continue;
    }
    any_stable = true;
    eng_ok = eng_ok && out.oracle.dims[k] == out.engine[k];
    if (out.figure) fig_ok = fig_ok && out.oracle.dims[k] == (*out.figure)[k];
  }
  if (!any_stable) {
    out.verdict = "inconclusive";
  } else if (eng_ok && fig_ok) {
    out.verdict = "matches engine and figure";
  } else if (eng_ok) {
    out.verdict = "matches engine";
  } else if (fig_ok) {
    out.verdict = "matches figure";
  } else {
    out.verdict = "matches neither";
  }
  return out;
}

}  // namespace qmh
