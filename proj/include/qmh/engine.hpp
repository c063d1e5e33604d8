#pragma once

// Betti tables and explicit classes for M_q(n), GL_q(n), SL_q(n) with
// coefficients in a diagonal character x[i,i] -> q^{a_i}.
//
// The homology in degree m is spanned by wedges (off-diagonal part) ^ (diagonal
// part) whose off-diagonal part has multi-degree a. An off-diagonal generator
// x[s,t] puts sign(t - s) in slot s and sign(s - t) in slot t, so x[s,t] and
// x[t,s] carry the same multi-degree e_min - e_max. Wedges are therefore
// described by a multiplicity in {0, 1, 2} per unordered pair {i < j}.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <future>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qmh/qma.hpp"

namespace qmh {

using MultiDegree = std::vector<int>;

enum class Group { M, GL, SL };
enum class Provenance { engine, oracle, paper_figure };

inline const char* to_string(Group g) {
  switch (g) {
    case Group::M: return "M";
    case Group::GL: return "GL";
    case Group::SL: return "SL";
  }
  return "?";
}

inline Group parse_group(const std::string& s) {
  if (s == "M") return Group::M;
  if (s == "GL") return Group::GL;
  if (s == "SL") return Group::SL;
  throw std::invalid_argument("unknown group '" + s + "' (expected M, GL or SL)");
}

inline const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::engine: return "engine";
    case Provenance::oracle: return "oracle";
    case Provenance::paper_figure: return "paper-figure";
  }
  return "?";
}

/// Character exponents a_i and the homological shift sum(a_i).
struct CharacterExponents {
  std::vector<int> a;

  int n() const { return static_cast<int>(a.size()); }
  int shift() const { return std::accumulate(a.begin(), a.end(), 0); }
};

struct BettiTable {
  std::map<int, long long> dims;  // zero entries are not stored
  int n = 0;
  std::vector<int> character;
  Group group = Group::M;
  Provenance provenance = Provenance::engine;

  long long at(int m) const {
    auto it = dims.find(m);
    return it == dims.end() ? 0 : it->second;
  }
  void set(int m, long long v) {
    if (v < 0) throw std::invalid_argument("BettiTable: negative dimension");
    if (v == 0) {
      dims.erase(m);
    } else {
      dims[m] = v;
    }
  }
  long long total() const {
    long long t = 0;
    for (const auto& [m, d] : dims) t += d;
    return t;
  }
  bool same_dims(const BettiTable& o) const { return dims == o.dims; }
};

/// Multiplicity in {0,1,2} per unordered pair, pairs ordered
/// (1,2), (1,3), ..., (1,n), (2,3), ..., (n-1,n).
struct PairMultiplicity {
  int n = 0;
  std::vector<int> alpha;

  auto operator<=>(const PairMultiplicity&) const = default;

  int ones() const { return static_cast<int>(std::count(alpha.begin(), alpha.end(), 1)); }
  int twos() const { return static_cast<int>(std::count(alpha.begin(), alpha.end(), 2)); }
  int exterior_degree() const { return ones() + 2 * twos(); }

  std::string to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t k = 0; k < alpha.size(); ++k) os << (k ? "," : "") << alpha[k];
    os << ")";
    return os.str();
  }
};

inline std::vector<std::pair<int, int>> unordered_pairs(int n) {
  std::vector<std::pair<int, int>> p;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) p.emplace_back(i, j);
  return p;
}

/// A wedge of distinct off-diagonal generators times a wedge of diagonal ones.
struct WedgeClass {
  std::vector<GeneratorIndex> offdiag;  // sorted row-major
  std::vector<int> diag;                // indices i of x[i,i], sorted

  int exterior_degree() const { return static_cast<int>(offdiag.size() + diag.size()); }
  auto operator<=>(const WedgeClass&) const = default;

  /// All generators in row-major order, e.g. "(x11,x12,x22)".
  std::string to_string() const {
    std::vector<GeneratorIndex> all = offdiag;
    for (int i : diag) all.push_back({i, i});
    std::sort(all.begin(), all.end());
    std::ostringstream os;
    os << "(";
    for (std::size_t k = 0; k < all.size(); ++k) os << (k ? "," : "") << "x" << all[k].i << all[k].j;
    os << ")";
    return os.str();
  }
};

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

// ---------------------------------------------------------------------------

inline MultiDegree multidegree(const std::vector<GeneratorIndex>& offdiag, int n) {
  MultiDegree d(static_cast<std::size_t>(n), 0);
  for (const auto& g : offdiag) {
    if (g.i < 1 || g.i > n || g.j < 1 || g.j > n) throw std::out_of_range("multidegree: index out of range");
    if (g.diagonal()) throw std::invalid_argument("multidegree: diagonal generator in input");
    const int lo = std::min(g.i, g.j);
    const int hi = std::max(g.i, g.j);
    ++d[static_cast<std::size_t>(lo - 1)];
    --d[static_cast<std::size_t>(hi - 1)];
  }
  return d;
}

namespace detail {

struct SolutionSearch {
  int n;
  std::vector<std::pair<int, int>> pairs;
  MultiDegree target;
  // Per position k: the most each slot can still gain / lose from pairs k...
  std::vector<std::vector<int>> max_gain;
  std::vector<std::vector<int>> max_loss;

  SolutionSearch(int n_, MultiDegree t) : n(n_), pairs(unordered_pairs(n_)), target(std::move(t)) {
    const std::size_t P = pairs.size();
    max_gain.assign(P + 1, std::vector<int>(static_cast<std::size_t>(n), 0));
    max_loss.assign(P + 1, std::vector<int>(static_cast<std::size_t>(n), 0));
    for (std::size_t k = P; k-- > 0;) {
      max_gain[k] = max_gain[k + 1];
      max_loss[k] = max_loss[k + 1];
      max_gain[k][static_cast<std::size_t>(pairs[k].first - 1)] += 2;
      max_loss[k][static_cast<std::size_t>(pairs[k].second - 1)] += 2;
    }
  }

  bool feasible(std::size_t k, const MultiDegree& cur) const {
    for (std::size_t s = 0; s < cur.size(); ++s) {
      if (cur[s] + max_gain[k][s] < target[s]) return false;
      if (cur[s] - max_loss[k][s] > target[s]) return false;
    }
    return true;
  }

  void run(std::size_t k, MultiDegree& cur, std::vector<int>& alpha, std::vector<PairMultiplicity>& out) const {
    if (!feasible(k, cur)) return;
    if (k == pairs.size()) {
      out.push_back({n, alpha});
      return;
    }
    const auto lo = static_cast<std::size_t>(pairs[k].first - 1);
    const auto hi = static_cast<std::size_t>(pairs[k].second - 1);
    for (int v = 0; v <= 2; ++v) {
      alpha[k] = v;
      cur[lo] += v;
      cur[hi] -= v;
      run(k + 1, cur, alpha, out);
      cur[lo] -= v;
      cur[hi] += v;
    }
    alpha[k] = 0;
  }
};

}  // namespace detail

/// All multiplicity vectors whose total multi-degree equals `target`, in
/// lexicographic order. With threads > 1 the branches of the first pair run
/// concurrently.
inline std::vector<PairMultiplicity> enumerate_solutions(int n, const MultiDegree& target, int threads = 1) {
  if (n < 1) throw std::invalid_argument("enumerate_solutions: n >= 1");
  if (static_cast<int>(target.size()) != n) throw std::invalid_argument("enumerate_solutions: target length != n");
  const detail::SolutionSearch search(n, target);
  std::vector<PairMultiplicity> out;
  if (search.pairs.empty()) {
    MultiDegree cur(static_cast<std::size_t>(n), 0);
    std::vector<int> alpha;
    search.run(0, cur, alpha, out);
    return out;
  }
  auto branch = [&search, n](int v) {
    std::vector<PairMultiplicity> part;
    MultiDegree cur(static_cast<std::size_t>(n), 0);
    std::vector<int> alpha(search.pairs.size(), 0);
    alpha[0] = v;
    cur[static_cast<std::size_t>(search.pairs[0].first - 1)] += v;
    cur[static_cast<std::size_t>(search.pairs[0].second - 1)] -= v;
    search.run(1, cur, alpha, part);
    return part;
  };
  std::vector<std::vector<PairMultiplicity>> parts(3);
  if (threads > 1) {
    std::vector<std::future<std::vector<PairMultiplicity>>> futs;
    for (int v = 0; v <= 2; ++v) futs.push_back(std::async(std::launch::async, branch, v));
    for (int v = 0; v <= 2; ++v) parts[static_cast<std::size_t>(v)] = futs[static_cast<std::size_t>(v)].get();
  } else {
    for (int v = 0; v <= 2; ++v) parts[static_cast<std::size_t>(v)] = branch(v);
  }
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

/// The off-diagonal wedges of a multiplicity vector: a pair at multiplicity 1
/// contributes x[i,j] or x[j,i], at multiplicity 2 both.
inline std::vector<std::vector<GeneratorIndex>> expand_solution(const PairMultiplicity& s) {
  const auto pairs = unordered_pairs(s.n);
  if (pairs.size() != s.alpha.size()) throw std::invalid_argument("expand_solution: wrong number of pairs");
  std::vector<std::vector<GeneratorIndex>> out{{}};
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [i, j] = pairs[k];
    const int a = s.alpha[k];
    if (a == 0) continue;
    std::vector<std::vector<GeneratorIndex>> next;
    for (const auto& w : out) {
      if (a == 2) {
        auto v = w;
        v.push_back({i, j});
        v.push_back({j, i});
        next.push_back(std::move(v));
      } else {
        auto v1 = w;
        v1.push_back({i, j});
        next.push_back(std::move(v1));
        auto v2 = w;
        v2.push_back({j, i});
        next.push_back(std::move(v2));
      }
    }
    out = std::move(next);
  }
  for (auto& w : out) std::sort(w.begin(), w.end());
  std::sort(out.begin(), out.end());
  return out;
}

/// N(d): number of off-diagonal wedges of exterior degree d over the solutions.
inline std::map<int, long long> offdiagonal_counts(const std::vector<PairMultiplicity>& solutions) {
  std::map<int, long long> N;
  for (const auto& s : solutions) N[s.exterior_degree()] += 1LL << s.ones();
  return N;
}

/// Solution lists displayed in the worked examples; nullopt where none is given.
inline std::optional<std::vector<PairMultiplicity>> published_solutions(const CharacterExponents& a) {
  if (a.a == std::vector<int>{1, -1}) return std::vector<PairMultiplicity>{{2, {1}}};
  if (a.a == std::vector<int>{2, 0, -2})
    return std::vector<PairMultiplicity>{{3, {1, 1, 1}}, {3, {2, 0, 2}}};
  return std::nullopt;
}

inline BettiTable betti_from_solutions(const CharacterExponents& a, const std::vector<PairMultiplicity>& solutions,
                                       Group group = Group::M) {
  BettiTable t;
  t.n = a.n();
  t.character = a.a;
  t.group = group;
  t.provenance = Provenance::engine;
  const int n = a.n();
  for (const auto& [d, count] : offdiagonal_counts(solutions))
    for (int s = 0; s <= n; ++s) {
      const int m = d + s + a.shift();
      t.set(m, t.at(m) + binomial(n, s) * count);
    }
  return t;
}

inline BettiTable betti_M(const CharacterExponents& a, int threads = 1) {
  return betti_from_solutions(a, enumerate_solutions(a.n(), a.a, threads), Group::M);
}

inline BettiTable betti_GL(const CharacterExponents& a, int threads = 1) {
  BettiTable t = betti_M(a, threads);
  t.group = Group::GL;
  return t;
}

class NonRealizableTable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Deconvolution by (1, 1): the unique b with b[m] + b[m-1] = gl[m].
inline BettiTable betti_SL(const BettiTable& gl) {
  BettiTable b = gl;
  b.group = Group::SL;
  b.dims.clear();
  if (gl.dims.empty()) return b;
  const int lo = gl.dims.begin()->first;
  const int hi = gl.dims.rbegin()->first;
  long long prev = 0;
  for (int m = lo; m <= hi; ++m) {
    const long long v = gl.at(m) - prev;
    if (v < 0)
      throw NonRealizableTable("betti_SL: negative dimension at m=" + std::to_string(m));
    if (m == hi && v != 0)
      throw NonRealizableTable("betti_SL: deconvolution does not terminate (residual " + std::to_string(v) +
                               " at m=" + std::to_string(m) + ")");
    b.set(m, v);
    prev = v;
  }
  return b;
}

inline BettiTable betti_table(const CharacterExponents& a, Group g, const std::vector<PairMultiplicity>& solutions) {
  BettiTable m = betti_from_solutions(a, solutions, Group::M);
  if (g == Group::M) return m;
  m.group = Group::GL;
  return g == Group::GL ? m : betti_SL(m);
}

/// Homology of M_q(n, m) with the zero character on both sides: exterior
/// algebra on all n*m generators.
inline BettiTable betti_eta(int rows, int cols) {
  BettiTable t;
  t.n = rows;
  t.group = Group::M;
  for (int l = 0; l <= rows * cols; ++l) t.set(l, binomial(rows * cols, l));
  return t;
}

/// Classes in degree m: off-diagonal part of multi-degree a, completed by every
/// diagonal subset of the complementary size.
inline std::vector<WedgeClass> explicit_classes(const CharacterExponents& a, int m,
                                                const std::vector<PairMultiplicity>& solutions) {
  const int n = a.n();
  const int ext = m - a.shift();
  std::vector<WedgeClass> out;
  if (ext < 0) return out;
  for (const auto& s : solutions) {
    const int d = s.exterior_degree();
    const int k = ext - d;
    if (k < 0 || k > n) continue;
    // Diagonal subsets of size k.
    std::vector<int> pick(static_cast<std::size_t>(n), 0);
    std::fill(pick.end() - k, pick.end(), 1);
    std::vector<std::vector<int>> subsets;
    do {
      std::vector<int> sub;
      for (int i = 0; i < n; ++i)
        if (pick[static_cast<std::size_t>(i)]) sub.push_back(i + 1);
      subsets.push_back(std::move(sub));
    } while (std::next_permutation(pick.begin(), pick.end()));
    for (const auto& off : expand_solution(s))
      for (const auto& sub : subsets) out.push_back({off, sub});
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<WedgeClass> explicit_classes(const CharacterExponents& a, int m) {
  return explicit_classes(a, m, enumerate_solutions(a.n(), a.a));
}

// ---------------------------------------------------------------------------
// Stored figure tables

struct FigureSet {
  int n = 0;
  std::vector<int> character;
  std::map<Group, BettiTable> tables;
};

/// Reads `<dir>/fig_n<n>.csv` with header "group,m,dim".
inline FigureSet load_figure(int n, const std::string& dir) {
  if (n < 2 || n > 4) throw std::invalid_argument("no stored figure for n=" + std::to_string(n));
  const std::string path = dir + "/fig_n" + std::to_string(n) + ".csv";
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open figure data " + path);
  FigureSet fs;
  fs.n = n;
  fs.character = Character::f_inv(n).exponents;
  for (Group g : {Group::M, Group::GL, Group::SL}) {
    BettiTable t;
    t.n = n;
    t.character = fs.character;
    t.group = g;
    t.provenance = Provenance::paper_figure;
    fs.tables[g] = t;
  }
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      if (line.rfind("group", 0) == 0) continue;
    }
    std::istringstream ls(line);
    std::string g, m, d;
    if (!std::getline(ls, g, ',') || !std::getline(ls, m, ',') || !std::getline(ls, d, ','))
      throw std::runtime_error("malformed figure row: " + line);
    fs.tables[parse_group(g)].set(std::stoi(m), std::stoll(d));
  }
  return fs;
}

enum class MatchStatus { pass, divergent };

inline const char* to_string(MatchStatus s) { return s == MatchStatus::pass ? "PASS" : "DIVERGENT"; }

struct DiffRow {
  int m;
  long long engine;
  long long figure;
  long long diff;  // engine - figure
};

struct FigureComparison {
  int n = 0;
  Group group = Group::M;
  MatchStatus status = MatchStatus::pass;
  std::vector<DiffRow> rows;  // every degree in either support
  std::map<int, long long> diff;
  std::vector<PairMultiplicity> attributed_to;
  bool attribution_verified = false;
  std::string note;
};

namespace detail {

inline std::map<int, long long> table_diff(const BettiTable& a, const BettiTable& b) {
  std::map<int, long long> d;
  for (const auto& [m, v] : a.dims) d[m] += v;
  for (const auto& [m, v] : b.dims) d[m] -= v;
  std::erase_if(d, [](const auto& kv) { return kv.second == 0; });
  return d;
}

inline std::optional<std::map<int, long long>> contribution(const CharacterExponents& a, Group g,
                                                            const std::vector<PairMultiplicity>& subset) {
  try {
    return betti_table(a, g, subset).dims;
  } catch (const NonRealizableTable&) {
    return std::nullopt;
  }
}

}  // namespace detail

/// Per-degree diff of an engine table against the stored figure. Divergences
/// are attributed to solution vectors outside the published list when one
/// exists, otherwise to the smallest subset of solutions reproducing the diff.
inline FigureComparison compare_with_figure(const BettiTable& computed, const FigureSet& fig) {
  if (computed.n != fig.n) throw std::invalid_argument("compare_with_figure: n mismatch");
  FigureComparison out;
  out.n = fig.n;
  out.group = computed.group;
  const BettiTable& ref = fig.tables.at(computed.group);
  std::map<int, bool> degrees;
  for (const auto& [m, v] : computed.dims) degrees[m] = true;
  for (const auto& [m, v] : ref.dims) degrees[m] = true;
  for (const auto& [m, unused] : degrees)
    out.rows.push_back({m, computed.at(m), ref.at(m), computed.at(m) - ref.at(m)});
  out.diff = detail::table_diff(computed, ref);
  if (out.diff.empty()) {
    out.status = MatchStatus::pass;
    return out;
  }
  out.status = MatchStatus::divergent;

  const CharacterExponents a{computed.character};
  const auto full = enumerate_solutions(a.n(), a.a);
  if (auto published = published_solutions(a)) {
    std::vector<PairMultiplicity> extra;
    for (const auto& s : full)
      if (std::find(published->begin(), published->end(), s) == published->end()) extra.push_back(s);
    out.attributed_to = extra;
    const auto c = detail::contribution(a, computed.group, extra);
    out.attribution_verified = c && *c == out.diff;
    out.note = out.attribution_verified ? "difference equals the contribution of solutions missing from the "
                                          "published list"
                                        : "solutions missing from the published list do not account for the "
                                          "whole difference";
    return out;
  }
  bool negative = false;
  for (const auto& [m, v] : out.diff) negative = negative || v < 0;
  if (!negative && full.size() <= 16) {
    for (std::size_t size = 1; size <= full.size() && !out.attribution_verified; ++size) {
      std::vector<bool> pick(full.size(), false);
      std::fill(pick.end() - static_cast<std::ptrdiff_t>(size), pick.end(), true);
      do {
        std::vector<PairMultiplicity> subset;
        for (std::size_t k = 0; k < full.size(); ++k)
          if (pick[k]) subset.push_back(full[k]);
        const auto c = detail::contribution(a, computed.group, subset);
        if (c && *c == out.diff) {
          out.attributed_to = subset;
          out.attribution_verified = true;
          break;
        }
      } while (std::next_permutation(pick.begin(), pick.end()));
    }
  }
  out.note = out.attribution_verified ? "difference equals the contribution of the listed solutions"
                                      : "difference is not the contribution of any set of solutions";
  return out;
}

}  // namespace qmh
