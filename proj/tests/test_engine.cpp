#include <gtest/gtest.h>

#include <map>
#include <vector>

#include "qmh/engine.hpp"

namespace qmh {
namespace {

const std::string kFigures = std::string(QMH_DATA_DIR) + "/figures";

/// Betti numbers by direct count: every subset of the n^2 generators whose
/// off-diagonal part has multi-degree a, graded by size plus |a|.
std::map<int, long long> brute_force_betti(const std::vector<int>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<GeneratorIndex> gens;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) gens.push_back({i, j});
  int shift = 0;
  for (int v : a) shift += v;
  std::map<int, long long> out;
  for (unsigned mask = 0; mask < (1u << gens.size()); ++mask) {
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    int size = 0;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (!(mask & (1u << k))) continue;
      ++size;
      const auto [i, j] = gens[k];
      if (i == j) continue;
      ++deg[static_cast<std::size_t>(std::min(i, j) - 1)];
      --deg[static_cast<std::size_t>(std::max(i, j) - 1)];
    }
    if (deg == a) ++out[size + shift];
  }
  return out;
}

/// All alpha in {0,1,2}^pairs with the right multi-degree, by exhaustive box search.
std::vector<std::vector<int>> box_solutions(const std::vector<int>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
  std::vector<std::vector<int>> out;
  std::vector<int> alpha(pairs.size(), 0);
  while (true) {
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      deg[static_cast<std::size_t>(pairs[k].first - 1)] += alpha[k];
      deg[static_cast<std::size_t>(pairs[k].second - 1)] -= alpha[k];
    }
    if (deg == a) out.push_back(alpha);
    std::size_t k = 0;
    while (k < alpha.size() && ++alpha[k] == 3) alpha[k++] = 0;
    if (k == alpha.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> alphas(const std::vector<PairMultiplicity>& s) {
  std::vector<std::vector<int>> out;
  for (const auto& x : s) out.push_back(x.alpha);
  std::sort(out.begin(), out.end());
  return out;
}

/// Every integer vector with entries in [-r, r] summing to zero.
std::vector<std::vector<int>> zero_sum_vectors(int n, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(static_cast<std::size_t>(n), -r);
  while (true) {
    int s = 0;
    for (int x : v) s += x;
    if (s == 0) out.push_back(v);
    std::size_t k = 0;
    while (k < v.size() && ++v[k] > r) v[k++] = -r;
    if (k == v.size()) break;
  }
  return out;
}

std::map<int, long long> dims_of(const BettiTable& t) { return t.dims; }

TEST(MultiDegree, Examples) {
  EXPECT_EQ(multidegree({{1, 2}}, 2), (MultiDegree{1, -1}));
  EXPECT_EQ(multidegree({{2, 1}}, 2), (MultiDegree{1, -1}));
  EXPECT_EQ(multidegree({{1, 3}, {3, 1}}, 3), (MultiDegree{2, 0, -2}));
  EXPECT_EQ(multidegree({{1, 2}, {2, 1}, {2, 3}, {3, 2}}, 3), (MultiDegree{2, 0, -2}));
  EXPECT_EQ(multidegree({}, 3), (MultiDegree{0, 0, 0}));
  EXPECT_THROW(multidegree({{1, 1}}, 2), std::invalid_argument);
  EXPECT_THROW(multidegree({{1, 4}}, 3), std::out_of_range);
}

TEST(Solutions, MatchExhaustiveBoxSearch) {
  for (int n = 2; n <= 4; ++n)
    for (const auto& a : zero_sum_vectors(n, n == 4 ? 3 : 4))
      EXPECT_EQ(alphas(enumerate_solutions(n, a)), box_solutions(a)) << "n=" << n;
}

TEST(Solutions, ThreadedEnumerationIsDeterministic) {
  for (const auto& a : zero_sum_vectors(4, 3)) EXPECT_EQ(enumerate_solutions(4, a, 4), enumerate_solutions(4, a, 1));
}

TEST(Solutions, PublishedExamples) {
  EXPECT_EQ(alphas(enumerate_solutions(2, {1, -1})), (std::vector<std::vector<int>>{{1}}));
  EXPECT_EQ(alphas(enumerate_solutions(3, {2, 0, -2})),
            (std::vector<std::vector<int>>{{0, 2, 0}, {1, 1, 1}, {2, 0, 2}}));
}

TEST(Solutions, NonzeroSumHasNoSolutions) {
  EXPECT_TRUE(enumerate_solutions(3, {1, 0, 0}).empty());
  EXPECT_TRUE(enumerate_solutions(2, {1, 1}).empty());
}

TEST(Solutions, LastSlotCannotGain) {
  // Index n only ever appears as the larger index, so a positive last entry is unreachable.
  EXPECT_TRUE(enumerate_solutions(3, {-1, 0, 1}).empty());
  EXPECT_TRUE(enumerate_solutions(4, {-3, -1, 1, 3}).empty());
}

TEST(Solutions, Errors) {
  EXPECT_THROW(enumerate_solutions(0, {}), std::invalid_argument);
  EXPECT_THROW(enumerate_solutions(3, {1, -1}), std::invalid_argument);
  EXPECT_THROW(expand_solution({3, {1}}), std::invalid_argument);
}

TEST(ExpandSolution, Examples) {
  EXPECT_EQ(expand_solution({2, {1}}), (std::vector<std::vector<GeneratorIndex>>{{{1, 2}}, {{2, 1}}}));
  EXPECT_EQ(expand_solution({2, {2}}), (std::vector<std::vector<GeneratorIndex>>{{{1, 2}, {2, 1}}}));
  EXPECT_EQ(expand_solution({3, {1, 1, 1}}).size(), 8u);
  EXPECT_EQ(expand_solution({3, {0, 0, 0}}), (std::vector<std::vector<GeneratorIndex>>{{}}));
  for (const auto& w : expand_solution({3, {2, 0, 2}})) EXPECT_EQ(multidegree(w, 3), (MultiDegree{2, 0, -2}));
}

TEST(Betti, MatchesBruteForceSubsetCount) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& a : zero_sum_vectors(n, n == 4 ? 3 : 4)) {
      if (n == 4 && a != std::vector<int>{3, 1, -1, -3} && a[0] + a[1] < 0) continue;
      EXPECT_EQ(dims_of(betti_M(CharacterExponents{a})), brute_force_betti(a)) << "n=" << n;
    }
  EXPECT_EQ(dims_of(betti_M(CharacterExponents{{3, 1, -1, -3}})), brute_force_betti({3, 1, -1, -3}));
}

TEST(Betti, MassFormula) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& a : zero_sum_vectors(n, 3)) {
      const auto sols = enumerate_solutions(n, a);
      long long N = 0;
      for (const auto& [d, c] : offdiagonal_counts(sols)) N += c;
      EXPECT_EQ(betti_M(CharacterExponents{a}).total(), (1LL << n) * N);
    }
}

TEST(Betti, CounitIsExteriorOnDiagonalAndPairs) {
  // For eps (a = 0) the n=1 table is that of k[x]: 1, 1.
  const BettiTable t = betti_M(CharacterExponents{{0}});
  EXPECT_EQ(dims_of(t), (std::map<int, long long>{{0, 1}, {1, 1}}));
}

TEST(Betti, EtaIsExterior) {
  const BettiTable t = betti_eta(2, 2);
  EXPECT_EQ(dims_of(t), (std::map<int, long long>{{0, 1}, {1, 4}, {2, 6}, {3, 4}, {4, 1}}));
  EXPECT_EQ(betti_eta(1, 3).total(), 8);
}

TEST(Betti, FigureOneRows) {
  const CharacterExponents a{{1, -1}};
  const std::map<int, long long> ml{{1, 2}, {2, 4}, {3, 2}}, sl{{1, 2}, {2, 2}};
  EXPECT_EQ(dims_of(betti_M(a)), ml);
  EXPECT_EQ(dims_of(betti_GL(a)), ml);
  EXPECT_EQ(dims_of(betti_SL(betti_GL(a))), sl);
}

TEST(Betti, FigureTwoRowsFromPublishedSolutions) {
  const CharacterExponents a{{2, 0, -2}};
  const auto published = *published_solutions(a);
  const std::map<int, long long> ml{{3, 8}, {4, 25}, {5, 27}, {6, 11}, {7, 1}}, sl{{3, 8}, {4, 17}, {5, 10}, {6, 1}};
  EXPECT_EQ(dims_of(betti_table(a, Group::M, published)), ml);
  EXPECT_EQ(dims_of(betti_table(a, Group::GL, published)), ml);
  EXPECT_EQ(dims_of(betti_table(a, Group::SL, published)), sl);
}

TEST(Betti, FullEnumerationForThree) {
  const std::map<int, long long> ml{{2, 1}, {3, 11}, {4, 28}, {5, 28}, {6, 11}, {7, 1}};
  EXPECT_EQ(dims_of(betti_M(CharacterExponents{{2, 0, -2}})), ml);
}

TEST(Betti, FourStartsAtDegreeFour) {
  const BettiTable t = betti_M(CharacterExponents{{3, 1, -1, -3}});
  EXPECT_EQ(t.dims.begin()->first, 4);
  EXPECT_EQ(dims_of(t), brute_force_betti({3, 1, -1, -3}));
}

TEST(SL, DeconvolutionRoundTrip) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& a : zero_sum_vectors(n, 2)) {
      const BettiTable gl = betti_GL(CharacterExponents{a});
      const BettiTable sl = betti_SL(gl);
      std::map<int, long long> back;
      for (const auto& [m, v] : sl.dims) {
        back[m] += v;
        back[m + 1] += v;
      }
      EXPECT_EQ(back, gl.dims);
    }
}

TEST(SL, StoredFiguresAreInternallyConsistent) {
  for (int n = 2; n <= 4; ++n) {
    const FigureSet f = load_figure(n, kFigures);
    EXPECT_EQ(f.tables.at(Group::M).dims, f.tables.at(Group::GL).dims);
    EXPECT_EQ(betti_SL(f.tables.at(Group::GL)).dims, f.tables.at(Group::SL).dims) << "n=" << n;
  }
}

TEST(SL, Errors) {
  BettiTable t;
  t.set(1, 1);
  t.set(2, 3);
  t.set(3, 1);
  EXPECT_THROW(betti_SL(t), NonRealizableTable);
  BettiTable u;
  u.set(1, 2);
  u.set(2, 1);
  EXPECT_THROW(betti_SL(u), NonRealizableTable);
  EXPECT_TRUE(betti_SL(BettiTable{}).dims.empty());
}

TEST(Classes, Examples) {
  const auto c1 = explicit_classes(CharacterExponents{{1, -1}}, 1);
  ASSERT_EQ(c1.size(), 2u);
  EXPECT_EQ(c1[0].to_string(), "(x12)");
  EXPECT_EQ(c1[1].to_string(), "(x21)");
  EXPECT_EQ(explicit_classes(CharacterExponents{{1, -1}}, 2).size(), 4u);
  EXPECT_TRUE(explicit_classes(CharacterExponents{{1, -1}}, 9).empty());
  EXPECT_TRUE(explicit_classes(CharacterExponents{{1, -1}}, 0).empty());
  const auto c7 = explicit_classes(CharacterExponents{{2, 0, -2}}, 7);
  ASSERT_EQ(c7.size(), 1u);
  EXPECT_EQ(c7[0].diag, (std::vector<int>{1, 2, 3}));
}

TEST(Classes, CountsMatchTable) {
  for (const auto& a : {std::vector<int>{1, -1}, std::vector<int>{2, 0, -2}, std::vector<int>{1, 0, -1}}) {
    const BettiTable t = betti_M(CharacterExponents{a});
    for (int m = 0; m <= 10; ++m) {
      const auto cls = explicit_classes(CharacterExponents{a}, m);
      EXPECT_EQ(static_cast<long long>(cls.size()), t.at(m));
      for (const auto& c : cls) EXPECT_EQ(multidegree(c.offdiag, static_cast<int>(a.size())), a);
    }
  }
}

TEST(Compare, FigureOnePasses) {
  const FigureSet f = load_figure(2, kFigures);
  for (Group g : {Group::M, Group::GL, Group::SL}) {
    const BettiTable t = betti_table(CharacterExponents{{1, -1}}, g, enumerate_solutions(2, {1, -1}));
    const FigureComparison c = compare_with_figure(t, f);
    EXPECT_EQ(c.status, MatchStatus::pass);
    EXPECT_TRUE(c.diff.empty());
  }
}

TEST(Compare, FigureTwoDivergenceIsTheExtraSolution) {
  const FigureSet f = load_figure(3, kFigures);
  const CharacterExponents a{{2, 0, -2}};
  const FigureComparison c = compare_with_figure(betti_M(a), f);
  EXPECT_EQ(c.status, MatchStatus::divergent);
  EXPECT_EQ(c.diff, (std::map<int, long long>{{2, 1}, {3, 3}, {4, 3}, {5, 1}}));
  ASSERT_EQ(c.attributed_to.size(), 1u);
  EXPECT_EQ(c.attributed_to[0].alpha, (std::vector<int>{0, 2, 0}));
  EXPECT_TRUE(c.attribution_verified);
}

TEST(Compare, FigureThreeIsDivergent) {
  const FigureSet f = load_figure(4, kFigures);
  const FigureComparison c = compare_with_figure(betti_M(CharacterExponents{{3, 1, -1, -3}}), f);
  EXPECT_EQ(c.status, MatchStatus::divergent);
  EXPECT_FALSE(c.rows.empty());
}

TEST(Figures, LoadErrors) {
  EXPECT_THROW(load_figure(5, kFigures), std::invalid_argument);
  EXPECT_THROW(load_figure(2, "/nonexistent"), std::runtime_error);
}

}  // namespace
}  // namespace qmh
