#pragma once

// Structural checks on M_q(n,m): determinant values under characters,
// convolution inverses, scaling automorphisms, centrality, confluence of the
// rewriting system, and graded dimensions.

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qmh/engine.hpp"
#include "qmh/matrix.hpp"
#include "qmh/qma.hpp"

namespace qmh {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

namespace detail {

template <class F>
CheckResult timed(std::string name, F&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckResult r;
  r.name = std::move(name);
  try {
    body(r);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline void all_words(const Signature& s, int len, const std::function<void(const Word&)>& visit) {
  Word w(static_cast<std::size_t>(len));
  std::vector<int> idx(static_cast<std::size_t>(len), 0);
  const int N = s.generator_count();
  while (true) {
    for (std::size_t k = 0; k < w.size(); ++k) w[k] = generator_at(s, idx[k]);
    visit(w);
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == N) idx[k++] = 0;
    if (k == idx.size()) return;
  }
}

}  // namespace detail

/// f(D_q) = 1, f^-1(D_q) = 1, and (f (x) f^-1) Delta = eps on monomials of degree <= 2.
inline CheckResult check_mpi(int n) {
  return detail::timed("mpi n=" + std::to_string(n), [&](CheckResult& r) {
    const Signature s = Signature::square_of(n);
    const NCElement D = quantum_determinant(n);
    const Character f = Character::f(n), fi = Character::f_inv(n), eps = Character::epsilon(n);
    const LaurentPoly fD = apply_character(f, D), fiD = apply_character(fi, D);
    bool conv = character_convolve(f, fi) == eps;
    for (int d = 1; d <= 2 && conv; ++d)
      for (const auto& m : monomials_of_degree(s, d)) {
        const TensorElement t = coproduct(NCElement::monomial(s, m));
        LaurentPoly v;
        for (const auto& [ab, c] : t.terms) v += c * f.on_monomial(s, ab.first) * fi.on_monomial(s, ab.second);
        if (!(v == eps.on_monomial(s, m))) {
          conv = false;
          break;
        }
      }
    r.pass = fD.is_one() && fiD.is_one() && conv;
    r.detail = "f(D_q) = " + fD.to_string() + ", f^-1(D_q) = " + fiD.to_string() + ", f * f^-1 = eps: " +
               (conv ? "yes" : "no") + " (" + std::to_string(D.terms().size()) + " terms in D_q)";
  });
}

inline CheckResult check_central(int n) {
  return detail::timed("central n=" + std::to_string(n), [&](CheckResult& r) {
    const NCElement D = quantum_determinant(n);
    r.pass = is_central(D);
    r.detail = std::string("D_q ") + (r.pass ? "commutes" : "does not commute") + " with every generator";
  });
}

/// theta_alpha for `count` random exponent sequences, plus a scaling that must fail.
inline CheckResult check_scaling(int n, int cols, int count, std::uint64_t seed) {
  return detail::timed("scaling n=" + std::to_string(n) + " m=" + std::to_string(cols), [&](CheckResult& r) {
    const Signature s{n, cols};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-4, 4);
    int ok = 0;
    for (int t = 0; t < count; ++t) {
      std::vector<int> a;
      for (int i = 0; i < n; ++i) a.push_back(dist(rng));
      if (check_scaling_automorphism(GeneratorScaling::rows(s, a))) ++ok;
    }
    bool control = true;
    if (n >= 2 && cols >= 2) {
      GeneratorScaling bad = GeneratorScaling::identity(s);
      bad.exponents[0] = 1;  // x11 alone
      control = !check_scaling_automorphism(bad);
    }
    r.pass = ok == count && control;
    r.detail = std::to_string(ok) + "/" + std::to_string(count) + " row scalings preserve the relations" +
               (n >= 2 && cols >= 2 ? std::string(", scaling x11 alone ") + (control ? "rejected" : "accepted") : "");
  });
}

/// Leftmost and rightmost rewriting agree with the memoized product on every word of length `len`.
inline CheckResult check_confluence(int n, int cols, int len = 3) {
  return detail::timed("confluence n=" + std::to_string(n) + " m=" + std::to_string(cols), [&](CheckResult& r) {
    const Signature s{n, cols};
    long words = 0, bad = 0;
    detail::all_words(s, len, [&](const Word& w) {
      ++words;
      const NCElement a = normal_order(s, w, RewriteStrategy::leftmost);
      const NCElement b = normal_order(s, w, RewriteStrategy::rightmost);
      const NCElement c = from_word(s, w);
      if (!(a == b) || !(a == c)) ++bad;
    });
    r.pass = bad == 0;
    r.detail = std::to_string(words) + " words of length " + std::to_string(len) + ", " + std::to_string(bad) +
               " disagreements";
  });
}

/// The normal forms of all words of length d span a space of dimension C(d+nm-1, nm-1).
inline CheckResult check_graded_dims(int n, int cols, int dmax, std::uint64_t seed = 0x5eed) {
  return detail::timed("pbw n=" + std::to_string(n) + " m=" + std::to_string(cols), [&](CheckResult& r) {
    const Signature s{n, cols};
    const int N = s.generator_count();
    std::ostringstream summary;
    bool ok = true;
    for (int d = 0; d <= dmax; ++d) {
      const auto basis = monomials_of_degree(s, d);
      std::map<Monomial, std::size_t> row;
      for (const auto& m : basis) row.emplace(m, row.size());
      std::vector<NCElement> forms;
      if (d == 0) {
        forms.push_back(NCElement::one(s));
      } else {
        detail::all_words(s, d, [&](const Word& w) { forms.push_back(normal_order(s, w)); });
      }
      ScalarMatrix M(basis.size(), forms.size());
      for (std::size_t c = 0; c < forms.size(); ++c)
        for (const auto& [m, k] : forms[c].terms()) M.add(row.at(m), c, k);
      const std::size_t rank = matrix_rank(M, RankMode::modular, seed).rank;
      const long long expect = binomial(d + N - 1, N - 1);
      ok = ok && static_cast<long long>(rank) == expect;
      summary << (d ? ", " : "") << "d=" << d << ": " << rank << "/" << expect;
    }
    r.pass = ok;
    r.detail = summary.str();
  });
}

}  // namespace qmh
