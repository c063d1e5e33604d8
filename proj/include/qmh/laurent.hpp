#pragma once

// Exact univariate Laurent polynomials in q with rational coefficients.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qmh/modp.hpp"

namespace qmh {

using Rational = mpq_class;

/// Canonical Laurent polynomial: terms sorted by increasing exponent, no zero
/// coefficients. The zero polynomial has no terms.
class LaurentPoly {
 public:
  using Term = std::pair<int, Rational>;

  LaurentPoly() = default;
  LaurentPoly(long c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace_back(0, Rational(c));
  }
  LaurentPoly(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) {
      terms_.emplace_back(0, c);
      terms_.back().second.canonicalize();
    }
  }

  static LaurentPoly monomial(const Rational& c, int exponent) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace_back(exponent, c);
    return p;
  }
  /// q^e
  static LaurentPoly q_power(int e) { return monomial(Rational(1), e); }

  static LaurentPoly from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    LaurentPoly p;
    for (auto& [e, c] : terms) {
      c.canonicalize();
      if (!p.terms_.empty() && p.terms_.back().first == e) {
        p.terms_.back().second += c;
      } else {
        p.terms_.emplace_back(e, std::move(c));
      }
    }
    p.prune();
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  int min_exponent() const { return terms_.empty() ? 0 : terms_.front().first; }
  int max_exponent() const { return terms_.empty() ? 0 : terms_.back().first; }

  bool is_one() const {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
  }
  /// True for c*q^e with c != 0, i.e. a unit of Q[q, q^-1].
  bool is_unit() const { return terms_.size() == 1; }

  Rational coefficient(int e) const {
    for (const auto& [x, c] : terms_)
      if (x == e) return c;
    return Rational(0);
  }

  LaurentPoly shifted(int k) const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.first += k;
    return r;
  }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
      if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
        out.push_back(std::move(*a++));
      } else if (a == terms_.end() || b->first < a->first) {
        out.push_back(*b++);
      } else {
        Rational s = a->second + b->second;
        if (s != 0) out.emplace_back(a->first, std::move(s));
        ++a;
        ++b;
      }
    }
    terms_ = std::move(out);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this += -o; }

  LaurentPoly& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& t : terms_) t.second *= c;
    }
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.terms_.size() == 1) {
      LaurentPoly r = a;
      for (auto& t : r.terms_) {
        t.first += b.terms_[0].first;
        t.second *= b.terms_[0].second;
      }
      return r;
    }
    if (a.terms_.size() == 1) return b * a;
    std::map<int, Rational> acc;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
    LaurentPoly r;
    for (auto& [e, c] : acc)
      if (c != 0) r.terms_.emplace_back(e, std::move(c));
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Value at a nonzero rational point.
  Rational eval(const Rational& q0) const {
    if (q0 == 0) throw std::domain_error("LaurentPoly::eval: specialization point q0 = 0");
    Rational x = q0;
    x.canonicalize();
    Rational acc = 0;
    for (const auto& [e, c] : terms_) acc += c * rational_pow(x, e);
    return acc;
  }

  /// Value at a nonzero element of F_p.
  std::uint64_t eval(const PrimeField& f, std::uint64_t q0) const {
    if (q0 % f.p() == 0)
      throw std::domain_error("LaurentPoly::eval: specialization point q0 = 0 mod p");
    std::uint64_t acc = 0;
    for (const auto& [e, c] : terms_) acc = f.add(acc, f.mul(f.from_rational(c), f.pow(q0, e)));
    return acc;
  }

  /// Exact quotient a / b in Q[q, q^-1]; throws if b does not divide a.
  friend LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("divide_exact: division by zero");
    if (a.is_zero()) return {};
    if (b.terms_.size() == 1) {
      LaurentPoly r = a;
      const Rational inv = 1 / b.terms_[0].second;
      for (auto& t : r.terms_) {
        t.first -= b.terms_[0].first;
        t.second *= inv;
      }
      return r;
    }
    // Long division from the top, on the polynomial parts.
    const int shift = a.min_exponent() - b.min_exponent();
    std::vector<Rational> rem = a.dense_from_min();
    const std::vector<Rational> div = b.dense_from_min();
    const std::size_t db = div.size() - 1;
    if (rem.size() < div.size()) throw std::domain_error("divide_exact: inexact division");
    std::vector<Rational> quot(rem.size() - db);
    const Rational lead_inv = 1 / div.back();
    for (std::size_t k = quot.size(); k-- > 0;) {
      const Rational c = rem[k + db] * lead_inv;
      quot[k] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= c * div[j];
    }
    for (const auto& r : rem)
      if (r != 0) throw std::domain_error("divide_exact: inexact division");
    std::vector<Term> qt;
    for (std::size_t k = 0; k < quot.size(); ++k)
      if (quot[k] != 0) qt.emplace_back(static_cast<int>(k) + shift, quot[k]);
    LaurentPoly r;
    r.terms_ = std::move(qt);
    return r;
  }

  /// Human-readable canonical text, highest exponent first: "-q^2 + 1", "q^-1".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      Rational mag = abs(c);
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (e == 0) {
        os << mag.get_str();
        continue;
      }
      if (mag != 1) os << mag.get_str() << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
    return os << p.to_string();
  }

 private:
  static Rational rational_pow(const Rational& x, int e) {
    Rational base = e < 0 ? Rational(1 / x) : x;
    unsigned k = static_cast<unsigned>(e < 0 ? -e : e);
    Rational r = 1;
    while (k != 0) {
      if (k & 1U) r *= base;
      base *= base;
      k >>= 1U;
    }
    return r;
  }

  std::vector<Rational> dense_from_min() const {
    std::vector<Rational> d(static_cast<std::size_t>(max_exponent() - min_exponent() + 1));
    for (const auto& [e, c] : terms_) d[static_cast<std::size_t>(e - min_exponent())] = c;
    return d;
  }

  void prune() {
    std::erase_if(terms_, [](const Term& t) { return t.second == 0; });
  }

  std::vector<Term> terms_;
};

inline LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

inline Rational lp_eval(const LaurentPoly& a, const Rational& q0) { return a.eval(q0); }

inline std::uint64_t lp_eval(const LaurentPoly& a, const PrimeField& f, std::uint64_t q0) {
  return a.eval(f, q0);
}

/// q^-1 - q, the correction coefficient of the cross relation.
inline LaurentPoly q_inv_minus_q() {
  return LaurentPoly::from_terms({{-1, Rational(1)}, {1, Rational(-1)}});
}

}  // namespace qmh
