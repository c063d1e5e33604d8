#pragma once

// Arithmetic in a word-sized prime field F_p.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>

namespace qmh {

/// Primes used for modular specialization; both exceed 2^31.
inline constexpr std::uint64_t kMersenne61 = 2305843009213693951ULL;  // 2^61 - 1
inline constexpr std::uint64_t kPrime32 = 4294967291ULL;              // 2^32 - 5

class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p < 3) throw std::invalid_argument("PrimeField: modulus too small");
  }

  std::uint64_t p() const { return p_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
  }

  std::uint64_t pow(std::uint64_t base, long long e) const {
    if (e < 0) {
      base = inv(base);
      e = -e;
    }
    std::uint64_t r = 1;
    base %= p_;
    while (e != 0) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  std::uint64_t inv(std::uint64_t a) const {
    if (a % p_ == 0) throw std::domain_error("PrimeField::inv: zero has no inverse");
    return pow(a, static_cast<long long>(p_ - 2));
  }

  std::uint64_t from_integer(const mpz_class& z) const {
    // mpz_fdiv_ui returns the nonnegative residue.
    return static_cast<std::uint64_t>(mpz_fdiv_ui(z.get_mpz_t(), p_));
  }

  std::uint64_t from_rational(const mpq_class& x) const {
    std::uint64_t den = from_integer(x.get_den());
    if (den == 0) throw std::domain_error("PrimeField: denominator divisible by p");
    return mul(from_integer(x.get_num()), inv(den));
  }

 private:
  std::uint64_t p_;
};

}  // namespace qmh
