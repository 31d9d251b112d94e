#pragma once

#include <cstdint>

#include "koszul/errors.hpp"

namespace koszul {

inline constexpr std::uint32_t kDefaultPrime = 32003;

bool is_prime(std::uint64_t n);

// Arithmetic mod a prime p < 2^31.  Values live in [0, p).
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p < 2 || p >= (1u << 31) || !is_prime(p))
      throw argument_error("field characteristic must be a prime below 2^31, got " +
                           std::to_string(p));
  }

  std::uint32_t characteristic() const { return p_; }

  std::uint32_t reduce_signed(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a) * b) % p_);
  }
  std::uint32_t inv(std::uint32_t a) const;

 private:
  std::uint32_t p_;
};

// Multiplication by a fixed scalar via a precomputed quotient; the row
// update loops vectorize on this.  Requires p < 2^31.
struct FixedMul {
  std::uint32_t m, p;
  std::uint64_t w;  // floor(m * 2^64 / p)

  FixedMul(std::uint32_t m_, std::uint32_t p_) : m(m_), p(p_) {
    w = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(m) << 64) / p);
  }

  std::uint32_t mul(std::uint32_t b) const {
    std::uint64_t q = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(w) * b) >> 64);
    std::uint64_t r = static_cast<std::uint64_t>(m) * b - q * p;
    if (r >= p) r -= p;
    return static_cast<std::uint32_t>(r);
  }
};

}  // namespace koszul
