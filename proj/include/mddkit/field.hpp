#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>

namespace mddkit {

/// Arithmetic in GF(p) for an odd prime p < 2^31. Elements are plain
/// uint32_t values in [0, p).
class PrimeField {
public:
  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p < 3 || p % 2 == 0 || p > 0x7fffffffu || !is_prime(p))
      throw std::invalid_argument("field characteristic must be an odd prime < 2^31");
  }

  std::uint32_t modulus() const { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;  // p < 2^31, no wrap
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }

  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    // extended Euclid
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
      const std::int64_t q = r / new_r;
      t = std::exchange(new_t, t - q * new_t);
      r = std::exchange(new_r, r - q * new_r);
    }
    return static_cast<std::uint32_t>(t < 0 ? t + p_ : t);
  }

  std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

  /// Canonical representative of a signed value.
  std::uint32_t from_int(std::int64_t v) const {
    std::int64_t m = v % static_cast<std::int64_t>(p_);
    if (m < 0) m += p_;
    return static_cast<std::uint32_t>(m);
  }

private:
  static bool is_prime(std::uint32_t p) {
    for (std::uint64_t d = 3; d * d <= p; d += 2)
      if (p % d == 0) return false;
    return true;
  }
  std::uint32_t p_;
};

}  // namespace mddkit
