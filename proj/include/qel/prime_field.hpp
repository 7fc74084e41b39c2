#pragma once

#include <cstdint>

#include "qel/errors.hpp"

namespace qel {

// Default modulus: the Mersenne prime 2^61 - 1.  Large enough that random
// evaluation points are generic for every rank computed here, small enough
// that products fit in unsigned __int128.
inline constexpr std::uint64_t kDefaultPrime = (std::uint64_t{1} << 61) - 1;

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t m);

// Arithmetic in Z/p for a fixed odd prime p < 2^62.  Residues are plain
// uint64_t values in [0, p); the field object is the context that interprets
// them.  All operations are pure, so a PrimeField can be shared freely
// between threads.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p = kDefaultPrime) : p_(p) {
    if (p < 3 || p >= (std::uint64_t{1} << 62) || !is_prime_u64(p))
      throw InputError("modulus must be an odd prime below 2^62, got " +
                       std::to_string(p));
  }

  std::uint64_t modulus() const { return p_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }

  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }

  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    unsigned __int128 t = static_cast<unsigned __int128>(a) * b;
    if (p_ == kDefaultPrime) {
      // 2^61 = 1 (mod p), so fold the high 61 bits back in.  This keeps the
      // elimination loops off the 128-bit division path.
      std::uint64_t s = (static_cast<std::uint64_t>(t) & kDefaultPrime) +
                        static_cast<std::uint64_t>(t >> 61);
      if (s >= kDefaultPrime) s -= kDefaultPrime;
      if (s >= kDefaultPrime) s -= kDefaultPrime;
      return s;
    }
    return static_cast<std::uint64_t>(t % p_);
  }

  std::uint64_t pow(std::uint64_t base, std::uint64_t e) const {
    std::uint64_t acc = 1;
    base %= p_;
    while (e != 0) {
      if (e & 1) acc = mul(acc, base);
      base = mul(base, base);
      e >>= 1;
    }
    return acc;
  }

  // Fermat inverse; p is prime by construction.
  std::uint64_t inv(std::uint64_t a) const {
    if (a % p_ == 0) throw InputError("division by zero in prime field");
    return pow(a, p_ - 2);
  }

  // Embeds a signed integer, e.g. a polynomial coefficient.
  std::uint64_t reduce_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return static_cast<std::uint64_t>(r);
  }

 private:
  std::uint64_t p_;
};

}  // namespace qel
