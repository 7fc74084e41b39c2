#pragma once

#include <cstdint>
#include <random>

#include "qel/prime_field.hpp"

namespace qel {

// splitmix64 step, used to decorrelate derived seeds.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(const char* s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (; *s; ++s) h = (h ^ static_cast<unsigned char>(*s)) * 0x100000001b3ull;
  return h;
}

// Every probe derives its seed as mix(root ^ hash(op tag) ^ counter), so the
// trial schedule depends only on (root seed, op, trial index) and never on
// call order or threading.
inline std::uint64_t derive_seed(std::uint64_t root, const char* op_tag,
                                 std::uint64_t counter) {
  return mix64(root ^ fnv1a(op_tag) ^ (counter * 0xd1342543de82ef95ull));
}

// mt19937_64 has a pinned algorithm, so streams are identical across
// platforms.  std::uniform_int_distribution is implementation-defined and is
// deliberately avoided.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t raw() { return gen_(); }

  // Uniform in [0, bound) by masked rejection.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw InputError("rng bound must be positive");
    if ((bound & (bound - 1)) == 0) return gen_() & (bound - 1);
    std::uint64_t mask = ~std::uint64_t{0} >> __builtin_clzll(bound);
    for (;;) {
      std::uint64_t v = gen_() & mask;
      if (v < bound) return v;
    }
  }

  std::uint64_t field_element(const PrimeField& f) {
    return below(f.modulus());
  }

  std::uint64_t nonzero_field_element(const PrimeField& f) {
    return 1 + below(f.modulus() - 1);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace qel
