#pragma once

#include <cstdint>
#include <random>

#include "pfaffcy/field.hpp"

namespace pfaffcy {

/// Seeded generator with a platform-independent mapping to field elements
/// (std::uniform_int_distribution is implementation-defined, so residues are
/// drawn by rejection sampling on the raw 64-bit stream instead).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    for (;;) {
      std::uint64_t x = eng_();
      if (x < limit) return x % n;
    }
  }
  Coeff element(const PrimeField& f) { return static_cast<Coeff>(below(f.prime())); }
  Coeff nonzero(const PrimeField& f) { return static_cast<Coeff>(1 + below(f.prime() - 1)); }

  /// Derives an independent stream, e.g. for a sub-step that may retry.
  Rng fork(std::uint64_t salt) { return Rng(eng_() ^ (salt * 0x9E3779B97F4A7C15ull)); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace pfaffcy
