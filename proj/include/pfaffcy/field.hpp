#pragma once

#include <cstdint>
#include <string>

#include "pfaffcy/error.hpp"

namespace pfaffcy {

using Coeff = std::uint32_t;

inline constexpr Coeff kDefaultPrime = 32003;

/// Arithmetic in Z/p for an odd prime p < 2^31. Elements are stored as
/// canonical residues in [0, p).
class PrimeField {
 public:
  explicit PrimeField(Coeff p = kDefaultPrime);

  Coeff prime() const noexcept { return p_; }

  Coeff add(Coeff a, Coeff b) const noexcept {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Coeff inv(Coeff a) const;
  Coeff pow(Coeff a, std::uint64_t e) const noexcept;

  /// Canonical residue of a signed integer.
  Coeff from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Coeff>(r < 0 ? r + p_ : r);
  }
  /// Symmetric representative in (-p/2, p/2], used for printing.
  std::int64_t to_signed(Coeff a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  Coeff p_;
};

bool is_prime(std::uint64_t n);

/// A residue tagged with its modulus.
struct FieldElem {
  Coeff value = 0;
  Coeff p = kDefaultPrime;
};

enum class FieldOp { add, mul, inv, neg };

/// Applies `op` to (a, b); `b` is ignored for the unary operations.
/// Throws Errc::not_invertible for inv(0) and Errc::ring_mismatch when the
/// moduli disagree.
FieldElem field_op(FieldElem a, FieldElem b, FieldOp op);

}  // namespace pfaffcy
