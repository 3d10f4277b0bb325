#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <functional>
#include <span>

#include "pfaffcy/error.hpp"

namespace pfaffcy {

inline constexpr int kMaxVars = 16;
inline constexpr int kMaxExponent = 127;

/// Exponent vector of up to kMaxVars variables, one byte per exponent,
/// packed into two machine words so that products, divisibility tests and
/// hashing run word-parallel. Exponents are kept below 128 so the high bit
/// of every byte is free for borrow/carry detection.
class Monomial {
 public:
  Monomial() = default;

  static Monomial from_exponents(std::span<const int> exps) {
    if (exps.size() > static_cast<std::size_t>(kMaxVars))
      throw Error(Errc::invalid_argument, "too many variables");
    Monomial m;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] < 0 || exps[i] > kMaxExponent) throw Error(Errc::invalid_argument, "exponent out of range");
      m.set(static_cast<int>(i), exps[i]);
    }
    return m;
  }
  static Monomial variable(int i, int power = 1) {
    Monomial m;
    m.set(i, power);
    return m;
  }

  int operator[](int i) const noexcept { return static_cast<int>((w_[i >> 3] >> ((i & 7) * 8)) & 0xff); }
  void set(int i, int e) noexcept {
    const int shift = (i & 7) * 8;
    w_[i >> 3] = (w_[i >> 3] & ~(std::uint64_t{0xff} << shift)) | (static_cast<std::uint64_t>(e) << shift);
  }

  int degree() const noexcept {
    constexpr std::uint64_t k = 0x0101010101010101ull;
    return static_cast<int>((w_[0] * k) >> 56) + static_cast<int>((w_[1] * k) >> 56);
  }

  bool is_one() const noexcept { return (w_[0] | w_[1]) == 0; }

  /// True when this monomial divides `other`.
  bool divides(const Monomial& other) const noexcept {
    constexpr std::uint64_t h = 0x8080808080808080ull;
    return (((other.w_[0] | h) - w_[0]) & h) == h && (((other.w_[1] | h) - w_[1]) & h) == h;
  }

  Monomial operator*(const Monomial& o) const {
    constexpr std::uint64_t h = 0x8080808080808080ull;
    Monomial r;
    r.w_[0] = w_[0] + o.w_[0];
    r.w_[1] = w_[1] + o.w_[1];
    if ((r.w_[0] | r.w_[1]) & h) throw Error(Errc::invalid_argument, "exponent overflow");
    return r;
  }
  /// Quotient; caller guarantees o divides *this.
  Monomial operator/(const Monomial& o) const noexcept {
    Monomial r;
    r.w_[0] = w_[0] - o.w_[0];
    r.w_[1] = w_[1] - o.w_[1];
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) noexcept {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.set(i, a[i] > b[i] ? a[i] : b[i]);
    return r;
  }
  static bool coprime(const Monomial& a, const Monomial& b) noexcept {
    for (int i = 0; i < kMaxVars; ++i)
      if (a[i] && b[i]) return false;
    return true;
  }

  /// Reverse-lexicographic tie break for equal degree: returns >0 when *this
  /// is larger, i.e. when it has the smaller exponent in the last variable
  /// where the two differ.
  int revlex_compare(const Monomial& o) const noexcept {
    for (int w = 1; w >= 0; --w) {
      std::uint64_t x = w_[w] ^ o.w_[w];
      if (x) {
        int byte = (63 - std::countl_zero(x)) >> 3;
        int shift = byte * 8;
        int a = static_cast<int>((w_[w] >> shift) & 0xff);
        int b = static_cast<int>((o.w_[w] >> shift) & 0xff);
        return a < b ? 1 : -1;
      }
    }
    return 0;
  }

  std::uint64_t word(int i) const noexcept { return w_[i]; }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.w_[0] == b.w_[0] && a.w_[1] == b.w_[1];
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) noexcept { return !(a == b); }

 private:
  std::array<std::uint64_t, 2> w_{0, 0};
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = m.word(0) * 0x9E3779B97F4A7C15ull;
    h ^= (m.word(1) + 0x632BE59BD9B4E019ull) * 0xC2B2AE3D27D4EB4Full;
    h ^= h >> 29;
    return static_cast<std::size_t>(h);
  }
};

/// Degree-then-graded-reverse-lexicographic order, optionally with integer
/// variable weights (used only for auxiliary variables in quotient
/// computations). x0 > x1 > ... > x(n-1).
class MonomialOrder {
 public:
  MonomialOrder() = default;
  explicit MonomialOrder(std::array<std::uint8_t, kMaxVars> weights) : weights_(weights), weighted_(false) {
    for (auto w : weights_)
      if (w != 1) weighted_ = true;
  }

  int degree(const Monomial& m) const noexcept {
    if (!weighted_) return m.degree();
    int d = 0;
    for (int i = 0; i < kMaxVars; ++i) d += weights_[i] * m[i];
    return d;
  }
  /// <0, 0, >0 as a is smaller, equal, larger than b.
  int compare(const Monomial& a, const Monomial& b) const noexcept {
    int da = degree(a), db = degree(b);
    if (da != db) return da < db ? -1 : 1;
    return a.revlex_compare(b);
  }
  bool greater(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) > 0; }
  bool weighted() const noexcept { return weighted_; }
  int weight(int i) const noexcept { return weights_[i]; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) { return a.weights_ == b.weights_; }

 private:
  std::array<std::uint8_t, kMaxVars> weights_ = unit_weights();
  bool weighted_ = false;

  static constexpr std::array<std::uint8_t, kMaxVars> unit_weights() {
    std::array<std::uint8_t, kMaxVars> w{};
    for (auto& x : w) x = 1;
    return w;
  }
};

}  // namespace pfaffcy
