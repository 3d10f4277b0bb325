#include "pfaffcy/field.hpp"

namespace pfaffcy {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(Coeff p) : p_(p) {
  if (p < 3 || p >= (1u << 31) || !is_prime(p))
    throw Error(Errc::invalid_argument, "modulus must be an odd prime below 2^31, got " + std::to_string(p));
}

Coeff PrimeField::inv(Coeff a) const {
  if (a % p_ == 0) throw Error(Errc::not_invertible, "not invertible");
  // extended Euclid on signed 64-bit values
  std::int64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return from_int(s0);
}

Coeff PrimeField::pow(Coeff a, std::uint64_t e) const noexcept {
  Coeff result = 1 % p_;
  Coeff base = a % p_;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FieldElem field_op(FieldElem a, FieldElem b, FieldOp op) {
  bool binary = op == FieldOp::add || op == FieldOp::mul;
  if (binary && a.p != b.p) throw Error(Errc::ring_mismatch, "field elements over different primes");
  PrimeField f(a.p);
  Coeff x = a.value % a.p;
  Coeff y = b.value % a.p;
  switch (op) {
    case FieldOp::add: return {f.add(x, y), a.p};
    case FieldOp::mul: return {f.mul(x, y), a.p};
    case FieldOp::inv: return {f.inv(x), a.p};
    case FieldOp::neg: return {f.neg(x), a.p};
  }
  throw Error(Errc::invalid_argument, "unknown field operation");
}

}  // namespace pfaffcy
