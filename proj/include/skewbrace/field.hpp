#pragma once

// Arithmetic in the prime field F_q, q < 2^31. Elements are plain integers
// in [0, q); the modulus lives in the field object, not in each element.

#include <cstdint>
#include <string>

#include "skewbrace/errors.hpp"

namespace skewbrace {

using FieldElement = std::uint32_t;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

class PrimeField {
 public:
  using value_type = FieldElement;

  explicit PrimeField(std::uint64_t q) : q_(static_cast<value_type>(q)) {
    if (q >= (std::uint64_t{1} << 31) || !is_prime(q)) throw NotPrime(q);
  }

  value_type modulus() const noexcept { return q_; }
  std::uint64_t size() const noexcept { return q_; }

  value_type reduce(std::int64_t x) const noexcept {
    std::int64_t r = x % static_cast<std::int64_t>(q_);
    return static_cast<value_type>(r < 0 ? r + q_ : r);
  }

  value_type add(value_type a, value_type b) const noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= q_ ? s - q_ : s);
  }
  value_type sub(value_type a, value_type b) const noexcept {
    return a >= b ? a - b : static_cast<value_type>(std::uint64_t{a} + q_ - b);
  }
  value_type neg(value_type a) const noexcept { return a == 0 ? 0 : q_ - a; }
  value_type mul(value_type a, value_type b) const noexcept {
    return static_cast<value_type>((std::uint64_t{a} * b) % q_);
  }
  // a + b*c
  value_type mul_add(value_type a, value_type b, value_type c) const noexcept {
    return static_cast<value_type>((a + std::uint64_t{b} * c) % q_);
  }

  value_type pow(value_type a, std::uint64_t e) const noexcept {
    std::uint64_t result = 1, base = a % q_;
    while (e > 0) {
      if (e & 1) result = result * base % q_;
      base = base * base % q_;
      e >>= 1;
    }
    return static_cast<value_type>(result);
  }

  value_type inv(value_type a) const {
    if (a % q_ == 0) throw Error("inverse of zero in F_" + std::to_string(q_));
    return pow(a, q_ - 2);
  }

  // Multiplicative order of a nonzero element.
  std::uint64_t order(value_type a) const {
    if (a % q_ == 0) throw Error("order of zero in F_" + std::to_string(q_));
    std::uint64_t k = 1;
    for (value_type x = a % q_; x != 1; x = mul(x, a)) ++k;
    return k;
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  value_type q_;
};

}  // namespace skewbrace
