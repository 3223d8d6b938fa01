#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>

#include "regdiv/common.hpp"
#include "regdiv/sequence.hpp"

namespace regdiv::detail {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("uint64 add overflow");
  return r;
}

inline std::uint64_t checked_sub(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("uint64 sub underflow");
  return r;
}

inline std::uint64_t checked_twice(std::uint64_t a) { return checked_add(a, a); }

inline BigInt checked_add(const BigInt& a, const BigInt& b) { return a + b; }
inline BigInt checked_sub(const BigInt& a, const BigInt& b) { return a - b; }
inline BigInt checked_twice(const BigInt& a) { return a << 1; }

RowGenerator<BigInt> promote(const RowGenerator<std::uint64_t>& gen);

}  // namespace regdiv::detail
