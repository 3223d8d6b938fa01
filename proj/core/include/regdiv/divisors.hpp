#pragma once

#include <cstdint>
#include <vector>

#include "regdiv/common.hpp"

namespace regdiv {

inline constexpr std::uint64_t kDefaultTrialBudget = 1'000'000;

struct DivisorList {
  BigInt target;
  std::vector<BigInt> divisors;  // strictly increasing, 1 and target included
};

// Trial division up to floor(sqrt(n)), mirrored. Throws BudgetExceededError when
// floor(sqrt(n)) exceeds `budget`.
DivisorList divisors(const BigInt& n, std::uint64_t budget = kDefaultTrialBudget);

BigInt tau(const BigInt& n, std::uint64_t budget = kDefaultTrialBudget);
bool is_prime(const BigInt& n, std::uint64_t budget = kDefaultTrialBudget);

// tau(m^2 + 1)
BigInt tau_m2p1(const BigInt& m, std::uint64_t budget = kDefaultTrialBudget);

}  // namespace regdiv
