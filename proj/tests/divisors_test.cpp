#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "regdiv/divisors.hpp"

using regdiv::BigInt;

namespace {

std::vector<std::uint64_t> u64(const std::vector<BigInt>& v) {
  std::vector<std::uint64_t> out;
  for (const auto& x : v) out.push_back(x.convert_to<std::uint64_t>());
  return out;
}

}  // namespace

TEST(Divisors, Examples) {
  EXPECT_EQ(u64(regdiv::divisors(1).divisors), (std::vector<std::uint64_t>{1}));
  EXPECT_EQ(u64(regdiv::divisors(10).divisors), (std::vector<std::uint64_t>{1, 2, 5, 10}));
  EXPECT_EQ(u64(regdiv::divisors(26).divisors), (std::vector<std::uint64_t>{1, 2, 13, 26}));
  EXPECT_EQ(u64(regdiv::divisors(36).divisors),
            (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 9, 12, 18, 36}));
  EXPECT_EQ(regdiv::tau(1), 1);
  EXPECT_EQ(regdiv::tau(2), 2);
  EXPECT_EQ(regdiv::tau(10), 4);
  EXPECT_TRUE(regdiv::is_prime(2));
  EXPECT_TRUE(regdiv::is_prime(17));
  EXPECT_FALSE(regdiv::is_prime(10));
  EXPECT_FALSE(regdiv::is_prime(1));
  EXPECT_EQ(regdiv::tau_m2p1(0), 1);
  EXPECT_EQ(regdiv::tau_m2p1(3), 4);
  EXPECT_EQ(regdiv::tau_m2p1(4), 2);
}

TEST(Divisors, Errors) {
  EXPECT_THROW(regdiv::divisors(0), regdiv::DomainError);
  EXPECT_THROW(regdiv::tau_m2p1(-1), regdiv::DomainError);
  EXPECT_THROW(regdiv::divisors(BigInt(1) << 50, 1000), regdiv::BudgetExceededError);
  EXPECT_NO_THROW(regdiv::divisors(1'000'000, 1000));
}

TEST(Divisors, BeyondSixtyFourBitsExceedsDefaultBudget) {
  EXPECT_THROW(regdiv::divisors(BigInt(1) << 70), regdiv::BudgetExceededError);
  // Largest target the default budget admits: floor(sqrt(n)) = 10^6.
  EXPECT_NO_THROW(regdiv::tau(BigInt(1'000'000) * 1'000'000 + 1));
}

TEST(Divisors, MatchesNaiveOracle) {
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    ASSERT_EQ(u64(regdiv::divisors(n).divisors), oracle::naive_divisors(n)) << n;
  }
}

TEST(Divisors, ProductPairingUpTo1e5) {
  for (std::uint64_t n = 1; n <= 100000; ++n) {
    const auto list = regdiv::divisors(n);
    const auto& d = list.divisors;
    ASSERT_EQ(d.front(), 1);
    ASSERT_EQ(d.back(), n);
    for (std::size_t i = 0; i < d.size(); ++i) {
      ASSERT_EQ(d[i] * d[d.size() - 1 - i], n);
      if (i > 0) ASSERT_LT(d[i - 1], d[i]);
    }
  }
}

TEST(Divisors, TauMultiplicativeOnCoprimePairs) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::uint64_t> dist(1, 9999);
  int checked = 0;
  while (checked < 1000) {
    const std::uint64_t a = dist(rng);
    const std::uint64_t b = dist(rng);
    if (std::gcd(a, b) != 1) continue;
    ASSERT_EQ(regdiv::tau(BigInt(a) * b), regdiv::tau(a) * regdiv::tau(b)) << a << " " << b;
    ++checked;
  }
}
