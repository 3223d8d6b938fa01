#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "regdiv/bfile.hpp"

using regdiv::BigInt;

TEST(BFile, WritesExactLines) {
  std::ostringstream os;
  regdiv::write_bfile(os, {{1, 0}, {2, 1}, {3, 1}});
  EXPECT_EQ(os.str(), "1 0\n2 1\n3 1\n");
}

TEST(BFile, RejectsMalformedInput) {
  for (const char* bad : {"1  0\n", "1 0 \n", "# comment\n", "1\t0\n", "\n", "1 x\n", "a 1\n"}) {
    std::istringstream is(bad);
    EXPECT_THROW(regdiv::parse_bfile(is), regdiv::DomainError) << bad;
  }
}

TEST(BFile, RoundTripProperty) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<regdiv::BFileEntry> entries;
    const int len = 1 + static_cast<int>(rng() % 40);
    for (int i = 1; i <= len; ++i) {
      BigInt v = rng();
      for (auto extra = rng() % 4; extra > 0; --extra) v = (v << 64) + rng();
      entries.emplace_back(i, v);
    }
    std::ostringstream first;
    regdiv::write_bfile(first, entries);
    std::istringstream is(first.str());
    const auto parsed = regdiv::parse_bfile(is);
    ASSERT_EQ(parsed, entries);
    std::ostringstream second;
    regdiv::write_bfile(second, parsed);
    ASSERT_EQ(second.str(), first.str());
  }
}
