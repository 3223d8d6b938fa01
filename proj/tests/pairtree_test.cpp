#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "regdiv/pairtree.hpp"
#include "regdiv/sequence.hpp"

using regdiv::BigInt;
using regdiv::Pair;
using regdiv::PathWord;
using regdiv::Step;

TEST(Pair, Validation) {
  EXPECT_NO_THROW(Pair(5, 3));
  EXPECT_THROW(Pair(3, 3), regdiv::InvalidPairError);
  EXPECT_THROW(Pair(0, 0), regdiv::InvalidPairError);
  EXPECT_THROW(Pair(1, -1), regdiv::InvalidPairError);
  EXPECT_EQ(Pair(5, 3).cofactor(), 2);
  EXPECT_EQ(Pair(13, 5).to_string(), "(13,5)");
}

TEST(Pair, ChildMaps) {
  EXPECT_EQ(regdiv::left_child(Pair(1, 0)), Pair(1, 1));
  EXPECT_EQ(regdiv::left_child(Pair(2, 1)), Pair(2, 3));
  EXPECT_EQ(regdiv::left_child(Pair(5, 3)), Pair(5, 8));
  EXPECT_EQ(regdiv::right_child(Pair(1, 0)), Pair(2, 1));
  EXPECT_EQ(regdiv::right_child(Pair(1, 1)), Pair(5, 3));
  EXPECT_EQ(regdiv::right_child(Pair(5, 3)), Pair(13, 5));
}

TEST(Pair, RightChildMatchesDefinition) {
  // R(d, m) = (((m + d)^2 + 1) / d, m + (m^2 + 1) / d), evaluated literally.
  for (const auto& row : regdiv::pair_rows(10)) {
    for (const Pair& p : row) {
      const BigInt& d = p.d();
      const BigInt& m = p.m();
      EXPECT_EQ(regdiv::right_child(p), Pair(((m + d) * (m + d) + 1) / d, m + (m * m + 1) / d));
    }
  }
}

TEST(Pair, Involution) {
  EXPECT_EQ(regdiv::involute(Pair(1, 0)), Pair(1, 0));
  EXPECT_EQ(regdiv::involute(Pair(2, 1)), Pair(1, 1));
  EXPECT_EQ(regdiv::involute(Pair(5, 3)), Pair(2, 3));
}

TEST(Pair, ParentExamples) {
  EXPECT_EQ(regdiv::parent(Pair(13, 5)), (regdiv::ParentLink{Step::R, Pair(5, 3)}));
  EXPECT_EQ(regdiv::parent(Pair(1, 1)), (regdiv::ParentLink{Step::L, Pair(1, 0)}));
  EXPECT_EQ(regdiv::parent(Pair(2, 1)), (regdiv::ParentLink{Step::R, Pair(1, 0)}));
  EXPECT_THROW(regdiv::parent(Pair(1, 0)), regdiv::RootHasNoParentError);
}

TEST(Pair, ParentDetectsBrokenInvariant) {
  // (3, 3) is not a divisor pair; both inverse maps look admissible.
  EXPECT_THROW(regdiv::parent(Pair::unchecked(3, 3)), regdiv::InternalConsistencyError);
}

TEST(Path, Examples) {
  EXPECT_TRUE(regdiv::path_from_root(Pair(1, 0)).empty());
  EXPECT_EQ(regdiv::path_from_root(Pair(5, 3)).to_string(), "LR");
  EXPECT_EQ(regdiv::path_from_root(Pair(10, 3)).to_string(), "RRR");
  EXPECT_EQ(regdiv::index_of_pair(Pair(1, 0)), 1);
  EXPECT_EQ(regdiv::index_of_pair(Pair(5, 3)), 5);
  EXPECT_EQ(regdiv::index_of_pair(Pair(13, 5)), 11);
  EXPECT_EQ(regdiv::pair_at_index(1), Pair(1, 0));
  EXPECT_EQ(regdiv::pair_at_index(3), Pair(2, 1));
  EXPECT_EQ(regdiv::pair_at_index(6), Pair(2, 3));
  EXPECT_THROW(regdiv::pair_at_index(0), regdiv::DomainError);
}

TEST(Path, WordParsing) {
  const PathWord w = PathWord::parse("LRR");
  EXPECT_EQ(w.to_index(), 11);
  EXPECT_EQ(PathWord::from_index(11), w);
  EXPECT_EQ(w.apply(regdiv::root_pair()), Pair(13, 5));
  EXPECT_THROW(PathWord::parse("LXR"), regdiv::DomainError);
}

TEST(Rows, Examples) {
  const auto one = regdiv::pair_rows(1);
  ASSERT_EQ(one.size(), 2u);
  EXPECT_EQ(one[0], std::vector<Pair>{Pair(1, 0)});
  EXPECT_EQ(one[1], (std::vector<Pair>{Pair(1, 1), Pair(2, 1)}));
  EXPECT_EQ(regdiv::pair_rows(0).size(), 1u);
  EXPECT_EQ(regdiv::pair_rows(2)[2], (std::vector<Pair>{Pair(1, 2), Pair(5, 3), Pair(2, 3), Pair(5, 2)}));
  EXPECT_EQ(regdiv::pair_rows(3)[3],
            (std::vector<Pair>{Pair(1, 3), Pair(10, 7), Pair(5, 8), Pair(13, 5), Pair(2, 5),
                               Pair(13, 8), Pair(5, 7), Pair(10, 3)}));
  regdiv::Limits limits;
  limits.max_depth = 3;
  EXPECT_THROW(regdiv::pair_rows(4, limits), regdiv::ResourceLimitError);
}

TEST(Rows, ValidDistinctSymmetricToDepth16) {
  const auto rows = regdiv::pair_rows(16);
  std::set<Pair> seen;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& row = rows[k];
    ASSERT_EQ(row.size(), std::size_t{1} << k);
    for (std::size_t j = 0; j < row.size(); ++j) {
      ASSERT_TRUE(Pair::is_valid(row[j].d(), row[j].m()));
      ASSERT_TRUE(seen.insert(row[j]).second) << row[j];
      ASSERT_EQ(row[j], regdiv::involute(row[row.size() - 1 - j]));
    }
  }
}

TEST(Rows, ConjugationAndParentInverseToDepth12) {
  for (const auto& row : regdiv::pair_rows(12)) {
    for (const Pair& p : row) {
      ASSERT_EQ(regdiv::right_child(p),
                regdiv::involute(regdiv::left_child(regdiv::involute(p))));
      ASSERT_EQ(regdiv::parent(regdiv::left_child(p)), (regdiv::ParentLink{Step::L, p}));
      ASSERT_EQ(regdiv::parent(regdiv::right_child(p)), (regdiv::ParentLink{Step::R, p}));
    }
  }
}

TEST(Rows, CompletenessForSmallM) {
  for (std::uint64_t m = 0; m <= 64; ++m) {
    for (std::uint64_t d : oracle::naive_divisors(m * m + 1)) {
      const Pair p(d, m);
      const PathWord w = regdiv::path_from_root(p);
      ASSERT_EQ(w.apply(regdiv::root_pair()), p);
      // Inequality min(d, e) <= m < max(d, e), equality only at (1,1), (2,1).
      if (m >= 1) {
        const std::uint64_t e = (m * m + 1) / d;
        ASSERT_LE(std::min(d, e), m);
        ASSERT_LT(m, std::max(d, e));
        ASSERT_EQ(std::min(d, e) == m, m == 1);
      }
    }
  }
}

TEST(Rows, IndexRoundTripAndSecondComponent) {
  const auto s = oracle::tree_sequence(16);
  for (std::uint64_t n = 1; n <= (std::uint64_t{1} << 16); ++n) {
    const Pair p = regdiv::pair_at_index(n);
    ASSERT_EQ(p.m(), s[n]);
    ASSERT_EQ(regdiv::index_of_pair(p), n);
  }
}

TEST(Rows, DeepPathsRoundTrip) {
  // A long random walk; path reconstruction must retrace it exactly.
  std::string word;
  std::uint64_t state = 12345;
  for (int i = 0; i < 300; ++i) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    word.push_back((state >> 63) ? 'R' : 'L');
  }
  const PathWord w = PathWord::parse(word);
  const Pair p = w.apply(regdiv::root_pair());
  EXPECT_TRUE(Pair::is_valid(p.d(), p.m()));
  EXPECT_EQ(regdiv::path_from_root(p), w);
  regdiv::Evaluator eval;
  EXPECT_EQ(eval(w.to_index()), p.m());
}
