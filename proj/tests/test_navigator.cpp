#include <gtest/gtest.h>

#include <random>

#include "tribwords/kimberling.hpp"
#include "tribwords/navigator.hpp"
#include "tribwords/words.hpp"

using namespace tribwords;

namespace {

constexpr std::size_t kScan = 100000;

const Word& tr() {
  static const Word w = fixed_point_prefix(morphisms::phi(), 0, kScan);
  return w;
}

const Word& b() {
  static const Word w = build_b(kScan, BuildMethod::Inflation);
  return w;
}

} // namespace

TEST(TrLetter, Examples) {
  EXPECT_EQ(tr_letter(0), 0);
  EXPECT_EQ(tr_letter(3), 2);
  EXPECT_EQ(tr_letter(7), 0);
}

TEST(TrLetter, MatchesFixedPoint) {
  for (std::size_t y = 0; y < kScan; ++y)
    ASSERT_EQ(tr_letter(y), tr()[y]) << y;
}

TEST(PosNth, Examples) {
  EXPECT_EQ(pos_nth0_tr(1), 1u);
  EXPECT_EQ(pos_nth1_tr(2), 6u);
  EXPECT_EQ(pos_nth2_tr(1), 4u);
  EXPECT_THROW(pos_nth0_tr(0), std::invalid_argument);
  EXPECT_EQ(try_pos_nth_tr(1, 0), u64{0});
}

TEST(PosNth, MatchesScan) {
  std::array<u64, 3> seen{};
  for (std::size_t i = 0; i < kScan; ++i) {
    const Letter a = tr()[i];
    ++seen[a];
    const u64 pos = i + 1;
    if (a == 0)
      ASSERT_EQ(pos_nth0_tr(seen[0]), pos);
    else if (a == 1)
      ASSERT_EQ(pos_nth1_tr(seen[1]), pos);
    else
      ASSERT_EQ(pos_nth2_tr(seen[2]), pos);
  }
}

TEST(PosNth, OverflowIsReported) {
  EXPECT_THROW(pos_nth2_tr(~u64{0} / 2), std::overflow_error);
  EXPECT_FALSE(try_pos_nth_tr(2, ~u64{0} / 2).has_value());
}

TEST(CountLetters, Examples) {
  EXPECT_EQ(count_letters(6), (std::array<u64, 3>{3, 2, 1}));
  EXPECT_EQ(count_letters(0), (std::array<u64, 3>{0, 0, 0}));
  const auto c = count_letters(44);
  EXPECT_EQ(c[0] + c[1] + c[2], 44u);
}

TEST(CountLetters, MatchesScan) {
  std::array<u64, 3> seen{};
  for (std::size_t n = 0; n <= kScan; ++n) {
    ASSERT_EQ(count_letters(n), seen) << n;
    if (n < kScan)
      ++seen[tr()[n]];
  }
}

TEST(FindBlock, Examples) {
  EXPECT_EQ(find_block(1), (BlockLocation{1, 0, 0, 1}));
  EXPECT_EQ(find_block(4), (BlockLocation{4, 1, 0, 4}));
  EXPECT_EQ(find_block(6), (BlockLocation{6, 1, 2, 4}));
  EXPECT_THROW(find_block(0), std::invalid_argument);
}

TEST(FindBlock, AlignsWithPiImageOfTr) {
  // Walk 0 pi(TR) block by block.
  u64 n = 1;
  for (u64 y = 0; n < 50000; ++y) {
    const Word img = morphisms::pi().image(tr()[y]);
    ASSERT_EQ(block_start(y), n);
    for (u64 t = 0; t < img.size(); ++t, ++n)
      ASSERT_EQ(find_block(n), (BlockLocation{n, y, t, block_start(y)}));
  }
}

TEST(BLetter, Examples) {
  EXPECT_EQ(b_letter(0), 0);
  EXPECT_EQ(b_letter(1), 1);
  EXPECT_EQ(b_letter(9), 0);
}

TEST(BLetter, MatchesInflation) {
  for (std::size_t n = 0; n < kScan; ++n)
    ASSERT_EQ(b_letter(n), b()[n]) << n;
}

TEST(BLetter, LargeIndicesAreAccepted) {
  EXPECT_NO_THROW(b_letter(1000000000000000ULL));
  EXPECT_NO_THROW(b_letter(static_cast<u64>(INT64_MAX)));
}

TEST(BLetter, MatchesLongPrefixAtRandomPositions) {
  const Word big = build_b(3000000, BuildMethod::Inflation);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 2000; ++i) {
    const u64 n = rng() % big.size();
    ASSERT_EQ(b_letter(n), big[n]) << n;
  }
}

TEST(Bpref, Examples) {
  EXPECT_EQ(bpref1(10), 4u);
  EXPECT_EQ(bpref1(0), 0u);
  EXPECT_EQ(bpref1(32), 14u);
  EXPECT_EQ(bpref0(10), 6u);
}

TEST(Bpref, MatchesScan) {
  u64 ones = 0;
  for (std::size_t n = 0; n <= kScan; ++n) {
    ASSERT_EQ(bpref1(n), ones) << n;
    ASSERT_EQ(bpref0(n), n - ones) << n;
    if (n < kScan)
      ones += b()[n];
  }
}

TEST(NthB, Examples) {
  EXPECT_EQ(nth1_b(1), 2u);
  EXPECT_EQ(nth0_b(2), 3u);
  EXPECT_EQ(nth1_b(4), 8u);
  EXPECT_THROW(nth1_b(0), std::invalid_argument);
}

TEST(NthB, MatchesScan) {
  u64 ones = 0, zeros = 0;
  for (std::size_t i = 0; i < kScan; ++i) {
    if (b()[i] == 1)
      ASSERT_EQ(nth1_b(++ones), i + 1);
    else
      ASSERT_EQ(nth0_b(++zeros), i + 1);
  }
}

TEST(NthB, InvertsPrefixCountsFarOut) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 2000; ++i) {
    const u64 n = 1 + rng() % 1000000000000ULL;
    const u64 p1 = nth1_b(n);
    ASSERT_EQ(b_letter(p1 - 1), 1);
    ASSERT_EQ(bpref1(p1), n);
    const u64 p0 = nth0_b(n);
    ASSERT_EQ(b_letter(p0 - 1), 0);
    ASSERT_EQ(bpref0(p0), n);
  }
}

TEST(IndexBounds, HoldUpToTenThousand) {
  const auto report = verify_index_bounds(10000, 2);
  EXPECT_TRUE(report.pass());
  ASSERT_EQ(report.families.size(), 5u);
  for (const auto& f : report.families) {
    EXPECT_TRUE(f.pass) << f.name;
    EXPECT_GE(f.worst_low_slack, 0) << f.name;
    EXPECT_GE(f.worst_high_slack, 0) << f.name;
  }
}

TEST(IndexBounds, ThreadCountDoesNotChangeTheReport) {
  const auto a = verify_index_bounds(3000, 1);
  const auto b = verify_index_bounds(3000, 3);
  ASSERT_EQ(a.families.size(), b.families.size());
  for (std::size_t i = 0; i < a.families.size(); ++i) {
    EXPECT_EQ(a.families[i].worst_low_slack, b.families[i].worst_low_slack);
    EXPECT_EQ(a.families[i].worst_high_slack, b.families[i].worst_high_slack);
  }
}

TEST(IndexBounds, DistanceToFloorPsiCanReachTwo) {
  // I0 stays within 1 of A0 but not of floor(psi n).
  EXPECT_EQ(floor_psi_times(69148), nth0_b(69148) + 2);
  EXPECT_EQ(pos_nth0_tr(69148), nth0_b(69148) + 1);
  for (u64 n = 1; n < 69148; ++n) {
    const auto d = static_cast<std::int64_t>(floor_psi_times(n)) - static_cast<std::int64_t>(nth0_b(n));
    ASSERT_LE(std::abs(d), 1) << n;
  }
}
