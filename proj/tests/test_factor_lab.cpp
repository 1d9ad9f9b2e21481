#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "tribwords/factor_lab.hpp"
#include "tribwords/kimberling.hpp"

using namespace tribwords;

namespace {

Word bin(const char* s) { return Word::parse(s, 2); }

const Word& b_prefix() {
  static const Word w = build_b(100000, BuildMethod::Inflation);
  return w;
}

Word random_word(std::mt19937_64& rng, unsigned alphabet, std::size_t len) {
  std::vector<Letter> v(len);
  for (auto& a : v)
    a = static_cast<Letter>(rng() % alphabet);
  return Word(alphabet, v);
}

// Smallest period by direct comparison.
std::size_t naive_period(const Word& w, std::size_t pos, std::size_t len) {
  for (std::size_t p = 1; p < len; ++p) {
    bool ok = true;
    for (std::size_t i = pos; i + p < pos + len && ok; ++i)
      ok = w[i] == w[i + p];
    if (ok)
      return p;
  }
  return len;
}

Rational naive_max_exponent(const Word& w, std::size_t cap) {
  Rational best(0);
  for (std::size_t len = 1; len <= std::min(cap, w.size()); ++len)
    for (std::size_t pos = 0; pos + len <= w.size(); ++pos)
      best = std::max(best, Rational(static_cast<std::int64_t>(len),
                                     static_cast<std::int64_t>(naive_period(w, pos, len))));
  return best;
}

std::set<std::string> naive_factors(const Word& w, std::size_t n) {
  std::set<std::string> out;
  const std::string s = w.to_string();
  for (std::size_t i = 0; i + n <= s.size(); ++i)
    out.insert(s.substr(i, n));
  return out;
}

std::vector<std::string> texts(const std::vector<Word>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws)
    out.push_back(w.to_string());
  return out;
}

} // namespace

TEST(SuffixIndexTest, MatchesNaiveSort) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 40; ++trial) {
    const Word w = random_word(rng, 1 + trial % 4, rng() % 300);
    const SuffixIndex idx(w.letters());
    std::vector<std::uint32_t> expected(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
      expected[i] = static_cast<std::uint32_t>(i);
    std::sort(expected.begin(), expected.end(), [&](std::uint32_t a, std::uint32_t b) {
      return std::lexicographical_compare(w.letters().begin() + a, w.letters().end(), w.letters().begin() + b,
                                          w.letters().end());
    });
    ASSERT_EQ(std::vector<std::uint32_t>(idx.sa().begin(), idx.sa().end()), expected);
    for (std::size_t i = 1; i < w.size(); ++i) {
      std::size_t h = 0;
      while (expected[i] + h < w.size() && expected[i - 1] + h < w.size() &&
             w[expected[i] + h] == w[expected[i - 1] + h])
        ++h;
      ASSERT_EQ(idx.lcp()[i], h);
    }
  }
}

TEST(Complexity, Examples) {
  const FactorReport rep = complexity_profile(b_prefix(), 200);
  EXPECT_EQ(rep.at(1).complexity, 2u);
  EXPECT_EQ(rep.at(5).complexity, 10u);
  for (const auto& row : rep.rows) {
    EXPECT_EQ(row.complexity, 2 * row.n);
    EXPECT_EQ(row.left_special.size(), 2u);
    EXPECT_TRUE(row.saturated);
  }
  EXPECT_TRUE(left_specials_are_prefixes(rep, b_prefix()));
  const FactorReport t = complexity_profile(tribonacci_prefix(20000), 30);
  EXPECT_EQ(t.at(4).complexity, 9u);
  for (const auto& row : t.rows)
    EXPECT_EQ(row.complexity, 2 * row.n + 1);
}

TEST(Complexity, MatchesNaiveFactorSets) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const Word w = random_word(rng, 2, 400);
    const FactorReport rep = complexity_profile(w, 12);
    for (const auto& row : rep.rows)
      ASSERT_EQ(row.complexity, naive_factors(w, row.n).size());
  }
}

TEST(Complexity, RequiresLongEnoughPrefix) {
  EXPECT_THROW(complexity_profile(bin("0101"), 2), std::invalid_argument);
}

TEST(SpecialFactorsTest, ShortBispecials) {
  std::vector<std::string> found;
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& w : special_factors(b_prefix(), n).bispecial)
      found.push_back(w.to_string());
  std::sort(found.begin(), found.end());
  EXPECT_EQ(found, (std::vector<std::string>{"0", "01", "010", "1", "10"}));
}

TEST(SpecialFactorsTest, MatchesNaiveExtensionCount) {
  std::mt19937_64 rng(4);
  const Word w = random_word(rng, 3, 500);
  const std::string s = w.to_string();
  for (std::size_t n = 1; n <= 6; ++n) {
    std::set<std::string> left, right;
    for (const auto& f : naive_factors(w, n)) {
      std::set<char> l, r;
      for (std::size_t i = 0; i + n <= s.size(); ++i) {
        if (s.compare(i, n, f) != 0)
          continue;
        if (i > 0)
          l.insert(s[i - 1]);
        if (i + n < s.size())
          r.insert(s[i + n]);
      }
      if (l.size() > 1)
        left.insert(f);
      if (r.size() > 1)
        right.insert(f);
    }
    const auto sf = special_factors(w, n);
    const auto tl = texts(sf.left), tr = texts(sf.right);
    EXPECT_EQ(std::set<std::string>(tl.begin(), tl.end()), left);
    EXPECT_EQ(std::set<std::string>(tr.begin(), tr.end()), right);
  }
}

TEST(ReturnWords, Examples) {
  EXPECT_EQ(texts(return_words(b_prefix(), bin("10"))), (std::vector<std::string>{"100", "101", "10"}));
  EXPECT_EQ(texts(return_words(bin("00"), bin("0"))), (std::vector<std::string>{"0"}));
  EXPECT_THROW(return_words(bin("0110"), bin("11")), std::invalid_argument);
  EXPECT_EQ(occurrences(bin("0000"), bin("00")), (std::vector<std::size_t>{0, 1, 2}));
}

TEST(ReturnWords, DerivedSequenceOfTenIsTribonacci) {
  const Word d = derived_sequence(b_prefix(), bin("10"));
  EXPECT_EQ(d.prefix(28).to_string(), "0102010010201010201001020102");
  EXPECT_EQ(d, tribonacci_prefix(d.size()));
}

TEST(ReturnWords, ShortestReturnsToPiBn10) {
  for (const auto& c : check_shortest_returns(b_prefix(), 6)) {
    EXPECT_TRUE(c.match()) << c.n;
    EXPECT_EQ(c.expected.size(), trib_number(c.n + 5) - trib_number(c.n + 4));
  }
}

TEST(Exponent, Examples) {
  const auto w = max_exponent(bin("010"), 3);
  EXPECT_EQ(w.exponent, Rational(3, 2));
  EXPECT_EQ(w.period, 2u);
  EXPECT_EQ(w.position, 0u);
  const auto b = max_exponent(b_prefix().prefix(10000), 1000);
  EXPECT_GE(b.exponent, Rational(3));
  EXPECT_LT(b.exponent.to_double(), 3.19149);
}

TEST(Exponent, MatchesNaivePeriodScan) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 60; ++trial) {
    const Word w = random_word(rng, 2 + trial % 2, 5 + rng() % 60);
    const std::size_t cap = 1 + rng() % w.size();
    ASSERT_EQ(max_exponent(w, cap).exponent, naive_max_exponent(w, cap)) << w.to_string() << " cap " << cap;
  }
  const Word bp = b_prefix().prefix(300);
  EXPECT_EQ(max_exponent(bp, 300).exponent, naive_max_exponent(bp, 300));
}

TEST(Exponent, LargestInTwentyThousandPrefixHasBispecialBorder) {
  const Word w = b_prefix().prefix(20000);
  const auto best = max_exponent(w, w.size());
  EXPECT_EQ(best.exponent, Rational(1522, 477));
  EXPECT_EQ(best.period, 1431u);
  EXPECT_EQ(best.length, 4566u);
  const Word border = w.substr(best.position, best.length - best.period);
  bool listed = false;
  for (const auto& rec : theory_bispecials(12))
    if (rec.word == border) {
      listed = true;
      EXPECT_EQ(rec.family, BispecialFamily::PiB101);
      EXPECT_EQ(rec.n.value_or(-1), 10);
    }
  EXPECT_TRUE(listed);
  EXPECT_LT(compare_with_critical_limit(best.exponent), 0);
}

TEST(Balance, Examples) {
  const auto rows = balance_profile(b_prefix(), 200);
  EXPECT_EQ(rows[0].spread(), 1u);
  EXPECT_EQ(rows[46].spread(), 3u);
  for (const auto& r : rows)
    EXPECT_LE(r.spread(), 3u);
  EXPECT_EQ(first_unbalanced_length(rows, 2), std::size_t{47});
  EXPECT_FALSE(first_unbalanced_length(rows, 3).has_value());
  const auto& r47 = rows[46];
  u64 lo = 0, hi = 0;
  for (std::size_t i = 0; i < 47; ++i) {
    lo += b_prefix()[r47.argmin + i];
    hi += b_prefix()[r47.argmax + i];
  }
  EXPECT_EQ(lo, r47.min_ones);
  EXPECT_EQ(hi, r47.max_ones);
}

TEST(Balance, RejectsNonBinaryWords) {
  EXPECT_THROW(balance_profile(tribonacci_prefix(100), 5), std::invalid_argument);
}

TEST(Bispecials, TheoryListMatchesBruteForce) {
  const auto cmp = compare_bispecials(b_prefix(), 300);
  EXPECT_TRUE(cmp.match());
  EXPECT_TRUE(cmp.saturated);
  EXPECT_TRUE(std::is_sorted(cmp.expected.begin(), cmp.expected.end(), [](const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  }));
}

TEST(Bispecials, LengthFormulas) {
  for (int n = 0; n <= 20; ++n) {
    EXPECT_EQ(apply(morphisms::pi(), tribonacci_bispecial(n)).size(), trib_number(n + 5) - 4) << n;
  }
  EXPECT_EQ(tribonacci_bispecial(1).to_string(), "010");
}

TEST(CriticalExponent, FirstTerms) {
  const auto rep = critical_exponent_report(20, 6, 20000);
  EXPECT_EQ(rep.rows[2].e, Rational(3));
  EXPECT_EQ(rep.rows[3].e, Rational(31, 10));
  EXPECT_NEAR(rep.limit, 3.19148788395, 1e-11);
  EXPECT_LT(std::abs(rep.rows[20].value - 3.19148788395), 1e-4);
  EXPECT_TRUE(rep.increasing);
  EXPECT_TRUE(rep.inequality);
  EXPECT_TRUE(rep.below_limit);
  for (const auto& c : rep.crosscheck)
    EXPECT_TRUE(c.match()) << c.n;
}

TEST(CriticalExponent, ExactLimitComparison) {
  EXPECT_LT(compare_with_critical_limit(Rational(319148, 100000)), 0);
  EXPECT_GT(compare_with_critical_limit(Rational(319149, 100000)), 0);
  EXPECT_LT(compare_with_critical_limit(Rational(3)), 0);
}
