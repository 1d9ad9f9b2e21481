#include <gtest/gtest.h>

#include <random>

#include "tribwords/numeration.hpp"
#include "tribwords/words.hpp"

using namespace tribwords;

namespace {

constexpr const char* kPrintedTr = "01020100102010102010010201020100102010102010";

Word random_word(std::mt19937_64& rng, unsigned alphabet, std::size_t len) {
  std::vector<Letter> v(len);
  for (auto& a : v)
    a = static_cast<Letter>(rng() % alphabet);
  return Word(alphabet, v);
}

// T_n with T_{-1} = 0.
u64 T(int n) { return n < 0 ? 0 : trib_number(n); }

} // namespace

TEST(WordTest, ParseAndRender) {
  const Word w = Word::parse("0102", 3);
  EXPECT_EQ(w.size(), 4u);
  EXPECT_EQ(w[3], 2);
  EXPECT_EQ(w.to_string(), "0102");
  EXPECT_THROW(Word::parse("012", 2), std::invalid_argument);
  EXPECT_THROW(Word::parse("3", 3), std::invalid_argument);
  EXPECT_EQ(w.prefix(2).to_string(), "01");
  EXPECT_EQ(w.substr(1, 2).to_string(), "10");
  EXPECT_TRUE(w.starts_with(Word::parse("010", 3)));
}

TEST(MorphismTest, ApplyExamples) {
  EXPECT_EQ(apply(morphisms::phi(), Word::parse("0", 3)).to_string(), "01");
  EXPECT_EQ(apply(morphisms::pi(), Word::parse("010", 3)).to_string(), "100101100");
  EXPECT_TRUE(apply(morphisms::phi(), Word(3)).empty());
}

TEST(MorphismTest, ApplyRejectsForeignLetters) {
  EXPECT_THROW(apply(morphisms::f(), Word::parse("0123", 4)), std::invalid_argument);
}

TEST(MorphismTest, RejectsErasingImages) {
  EXPECT_THROW(Morphism("bad", 2, 2, {Word::parse("0", 2), Word(2)}), std::invalid_argument);
}

TEST(MorphismTest, ComposeExamples) {
  const Morphism fp = compose(morphisms::f(), morphisms::phi());
  EXPECT_EQ(fp, morphisms::pi());
  EXPECT_EQ(compose(morphisms::identity(3), morphisms::phi()), morphisms::phi());
  const Morphism pp = compose(morphisms::phi(), morphisms::phi());
  EXPECT_EQ(pp.image(0).to_string(), "0102");
  EXPECT_EQ(pp.image(1).to_string(), "010");
  EXPECT_EQ(pp.image(2).to_string(), "01");
  EXPECT_THROW(compose(morphisms::phi(), morphisms::f()), std::invalid_argument);
}

TEST(MorphismTest, PiImageOfB1IsPrefixOfShiftedB5) {
  const Word b5 = Word::parse("01001011001010010110010010110010", 2);
  const Word img = apply(morphisms::pi(), Word::parse("010", 3));
  EXPECT_TRUE(b5.substr(1, b5.size() - 1).starts_with(img));
}

TEST(FixedPoint, Examples) {
  EXPECT_EQ(fixed_point_prefix(morphisms::phi(), 0, 20).to_string(), "01020100102010102010");
  EXPECT_EQ(fixed_point_prefix(morphisms::phi(), 0, 1).to_string(), "0");
  EXPECT_EQ(fixed_point_prefix(morphisms::phi(), 0, 44).to_string(), kPrintedTr);
  EXPECT_EQ(tribonacci_prefix(44).to_string(), kPrintedTr);
}

TEST(FixedPoint, RejectsNonProlongableSeed) {
  EXPECT_THROW(fixed_point_prefix(morphisms::phi(), 1, 10), std::invalid_argument);
  EXPECT_THROW(fixed_point_prefix(morphisms::f(), 0, 10), std::invalid_argument);
}

TEST(FixedPoint, IsFixedByPhi) {
  const Word tr = tribonacci_prefix(50000);
  const Word img = apply(morphisms::phi(), tr.prefix(20000));
  EXPECT_EQ(img.prefix(30000), tr.prefix(30000));
}

TEST(Parikh, Examples) {
  EXPECT_EQ(parikh(Word::parse("010", 3)).counts, (std::vector<u64>{2, 1, 0}));
  EXPECT_EQ(parikh(Word(3)).counts, (std::vector<u64>{0, 0, 0}));
  const auto m = incidence(morphisms::pi());
  ASSERT_EQ(m.entries.size(), 2u);
  EXPECT_EQ(m.entries[0], (std::vector<u64>{2, 1, 1}));
  EXPECT_EQ(m.entries[1], (std::vector<u64>{1, 2, 1}));
}

TEST(Parikh, IncidenceTimesParikhIsParikhOfImage) {
  std::mt19937_64 rng(3);
  for (const auto* m : {&morphisms::phi(), &morphisms::f(), &morphisms::pi(), &morphisms::inflation()}) {
    for (int i = 0; i < 200; ++i) {
      const Word w = random_word(rng, m->source_size(), rng() % 60);
      ASSERT_EQ(incidence(*m) * parikh(w), parikh(apply(*m, w))) << m->name();
    }
  }
}

TEST(Parikh, ClosedFormsForTribonacciBispecialsAndReturns) {
  Word b = Word::parse("0", 3);
  Word r = Word::parse("0", 3);
  for (int n = 0; n <= 18; ++n) {
    if (n > 0) {
      b = apply(morphisms::phi(), b) + Word::parse("0", 3);
      r = apply(morphisms::phi(), r);
    }
    const auto pb = parikh(b).counts;
    EXPECT_EQ(2 * pb[0], T(n + 3) + T(n + 1) - 1) << n;
    EXPECT_EQ(2 * pb[1], T(n + 2) + T(n) - 1) << n;
    EXPECT_EQ(2 * pb[2], T(n + 1) + T(n - 1) - 1) << n;
    EXPECT_EQ(parikh(r).counts, (std::vector<u64>{T(n + 1), T(n), T(n - 1)})) << n;
  }
}
