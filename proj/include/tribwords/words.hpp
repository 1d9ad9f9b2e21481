#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tribwords {

using Letter = std::uint8_t;

inline constexpr unsigned kMaxAlphabet = 4;

/// A finite word over {0, ..., alphabet_size-1}, stored contiguously.
class Word {
public:
  explicit Word(unsigned alphabet_size = 2);
  Word(unsigned alphabet_size, std::vector<Letter> letters);

  /// ASCII digits, e.g. Word::parse("0102", 3).
  static Word parse(std::string_view digits, unsigned alphabet_size);

  unsigned alphabet_size() const { return alphabet_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const { return letters_; }

  void push_back(Letter a);
  void append(const Word& other);
  void reserve(std::size_t n) { letters_.reserve(n); }
  void truncate(std::size_t n);

  Word prefix(std::size_t n) const;
  Word substr(std::size_t pos, std::size_t len) const;
  bool starts_with(const Word& w) const;

  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) { return a.letters_ <=> b.letters_; }

private:
  unsigned alphabet_;
  std::vector<Letter> letters_;
};

/// Concatenation; the result takes the larger alphabet.
Word operator+(const Word& a, const Word& b);

/// Non-erasing letter-to-word substitution.
class Morphism {
public:
  Morphism(std::string name, unsigned source_size, unsigned target_size, std::vector<Word> images);

  const std::string& name() const { return name_; }
  unsigned source_size() const { return source_; }
  unsigned target_size() const { return target_; }
  const Word& image(Letter a) const;
  const std::vector<Word>& images() const { return images_; }

  friend bool operator==(const Morphism& a, const Morphism& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.images_ == b.images_;
  }

private:
  std::string name_;
  unsigned source_;
  unsigned target_;
  std::vector<Word> images_;
};

Word apply(const Morphism& m, const Word& w);

/// outer o inner. Requires inner's target alphabet to equal outer's source alphabet.
Morphism compose(const Morphism& outer, const Morphism& inner);

/// Length-len prefix of the fixed point of m starting with seed.
/// m(seed) must start with seed and have length >= 2.
Word fixed_point_prefix(const Morphism& m, Letter seed, std::size_t len);

struct ParikhVector {
  std::vector<std::uint64_t> counts;
  friend bool operator==(const ParikhVector&, const ParikhVector&) = default;
};

/// entries[a][b] = occurrences of target letter a in the image of source letter b.
struct IncidenceMatrix {
  std::vector<std::vector<std::uint64_t>> entries;
  ParikhVector operator*(const ParikhVector& v) const;
  friend bool operator==(const IncidenceMatrix&, const IncidenceMatrix&) = default;
};

ParikhVector parikh(const Word& w);
IncidenceMatrix incidence(const Morphism& m);

namespace morphisms {

/// Tribonacci substitution 0->01, 1->02, 2->0.
const Morphism& phi();
/// 0->10, 1->0, 2->1.
const Morphism& f();
/// 0->100, 1->101, 2->10; equals f o phi.
const Morphism& pi();
/// Inflation on block tokens: 0 (the block 00) -> 0101, 1 (block 0) -> 0, 2 (block 1) -> 10.
const Morphism& inflation();
Morphism identity(unsigned alphabet_size);

/// Lookup by name ("phi", "f", "pi", "inflation"); throws on unknown names.
const Morphism& by_name(std::string_view name);

} // namespace morphisms

/// Prefix of the Tribonacci word TR = 0102010010201...
Word tribonacci_prefix(std::size_t len);

} // namespace tribwords
