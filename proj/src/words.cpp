#include "tribwords/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace tribwords {

namespace {

void check_alphabet(unsigned alphabet_size) {
  if (alphabet_size == 0 || alphabet_size > kMaxAlphabet)
    throw std::invalid_argument("alphabet size must be in 1.." + std::to_string(kMaxAlphabet));
}

} // namespace

Word::Word(unsigned alphabet_size) : alphabet_(alphabet_size) { check_alphabet(alphabet_size); }

Word::Word(unsigned alphabet_size, std::vector<Letter> letters)
    : alphabet_(alphabet_size), letters_(std::move(letters)) {
  check_alphabet(alphabet_size);
  for (auto a : letters_)
    if (a >= alphabet_)
      throw std::invalid_argument("letter " + std::to_string(a) + " outside alphabet of size " +
                                  std::to_string(alphabet_));
}

Word Word::parse(std::string_view digits, unsigned alphabet_size) {
  std::vector<Letter> letters;
  letters.reserve(digits.size());
  for (char ch : digits) {
    if (ch < '0' || ch > '9')
      throw std::invalid_argument("non-digit '" + std::string(1, ch) + "' in word");
    letters.push_back(static_cast<Letter>(ch - '0'));
  }
  return Word(alphabet_size, std::move(letters));
}

void Word::push_back(Letter a) {
  if (a >= alphabet_)
    throw std::invalid_argument("letter " + std::to_string(a) + " outside alphabet");
  letters_.push_back(a);
}

void Word::append(const Word& other) {
  if (other.alphabet_ > alphabet_ &&
      std::any_of(other.letters_.begin(), other.letters_.end(), [&](Letter a) { return a >= alphabet_; }))
    throw std::invalid_argument("append: letters outside alphabet");
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
}

void Word::truncate(std::size_t n) {
  if (n < letters_.size())
    letters_.resize(n);
}

Word Word::prefix(std::size_t n) const { return substr(0, n); }

Word Word::substr(std::size_t pos, std::size_t len) const {
  if (pos > letters_.size())
    throw std::out_of_range("Word::substr");
  const std::size_t end = std::min(letters_.size(), pos + len);
  Word w(alphabet_);
  w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                    letters_.begin() + static_cast<std::ptrdiff_t>(end));
  return w;
}

bool Word::starts_with(const Word& w) const {
  return w.size() <= size() && std::equal(w.letters_.begin(), w.letters_.end(), letters_.begin());
}

std::string Word::to_string() const {
  std::string s(letters_.size(), '0');
  for (std::size_t i = 0; i < letters_.size(); ++i)
    s[i] = static_cast<char>('0' + letters_[i]);
  return s;
}

Word operator+(const Word& a, const Word& b) {
  Word out(std::max(a.alphabet_size(), b.alphabet_size()));
  out.reserve(a.size() + b.size());
  out.append(a);
  out.append(b);
  return out;
}

Morphism::Morphism(std::string name, unsigned source_size, unsigned target_size, std::vector<Word> images)
    : name_(std::move(name)), source_(source_size), target_(target_size), images_(std::move(images)) {
  check_alphabet(source_size);
  check_alphabet(target_size);
  if (images_.size() != source_size)
    throw std::invalid_argument("morphism " + name_ + ": expected one image per source letter");
  for (auto& img : images_) {
    if (img.empty())
      throw std::invalid_argument("morphism " + name_ + ": erasing images are not supported");
    for (auto a : img.letters())
      if (a >= target_size)
        throw std::invalid_argument("morphism " + name_ + ": image letter outside target alphabet");
    img = Word(target_size, {img.letters().begin(), img.letters().end()});
  }
}

const Word& Morphism::image(Letter a) const {
  if (a >= source_)
    throw std::invalid_argument("morphism " + name_ + ": letter " + std::to_string(a) + " outside source alphabet");
  return images_[a];
}

Word apply(const Morphism& m, const Word& w) {
  std::size_t total = 0;
  for (auto a : w.letters())
    total += m.image(a).size();
  std::vector<Letter> out;
  out.reserve(total);
  for (auto a : w.letters()) {
    const auto img = m.images()[a].letters();
    out.insert(out.end(), img.begin(), img.end());
  }
  return Word(m.target_size(), std::move(out));
}

Morphism compose(const Morphism& outer, const Morphism& inner) {
  if (inner.target_size() != outer.source_size())
    throw std::invalid_argument("compose: alphabet mismatch between " + outer.name() + " and " + inner.name());
  std::vector<Word> images;
  images.reserve(inner.source_size());
  for (const auto& img : inner.images())
    images.push_back(apply(outer, img));
  return Morphism(outer.name() + "." + inner.name(), inner.source_size(), outer.target_size(), std::move(images));
}

Word fixed_point_prefix(const Morphism& m, Letter seed, std::size_t len) {
  const Word& first = m.image(seed);
  if (first.size() < 2 || first[0] != seed)
    throw std::invalid_argument("morphism " + m.name() + " is not prolongable on " + std::to_string(seed));
  if (m.target_size() > m.source_size())
    throw std::invalid_argument("morphism " + m.name() + " maps outside its own alphabet");

  // The fixed point is x = m(x): once x[0..i) is known, x[i] is expanded in place.
  std::vector<Letter> buf;
  buf.reserve(len + first.size());
  buf.push_back(seed);
  std::size_t next = 0;
  while (buf.size() < len) {
    const auto img = m.images()[buf[next]].letters();
    const std::size_t skip = next == 0 ? 1 : 0;
    buf.insert(buf.end(), img.begin() + static_cast<std::ptrdiff_t>(skip), img.end());
    ++next;
  }
  buf.resize(len);
  return Word(m.source_size(), std::move(buf));
}

ParikhVector IncidenceMatrix::operator*(const ParikhVector& v) const {
  ParikhVector out;
  out.counts.assign(entries.size(), 0);
  for (std::size_t a = 0; a < entries.size(); ++a) {
    if (entries[a].size() != v.counts.size())
      throw std::invalid_argument("incidence * parikh: dimension mismatch");
    for (std::size_t b = 0; b < v.counts.size(); ++b)
      out.counts[a] += entries[a][b] * v.counts[b];
  }
  return out;
}

ParikhVector parikh(const Word& w) {
  ParikhVector p;
  p.counts.assign(w.alphabet_size(), 0);
  for (auto a : w.letters())
    ++p.counts[a];
  return p;
}

IncidenceMatrix incidence(const Morphism& m) {
  IncidenceMatrix mat;
  mat.entries.assign(m.target_size(), std::vector<std::uint64_t>(m.source_size(), 0));
  for (unsigned b = 0; b < m.source_size(); ++b)
    for (auto a : m.images()[b].letters())
      ++mat.entries[a][b];
  return mat;
}

namespace morphisms {

const Morphism& phi() {
  static const Morphism m("phi", 3, 3, {Word::parse("01", 3), Word::parse("02", 3), Word::parse("0", 3)});
  return m;
}

const Morphism& f() {
  static const Morphism m("f", 3, 2, {Word::parse("10", 2), Word::parse("0", 2), Word::parse("1", 2)});
  return m;
}

const Morphism& pi() {
  static const Morphism m("pi", 3, 2, {Word::parse("100", 2), Word::parse("101", 2), Word::parse("10", 2)});
  return m;
}

const Morphism& inflation() {
  static const Morphism m("inflation", 3, 2,
                          {Word::parse("0101", 2), Word::parse("0", 2), Word::parse("10", 2)});
  return m;
}

Morphism identity(unsigned alphabet_size) {
  std::vector<Word> images;
  for (unsigned a = 0; a < alphabet_size; ++a)
    images.emplace_back(alphabet_size, std::vector<Letter>{static_cast<Letter>(a)});
  return Morphism("id", alphabet_size, alphabet_size, std::move(images));
}

const Morphism& by_name(std::string_view name) {
  if (name == "phi")
    return phi();
  if (name == "f")
    return f();
  if (name == "pi")
    return pi();
  if (name == "inflation")
    return inflation();
  throw std::invalid_argument("unknown morphism '" + std::string(name) + "' (expected phi, f, pi, inflation)");
}

} // namespace morphisms

Word tribonacci_prefix(std::size_t len) {
  if (len == 0)
    return Word(3);
  return fixed_point_prefix(morphisms::phi(), 0, len);
}

} // namespace tribwords
