#include "tribwords/kimberling.hpp"

#include <algorithm>
#include <stdexcept>

#include "tribwords/navigator.hpp"

namespace tribwords {

namespace {

u64 add_or_throw(u64 a, u64 b, const char* what) {
  const auto r = checked_add(a, b);
  if (!r)
    throw std::overflow_error(std::string(what) + " exceeds 64 bits");
  return *r;
}

bool is_zero_block(Block b) { return b == Block::Pair00 || b == Block::Zero; }

} // namespace

Word BlockFactorization::expand() const {
  Word w(2);
  for (auto b : blocks) {
    switch (b) {
    case Block::Pair00:
      w.push_back(0);
      w.push_back(0);
      break;
    case Block::Zero:
      w.push_back(0);
      break;
    case Block::One:
      w.push_back(1);
      break;
    }
  }
  return w;
}

bool BlockFactorization::is_maximal() const {
  for (std::size_t i = 0; i + 1 < blocks.size(); ++i)
    if (blocks[i] == Block::Zero && is_zero_block(blocks[i + 1]))
      return false;
  return true;
}

bool BlockFactorization::has_isolated_zero_blocks() const {
  for (std::size_t i = 0; i + 1 < blocks.size(); ++i)
    if (is_zero_block(blocks[i]) && is_zero_block(blocks[i + 1]))
      return false;
  return true;
}

Word BlockFactorization::as_word() const {
  std::vector<Letter> letters;
  letters.reserve(blocks.size());
  for (auto b : blocks)
    letters.push_back(static_cast<Letter>(b));
  return Word(3, std::move(letters));
}

BlockFactorization factor_blocks(const Word& w) {
  if (w.alphabet_size() > 2)
    throw std::invalid_argument("factor_blocks: binary word expected");
  BlockFactorization out;
  out.blocks.reserve(w.size());
  std::size_t i = 0;
  while (i < w.size()) {
    if (w[i] == 1) {
      out.blocks.push_back(Block::One);
      ++i;
      continue;
    }
    std::size_t run = 0;
    while (i + run < w.size() && w[i + run] == 0)
      ++run;
    out.blocks.insert(out.blocks.end(), run / 2, Block::Pair00);
    if (run % 2)
      out.blocks.push_back(Block::Zero);
    i += run;
  }
  return out;
}

Word inflate_step(const Word& w) { return apply(morphisms::inflation(), factor_blocks(w).as_word()); }

Word kimberling_iterate(int i) {
  if (i < 0)
    throw std::invalid_argument("kimberling_iterate: negative index");
  Word w = Word::parse("00", 2);
  for (int k = 0; k < i; ++k)
    w = inflate_step(w);
  return w;
}

BuildMethod parse_build_method(std::string_view name) {
  if (name == "inflation")
    return BuildMethod::Inflation;
  if (name == "morphic")
    return BuildMethod::Morphic;
  if (name == "positional")
    return BuildMethod::Positional;
  throw std::invalid_argument("unknown build method '" + std::string(name) + "'");
}

std::string_view to_string(BuildMethod method) {
  switch (method) {
  case BuildMethod::Inflation:
    return "inflation";
  case BuildMethod::Morphic:
    return "morphic";
  case BuildMethod::Positional:
    return "positional";
  }
  return "?";
}

Word build_b(std::size_t len, BuildMethod method) {
  switch (method) {
  case BuildMethod::Inflation: {
    // B_0 and B_1 are not prefixes of B.
    Word w = kimberling_iterate(2);
    while (w.size() < len)
      w = inflate_step(w);
    w.truncate(len);
    return w;
  }
  case BuildMethod::Morphic: {
    Word w(2);
    if (len == 0)
      return w;
    w.push_back(0);
    w.append(apply(morphisms::f(), tribonacci_prefix(len)));
    w.truncate(len);
    return w;
  }
  case BuildMethod::Positional: {
    std::vector<Letter> letters(len);
    for (std::size_t n = 0; n < len; ++n)
      letters[n] = b_letter(n);
    return Word(2, std::move(letters));
  }
  }
  throw std::invalid_argument("build_b: unknown method");
}

u64 count_occurrences(const Word& text, const Word& pattern) {
  if (pattern.empty() || pattern.size() > text.size())
    return 0;
  const auto t = text.letters();
  const auto p = pattern.letters();
  u64 count = 0;
  for (std::size_t i = 0; i + p.size() <= t.size(); ++i)
    if (std::equal(p.begin(), p.end(), t.begin() + static_cast<std::ptrdiff_t>(i)))
      ++count;
  return count;
}

std::vector<IterateStats> iterate_stats(int i_max) {
  if (i_max < 0)
    throw std::invalid_argument("iterate_stats: negative index");
  std::vector<IterateStats> out;
  out.reserve(static_cast<std::size_t>(i_max) + 1);

  const Word one = Word::parse("1", 2);
  const Word pair = Word::parse("00", 2);
  Word w = Word::parse("00", 2);
  for (int i = 0; i <= std::min(i_max, kMaterializedIterates); ++i) {
    if (i > 0)
      w = inflate_step(w);
    out.push_back({i, w.size(), count_occurrences(w, one), count_occurrences(w, pair), true});
  }

  for (int i = kMaterializedIterates + 1; i <= i_max; ++i) {
    const auto& prev = out[static_cast<std::size_t>(i - 1)];
    const auto& prev2 = out[static_cast<std::size_t>(i - 2)];
    IterateStats s;
    s.i = i;
    s.beta = add_or_throw(add_or_throw(prev.beta, prev.n1, "beta"), add_or_throw(prev.n00, prev.n00, "beta"), "beta");
    s.n1 = add_or_throw(prev.n1, add_or_throw(prev.n00, prev.n00, "N1"), "N1");
    s.n00 = add_or_throw(prev2.n1, prev2.n00, "N00");
    s.measured = false;
    out.push_back(s);
  }
  return out;
}

u64 kimberling_c(int i) {
  if (i < 0)
    throw std::invalid_argument("kimberling_c: negative index");
  std::vector<u64> c{2, 4, 6, 10};
  for (int k = 4; k <= i; ++k) {
    const auto twice = checked_mul(c[static_cast<std::size_t>(k - 1)], 2);
    if (!twice)
      throw std::overflow_error("kimberling_c exceeds 64 bits");
    c.push_back(*twice - c[static_cast<std::size_t>(k - 4)]);
  }
  return c[static_cast<std::size_t>(i)];
}

std::vector<IdentityCheck> verify_iterate_identities(int i_max) {
  if (i_max < 2)
    throw std::invalid_argument("verify_iterate_identities: i_max must be >= 2");
  const auto stats = iterate_stats(i_max);
  auto at = [&](int i) -> const IterateStats& { return stats[static_cast<std::size_t>(i)]; };
  auto T = [](int k) { return trib_number(k); };

  std::vector<IdentityCheck> out;
  auto run = [&](std::string identity, int first, int last, auto&& holds) {
    IdentityCheck check{std::move(identity), first, last, true, std::nullopt};
    for (int i = first; i <= last; ++i) {
      if (!holds(i)) {
        check.pass = false;
        check.first_failure = i;
        break;
      }
    }
    out.push_back(std::move(check));
  };

  run("beta(i) = T(i+2) + T(i) + 1", 2, i_max, [&](int i) { return at(i).beta == T(i + 2) + T(i) + 1; });
  run("N00(i) = T(i-1) + T(i-2)", 2, i_max, [&](int i) { return at(i).n00 == T(i - 1) + T(i - 2); });
  run("N1(i) = 2 T(i)", 2, i_max, [&](int i) { return at(i).n1 == 2 * T(i); });
  run("beta(i+1) = beta(i) + N1(i) + 2 N00(i)", 0, i_max - 1,
      [&](int i) { return at(i + 1).beta == at(i).beta + at(i).n1 + 2 * at(i).n00; });
  run("N00(i+1) = N1(i-1) + N00(i-1)", 1, i_max - 1,
      [&](int i) { return at(i + 1).n00 == at(i - 1).n1 + at(i - 1).n00; });
  run("N1(i+1) = N1(i) + 2 N00(i)", 0, i_max - 1,
      [&](int i) { return at(i + 1).n1 == at(i).n1 + 2 * at(i).n00; });
  run("beta(i) = 2 beta(i-1) - beta(i-4)", 4, i_max,
      [&](int i) { return at(i).beta + at(i - 4).beta == 2 * at(i - 1).beta; });
  run("beta(i) = c(i)", 0, i_max, [&](int i) { return at(i).beta == kimberling_c(i); });
  return out;
}

} // namespace tribwords
