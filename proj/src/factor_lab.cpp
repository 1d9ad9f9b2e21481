#include "tribwords/factor_lab.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "tribwords/kimberling.hpp"

namespace tribwords {

namespace {

struct RawStats {
  u64 complexity = 0;
  std::vector<Word> left;
  std::vector<Word> right;
  std::vector<Word> bispecial;

  friend bool operator==(const RawStats&, const RawStats&) = default;
};

Word slice(std::span<const Letter> text, unsigned alphabet, std::size_t pos, std::size_t len) {
  return Word(alphabet, std::vector<Letter>(text.begin() + static_cast<std::ptrdiff_t>(pos),
                                            text.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

// Each maximal SA interval with lcp >= n is one distinct factor of length n.
RawStats collect(const SuffixIndex& index, unsigned alphabet, std::size_t n) {
  const auto sa = index.sa();
  const auto lcp = index.lcp();
  const auto text = index.text();
  const std::size_t size = index.size();
  RawStats r;
  std::size_t i = 0;
  while (i < size) {
    if (size - sa[i] < n) {
      ++i;
      continue;
    }
    const std::size_t start = sa[i];
    unsigned left = 0;
    unsigned right = 0;
    std::size_t j = i;
    do {
      const std::size_t p = sa[j];
      if (p > 0)
        left |= 1u << text[p - 1];
      if (p + n < size)
        right |= 1u << text[p + n];
      ++j;
    } while (j < size && lcp[j] >= n);
    ++r.complexity;
    const bool ls = std::popcount(left) >= 2;
    const bool rs = std::popcount(right) >= 2;
    if (ls || rs) {
      Word f = slice(text, alphabet, start, n);
      if (ls && rs)
        r.bispecial.push_back(f);
      if (ls)
        r.left.push_back(f);
      if (rs)
        r.right.push_back(std::move(f));
    }
    i = j;
  }
  std::sort(r.left.begin(), r.left.end());
  std::sort(r.right.begin(), r.right.end());
  std::sort(r.bispecial.begin(), r.bispecial.end());
  return r;
}

std::vector<std::size_t> failure_function(std::span<const Letter> s) {
  std::vector<std::size_t> pi(s.size(), 0);
  for (std::size_t q = 1; q < s.size(); ++q) {
    std::size_t k = pi[q - 1];
    while (k > 0 && s[q] != s[k])
      k = pi[k - 1];
    if (s[q] == s[k])
      ++k;
    pi[q] = k;
  }
  return pi;
}

bool is_binary(const Word& w) {
  return std::all_of(w.letters().begin(), w.letters().end(), [](Letter a) { return a <= 1; });
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size())
    return a.size() < b.size();
  return a < b;
}

} // namespace

bool FactorReport::all_saturated() const {
  return std::all_of(rows.begin(), rows.end(), [](const LengthStats& r) { return r.saturated; });
}

FactorReport complexity_profile(const Word& w, std::size_t n_max, bool with_exponent) {
  if (w.size() < 4 * n_max)
    throw std::invalid_argument("complexity_profile: need |w| >= 4 n_max (|w| = " + std::to_string(w.size()) +
                                ", n_max = " + std::to_string(n_max) + ")");
  const Word half = w.prefix(w.size() / 2);
  const SuffixIndex full_index(w.letters());
  const SuffixIndex half_index(half.letters());
  const bool binary = is_binary(w);

  std::vector<BalanceRow> full_balance;
  std::vector<BalanceRow> half_balance;
  if (binary && n_max > 0) {
    full_balance = balance_profile(w, n_max);
    half_balance = balance_profile(half, std::min(n_max, half.size()));
  }

  FactorReport report;
  report.prefix_length = w.size();
  report.n_max = n_max;
  report.rows.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    RawStats full = collect(full_index, w.alphabet_size(), n);
    const RawStats partial = collect(half_index, w.alphabet_size(), n);
    LengthStats row;
    row.n = n;
    row.saturated = full == partial;
    row.complexity = full.complexity;
    row.left_special = std::move(full.left);
    row.right_special = std::move(full.right);
    row.bispecial = std::move(full.bispecial);
    if (binary) {
      row.min_ones = full_balance[n - 1].min_ones;
      row.max_ones = full_balance[n - 1].max_ones;
      if (n > half_balance.size() || half_balance[n - 1].min_ones != *row.min_ones ||
          half_balance[n - 1].max_ones != *row.max_ones)
        row.saturated = false;
    }
    report.rows.push_back(std::move(row));
  }
  if (with_exponent && n_max > 0)
    report.max_exponent = max_exponent(w, n_max);
  return report;
}

SpecialFactors special_factors(const SuffixIndex& index, unsigned alphabet_size, std::size_t n) {
  RawStats r = collect(index, alphabet_size, n);
  return {std::move(r.left), std::move(r.right), std::move(r.bispecial)};
}

SpecialFactors special_factors(const Word& w, std::size_t n) {
  return special_factors(SuffixIndex(w.letters()), w.alphabet_size(), n);
}

std::vector<std::size_t> occurrences(const Word& w, const Word& y) {
  std::vector<std::size_t> out;
  if (y.empty() || y.size() > w.size())
    return out;
  const auto pat = y.letters();
  const auto pi = failure_function(pat);
  std::size_t k = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    while (k > 0 && w[i] != pat[k])
      k = pi[k - 1];
    if (w[i] == pat[k])
      ++k;
    if (k == pat.size()) {
      out.push_back(i + 1 - pat.size());
      k = pi[k - 1];
    }
  }
  return out;
}

namespace {

std::vector<std::size_t> occurrences_at_least_two(const Word& w, const Word& y) {
  auto occ = occurrences(w, y);
  if (occ.size() < 2)
    throw std::invalid_argument("factor " + y.to_string() + " occurs fewer than twice in the word");
  return occ;
}

} // namespace

std::vector<Word> return_words(const Word& w, const Word& y) {
  const auto occ = occurrences_at_least_two(w, y);
  std::vector<Word> out;
  std::map<Word, std::size_t> seen;
  for (std::size_t k = 0; k + 1 < occ.size(); ++k) {
    Word r = w.substr(occ[k], occ[k + 1] - occ[k]);
    if (seen.emplace(r, out.size()).second)
      out.push_back(std::move(r));
  }
  return out;
}

Word derived_sequence(const Word& w, const Word& y) {
  const auto occ = occurrences_at_least_two(w, y);
  std::map<Word, Letter> code;
  std::vector<Letter> letters;
  letters.reserve(occ.size() - 1);
  for (std::size_t k = 0; k + 1 < occ.size(); ++k) {
    const auto next_code = static_cast<Letter>(code.size());
    const auto [it, fresh] = code.emplace(w.substr(occ[k], occ[k + 1] - occ[k]), next_code);
    if (fresh && code.size() > kMaxAlphabet)
      throw std::invalid_argument("derived_sequence: more than " + std::to_string(kMaxAlphabet) + " return words");
    letters.push_back(it->second);
  }
  return Word(static_cast<unsigned>(code.size()), std::move(letters));
}

std::optional<Word> shortest_return(const Word& w, const Word& y) {
  const auto occ = occurrences(w, y);
  if (occ.size() < 2)
    return std::nullopt;
  std::size_t best = 0;
  for (std::size_t k = 1; k + 1 < occ.size(); ++k)
    if (occ[k + 1] - occ[k] < occ[best + 1] - occ[best])
      best = k;
  return w.substr(occ[best], occ[best + 1] - occ[best]);
}

std::vector<ExponentWitness> max_exponent_by_length(const Word& w, std::size_t len_cap) {
  const std::size_t cap = std::min(len_cap, w.size());
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> min_period(cap + 1, kNone);
  std::vector<std::size_t> where(cap + 1, 0);
  std::vector<std::size_t> pi(cap, 0);
  const auto text = w.letters();
  for (std::size_t i = 0; i < w.size(); ++i) {
    const std::size_t m = std::min(cap, w.size() - i);
    const Letter* s = text.data() + i;
    // Failure function of w[i..i+m): per(w[i..i+L)) = L - pi[L-1].
    pi[0] = 0;
    if (m > 0 && 1 < min_period[1]) {
      min_period[1] = 1;
      where[1] = i;
    }
    for (std::size_t q = 1; q < m; ++q) {
      std::size_t k = pi[q - 1];
      while (k > 0 && s[q] != s[k])
        k = pi[k - 1];
      if (s[q] == s[k])
        ++k;
      pi[q] = k;
      const std::size_t len = q + 1;
      const std::size_t period = len - k;
      if (period < min_period[len]) {
        min_period[len] = period;
        where[len] = i;
      }
    }
  }
  std::vector<ExponentWitness> out;
  out.reserve(cap);
  for (std::size_t len = 1; len <= cap; ++len) {
    ExponentWitness e;
    e.length = len;
    e.period = min_period[len];
    e.position = where[len];
    e.exponent = Rational(static_cast<std::int64_t>(len), static_cast<std::int64_t>(e.period));
    out.push_back(e);
  }
  return out;
}

ExponentWitness max_exponent(const Word& w, std::size_t len_cap) {
  if (w.empty() || len_cap == 0)
    throw std::invalid_argument("max_exponent: empty word or zero cap");
  const auto rows = max_exponent_by_length(w, len_cap);
  ExponentWitness best = rows.front();
  for (const auto& r : rows)
    if (r.exponent > best.exponent)
      best = r;
  return best;
}

std::vector<BalanceRow> balance_profile(const Word& w, std::size_t n_max) {
  if (!is_binary(w))
    throw std::invalid_argument("balance_profile: binary word expected");
  if (n_max > w.size())
    throw std::invalid_argument("balance_profile: window length exceeds the word");
  std::vector<u64> prefix(w.size() + 1, 0);
  for (std::size_t i = 0; i < w.size(); ++i)
    prefix[i + 1] = prefix[i] + w[i];
  std::vector<BalanceRow> rows;
  rows.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    BalanceRow row;
    row.n = n;
    row.min_ones = std::numeric_limits<u64>::max();
    row.max_ones = 0;
    for (std::size_t i = 0; i + n <= w.size(); ++i) {
      const u64 ones = prefix[i + n] - prefix[i];
      if (ones < row.min_ones) {
        row.min_ones = ones;
        row.argmin = i;
      }
      if (ones > row.max_ones) {
        row.max_ones = ones;
        row.argmax = i;
      }
    }
    rows.push_back(row);
  }
  return rows;
}

std::optional<std::size_t> first_unbalanced_length(const std::vector<BalanceRow>& rows, u64 k) {
  for (const auto& r : rows)
    if (r.spread() > k)
      return r.n;
  return std::nullopt;
}

Word tribonacci_bispecial(int n) {
  if (n < 0)
    throw std::invalid_argument("tribonacci_bispecial: negative index");
  Word b = Word::parse("0", 3);
  const Word zero = Word::parse("0", 3);
  for (int k = 1; k <= n; ++k)
    b = apply(morphisms::phi(), b) + zero;
  return b;
}

std::string to_string(BispecialFamily family) {
  switch (family) {
  case BispecialFamily::Short:
    return "short";
  case BispecialFamily::PiB10:
    return "pi(b)10";
  case BispecialFamily::PiB101:
    return "pi(b)101";
  case BispecialFamily::ZeroPiB10:
    return "0pi(b)10";
  case BispecialFamily::ZeroPiB101:
    return "0pi(b)101";
  }
  return "?";
}

std::vector<BispecialRecord> theory_bispecials(int n_max) {
  if (n_max < 0 || n_max > 20)
    throw std::invalid_argument("theory_bispecials: n_max must be in [0, 20]");
  std::vector<BispecialRecord> out;

  static constexpr std::array<std::pair<const char*, const char*>, 5> kShort{{
      {"0", "0"}, {"1", "1"}, {"01", "01"}, {"10", "10"}, {"010", "01"}}};
  for (auto [w, v] : kShort) {
    BispecialRecord r;
    r.word = Word::parse(w, 2);
    r.shortest_return = Word::parse(v, 2);
    r.return_length = r.shortest_return->size();
    r.return_length_exact = true;
    r.ratio = Rational(static_cast<std::int64_t>(r.word.size()), static_cast<std::int64_t>(r.return_length));
    out.push_back(std::move(r));
  }

  const auto& phi = morphisms::phi();
  const auto& pi = morphisms::pi();
  const Word zero3 = Word::parse("0", 3);
  const Word zero = Word::parse("0", 2);
  const Word tail10 = Word::parse("10", 2);
  const Word tail101 = Word::parse("101", 2);

  Word b = zero3;          // b_n
  Word r = zero3;          // r_n = phi^n(0)
  u64 prev_return = 0;     // |pi(r_{n-1})|
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) {
      b = apply(phi, b) + zero3;
      r = apply(phi, r);
    }
    const Word pb = apply(pi, b);
    const Word pr = apply(pi, r);

    auto emit = [&](BispecialFamily family, bool lead_zero, const Word& tail) {
      BispecialRecord rec;
      rec.n = n;
      rec.residue = n % 3;
      rec.family = family;
      rec.word = lead_zero ? zero + pb + tail : pb + tail;
      switch (family) {
      case BispecialFamily::PiB10:
        rec.shortest_return = pr;
        rec.return_length = pr.size();
        rec.return_length_exact = true;
        break;
      case BispecialFamily::ZeroPiB101:
        rec.return_length = pr.size() + prev_return;
        break;
      default:
        rec.return_length = pr.size();
        break;
      }
      rec.ratio =
          Rational(static_cast<std::int64_t>(rec.word.size()), static_cast<std::int64_t>(rec.return_length));
      out.push_back(std::move(rec));
    };

    switch (n % 3) {
    case 0:
      emit(BispecialFamily::PiB10, false, tail10);
      emit(BispecialFamily::PiB101, false, tail101);
      break;
    case 1:
      emit(BispecialFamily::PiB10, false, tail10);
      emit(BispecialFamily::PiB101, false, tail101);
      emit(BispecialFamily::ZeroPiB10, true, tail10);
      emit(BispecialFamily::ZeroPiB101, true, tail101);
      break;
    default:
      emit(BispecialFamily::PiB10, false, tail10);
      emit(BispecialFamily::ZeroPiB10, true, tail10);
      break;
    }
    prev_return = pr.size();
  }
  return out;
}

int compare_with_critical_limit(const Rational& q) {
  if (q <= Rational(2))
    return -1;
  // q > 2 + 1/(psi-1)  <=>  psi > (q-1)/(q-2)
  const Rational bound(q.num() - q.den(), q.num() - 2 * q.den());
  return -compare_with_psi(bound);
}

BispecialComparison compare_bispecials(const Word& b_prefix, std::size_t max_length) {
  BispecialComparison cmp;
  cmp.max_length = max_length;

  int n_needed = 0;
  while (n_needed < 20 && trib_number(n_needed + 5) - 2 <= max_length)
    ++n_needed;
  for (const auto& rec : theory_bispecials(n_needed))
    if (rec.word.size() <= max_length)
      cmp.expected.push_back(rec.word);
  std::sort(cmp.expected.begin(), cmp.expected.end(), shortlex_less);
  cmp.expected.erase(std::unique(cmp.expected.begin(), cmp.expected.end()), cmp.expected.end());

  const FactorReport report = complexity_profile(b_prefix, max_length);
  cmp.saturated = report.all_saturated();
  for (const auto& row : report.rows)
    cmp.found.insert(cmp.found.end(), row.bispecial.begin(), row.bispecial.end());
  std::sort(cmp.found.begin(), cmp.found.end(), shortlex_less);

  std::set_difference(cmp.expected.begin(), cmp.expected.end(), cmp.found.begin(), cmp.found.end(),
                      std::back_inserter(cmp.missing), shortlex_less);
  std::set_difference(cmp.found.begin(), cmp.found.end(), cmp.expected.begin(), cmp.expected.end(),
                      std::back_inserter(cmp.unexpected), shortlex_less);
  return cmp;
}

bool left_specials_are_prefixes(const FactorReport& report, const Word& b_prefix) {
  for (const auto& row : report.rows) {
    if (row.left_special.size() != 2 || b_prefix.size() < row.n + 1)
      return false;
    std::vector<Word> expected{b_prefix.substr(0, row.n), b_prefix.substr(1, row.n)};
    std::sort(expected.begin(), expected.end());
    if (expected != row.left_special)
      return false;
  }
  return true;
}

std::vector<ReturnCheck> check_shortest_returns(const Word& b_prefix, int n_max) {
  std::vector<ReturnCheck> out;
  const Word tail10 = Word::parse("10", 2);
  Word r = Word::parse("0", 3);
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0)
      r = apply(morphisms::phi(), r);
    ReturnCheck c;
    c.n = n;
    c.expected = apply(morphisms::pi(), r);
    c.found = shortest_return(b_prefix, apply(morphisms::pi(), tribonacci_bispecial(n)) + tail10);
    out.push_back(std::move(c));
  }
  return out;
}

bool CriticalExponentReport::pass() const {
  return increasing && below_limit && inequality &&
         std::all_of(crosscheck.begin(), crosscheck.end(), [](const ExponentCrossCheck& c) { return c.match(); });
}

CriticalExponentReport critical_exponent_report(int n_max, int crosscheck_n_max, std::size_t crosscheck_prefix) {
  if (n_max < 0 || n_max > 20)
    throw std::invalid_argument("critical_exponent_report: n_max must be in [0, 20]");
  CriticalExponentReport rep;
  const double psi = constants().psi;
  rep.limit = 2.0 + 1.0 / (psi - 1.0);

  for (int n = 0; n <= n_max; ++n) {
    ExponentRow row;
    row.n = n;
    const u64 t5 = trib_number(n + 5);
    const u64 t4 = trib_number(n + 4);
    row.bispecial_length = t5 - 2;
    row.return_length = t5 - t4;
    row.e = Rational(static_cast<std::int64_t>(row.bispecial_length + row.return_length),
                     static_cast<std::int64_t>(row.return_length));
    row.value = row.e.to_double();
    row.below_limit = compare_with_critical_limit(row.e) < 0;
    row.inequality = compare_with_psi(Rational(static_cast<std::int64_t>(t5 - 1), static_cast<std::int64_t>(t4 - 1))) >= 0;
    rep.below_limit = rep.below_limit && row.below_limit;
    if (n >= 2)
      rep.inequality = rep.inequality && row.inequality;
    if (n >= 3 && !(rep.rows.back().e < row.e))
      rep.increasing = false;
    rep.rows.push_back(row);
  }
  rep.final_gap = std::abs(rep.rows.back().value - rep.limit);

  const int cross = std::min(crosscheck_n_max, n_max);
  if (cross >= 0 && crosscheck_prefix > 0) {
    std::size_t cap = 0;
    for (int n = 0; n <= cross; ++n)
      cap = std::max<std::size_t>(cap, rep.rows[static_cast<std::size_t>(n)].bispecial_length +
                                           rep.rows[static_cast<std::size_t>(n)].return_length);
    const Word prefix = build_b(crosscheck_prefix, BuildMethod::Inflation);
    const auto by_length = max_exponent_by_length(prefix, cap);
    for (int n = 0; n <= cross; ++n) {
      const auto& row = rep.rows[static_cast<std::size_t>(n)];
      ExponentCrossCheck c;
      c.n = n;
      c.length = row.bispecial_length + row.return_length;
      c.expected = row.e;
      c.brute_force = c.length <= by_length.size() ? by_length[c.length - 1].exponent : Rational(0);
      rep.crosscheck.push_back(c);
    }
  }
  return rep;
}

} // namespace tribwords
