#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tribwords/numeration.hpp"
#include "tribwords/rational.hpp"
#include "tribwords/suffix_index.hpp"
#include "tribwords/words.hpp"

namespace tribwords {

// ---------------------------------------------------------------------------
// Brute-force analysis of finite prefixes.

struct ExponentWitness {
  Rational exponent;
  std::size_t position = 0;
  std::size_t length = 0;
  std::size_t period = 0;
};

struct LengthStats {
  std::size_t n = 0;
  u64 complexity = 0;
  std::vector<Word> left_special;   // sorted
  std::vector<Word> right_special;  // sorted
  std::vector<Word> bispecial;      // sorted
  std::optional<u64> min_ones;      // binary words only
  std::optional<u64> max_ones;
  /// Identical statistics on the first half of the analysed word.
  bool saturated = true;
};

struct FactorReport {
  std::size_t prefix_length = 0;
  std::size_t n_max = 0;
  std::vector<LengthStats> rows;  // rows[k] describes length k + 1
  std::optional<ExponentWitness> max_exponent;

  const LengthStats& at(std::size_t n) const { return rows.at(n - 1); }
  bool all_saturated() const;
};

/// Per-length factor statistics for lengths 1..n_max. Every statistic is
/// also computed on the first half of w; a length whose statistics differ is
/// marked unsaturated. Requires |w| >= 4 n_max.
FactorReport complexity_profile(const Word& w, std::size_t n_max, bool with_exponent = false);

struct SpecialFactors {
  std::vector<Word> left;
  std::vector<Word> right;
  std::vector<Word> bispecial;
};

/// Left/right/bispecial factors of length n, by extension counting within w.
SpecialFactors special_factors(const Word& w, std::size_t n);
SpecialFactors special_factors(const SuffixIndex& index, unsigned alphabet_size, std::size_t n);

/// Start positions of every (overlapping) occurrence of y in w.
std::vector<std::size_t> occurrences(const Word& w, const Word& y);

/// Distinct return words to y, in order of first appearance.
/// Throws std::invalid_argument if y occurs fewer than twice.
std::vector<Word> return_words(const Word& w, const Word& y);

/// Sequence of return words to y, each coded by its rank of first appearance.
/// Throws std::invalid_argument if y occurs fewer than twice or has more than
/// four distinct return words.
Word derived_sequence(const Word& w, const Word& y);

/// A return word of minimal length (the earliest one among ties).
std::optional<Word> shortest_return(const Word& w, const Word& y);

/// max |v| / per(v) over factors v of w with |v| <= len_cap, exact.
/// Ties resolve to the shortest length, then the leftmost position.
ExponentWitness max_exponent(const Word& w, std::size_t len_cap);

/// Entry k is the best factor of length k + 1.
std::vector<ExponentWitness> max_exponent_by_length(const Word& w, std::size_t len_cap);

struct BalanceRow {
  std::size_t n = 0;
  u64 min_ones = 0;
  u64 max_ones = 0;
  std::size_t argmin = 0;  // leftmost window start attaining min_ones
  std::size_t argmax = 0;
  u64 spread() const { return max_ones - min_ones; }
};

/// Sliding-window 1-counts for window lengths 1..n_max over a binary word.
std::vector<BalanceRow> balance_profile(const Word& w, std::size_t n_max);

/// Smallest window length whose spread exceeds k.
std::optional<std::size_t> first_unbalanced_length(const std::vector<BalanceRow>& rows, u64 k);

// ---------------------------------------------------------------------------
// Theory side: bispecial factors of B and their return words.

/// Tribonacci bispecials: b_0 = 0, b_n = phi(b_{n-1}) 0.
Word tribonacci_bispecial(int n);

enum class BispecialFamily { Short, PiB10, PiB101, ZeroPiB10, ZeroPiB101 };

std::string to_string(BispecialFamily family);

struct BispecialRecord {
  std::optional<int> n;  // theory index; empty for the short table
  int residue = -1;      // n mod 3
  BispecialFamily family = BispecialFamily::Short;
  Word word;
  std::optional<Word> shortest_return;  // known exactly for Short and PiB10
  u64 return_length = 0;                // exact, or a lower bound
  bool return_length_exact = false;
  /// |word| / return_length; an upper bound on |word|/|v| when the length is a bound.
  Rational ratio;
};

/// The short bispecials 0, 1, 01, 10, 010, then for each 0 <= n <= n_max the
/// residue-dependent list built from pi(b_n). Requires n_max <= 20.
std::vector<BispecialRecord> theory_bispecials(int n_max);

/// Sign of q - (2 + 1/(psi - 1)), decided exactly.
int compare_with_critical_limit(const Rational& q);

struct BispecialComparison {
  std::size_t max_length = 0;
  std::vector<Word> expected;           // theory, sorted by (length, word)
  std::vector<Word> found;              // brute force on the prefix
  std::vector<Word> missing;            // expected but not found
  std::vector<Word> unexpected;         // found but not expected
  bool saturated = true;
  bool match() const { return missing.empty() && unexpected.empty(); }
};

/// Brute-force bispecial enumeration of the B-prefix versus the theory list,
/// for all lengths 1..max_length.
BispecialComparison compare_bispecials(const Word& b_prefix, std::size_t max_length);

/// Exactly two left-special factors per length, equal to the length-n
/// prefixes of B and of B without its first letter.
bool left_specials_are_prefixes(const FactorReport& report, const Word& b_prefix);

struct ReturnCheck {
  int n = 0;
  Word expected;               // pi(phi^n(0))
  std::optional<Word> found;   // empirically shortest return to pi(b_n) 10
  bool match() const { return found && *found == expected; }
};

/// Shortest return to pi(b_n) 10 in the prefix versus pi(phi^n(0)), 0 <= n <= n_max.
std::vector<ReturnCheck> check_shortest_returns(const Word& b_prefix, int n_max);

struct ExponentRow {
  int n = 0;
  u64 bispecial_length = 0;  // |pi(b_n) 10| = T_{n+5} - 2
  u64 return_length = 0;     // |pi(r_n)| = T_{n+5} - T_{n+4}
  Rational e;                // 1 + bispecial_length / return_length
  double value = 0.0;
  bool below_limit = true;
  /// psi <= (T_{n+5} - 1) / (T_{n+4} - 1), exact.
  bool inequality = true;
};

struct ExponentCrossCheck {
  int n = 0;
  std::size_t length = 0;  // bispecial_length + return_length
  Rational expected;
  Rational brute_force;    // best exponent among factors of that length
  bool match() const { return expected == brute_force; }
};

struct CriticalExponentReport {
  std::vector<ExponentRow> rows;
  double limit = 0.0;
  bool increasing = true;    // e_n < e_{n+1} for 2 <= n < n_max
  bool below_limit = true;
  bool inequality = true;    // for 2 <= n <= n_max
  double final_gap = 0.0;    // |e_{n_max} - limit|
  std::vector<ExponentCrossCheck> crosscheck;
  bool pass() const;
};

/// Exponent sequence from the length formulas, its convergence to
/// 2 + 1/(psi - 1), and a brute-force cross-check for n <= crosscheck_n_max
/// on a B-prefix of length crosscheck_prefix. Requires n_max <= 20.
CriticalExponentReport critical_exponent_report(int n_max, int crosscheck_n_max = 6,
                                                std::size_t crosscheck_prefix = 20000);

} // namespace tribwords
