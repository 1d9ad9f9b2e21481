#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tribwords/numeration.hpp"
#include "tribwords/words.hpp"

namespace tribwords {

/// Maximal block tokens of a binary word. Token codes match the source
/// alphabet of morphisms::inflation().
enum class Block : Letter { Pair00 = 0, Zero = 1, One = 2 };

struct BlockFactorization {
  std::vector<Block> blocks;

  /// B00 -> 00, B0 -> 0, B1 -> 1.
  Word expand() const;
  /// B0 is never immediately followed by B00 or B0.
  bool is_maximal() const;
  /// Stronger form that holds on B: no two adjacent tokens are both all-zero.
  bool has_isolated_zero_blocks() const;
  /// The tokens as a word over {0,1,2}.
  Word as_word() const;
};

/// Greedy tokenization: a run of r zeros becomes floor(r/2) B00 tokens then
/// (r mod 2) B0 tokens; each 1 is a B1 token.
BlockFactorization factor_blocks(const Word& w);

/// One round of the inflation rules 00 -> 0101, 0 -> 0, 1 -> 10 on maximal blocks.
Word inflate_step(const Word& w);

/// B_0 = 00, B_{i+1} = inflate_step(B_i).
Word kimberling_iterate(int i);

enum class BuildMethod { Inflation, Morphic, Positional };

BuildMethod parse_build_method(std::string_view name);
std::string_view to_string(BuildMethod method);

/// Length-len prefix of B, built by iterating the inflation rules, as 0 f(TR),
/// or letter by letter through the positional evaluator.
Word build_b(std::size_t len, BuildMethod method);

struct IterateStats {
  int i = 0;
  u64 beta = 0;  // |B_i|
  u64 n1 = 0;    // occurrences of 1 in B_i
  u64 n00 = 0;   // occurrences of 00 in B_i
  bool measured = false;
  friend bool operator==(const IterateStats&, const IterateStats&) = default;
};

/// Iterates up to this index are materialized and counted directly.
inline constexpr int kMaterializedIterates = 25;

/// Stats for 0 <= i <= i_max; measured for i <= 25, continued by the
/// length/count recurrences afterwards. Throws std::overflow_error on wraparound.
std::vector<IterateStats> iterate_stats(int i_max);

/// Kimberling's c_i: 2, 4, 6, 10, then c_i = 2c_{i-1} - c_{i-4}.
u64 kimberling_c(int i);

struct IdentityCheck {
  std::string identity;
  int first = 0;
  int last = 0;
  bool pass = true;
  std::optional<int> first_failure;
};

/// Checks the closed forms for beta_i, N00(i), N1(i), the three counting
/// recurrences, the c-recurrence on beta and beta_i = c_i. Failures are
/// reported, never thrown. Requires i_max >= 2.
std::vector<IdentityCheck> verify_iterate_identities(int i_max);

/// Occurrences (overlapping) of pattern in text.
u64 count_occurrences(const Word& text, const Word& pattern);

} // namespace tribwords
