#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tribwords/numeration.hpp"
#include "tribwords/words.hpp"

// Positional evaluation of TR and B through Tribonacci numeration.
//
// Index conventions differ per function and are part of each name:
//   - tr_letter(y), b_letter(n), find_block(n): 0-indexed positions.
//   - pos_nth*_tr(n): 1-indexed positions in TR (n'th occurrence, n >= 1).
//   - count_letters(n), bpref1(n): counts over a prefix of length n.
//   - nth1_b(n), nth0_b(n): 1-indexed positions in B.
namespace tribwords {

/// TR[y], 0-indexed: the number of trailing 1 digits of encode(y).
Letter tr_letter(u64 y);

/// 1-indexed position of the n'th 0 / 1 / 2 in TR. Throw for n == 0 and on overflow.
u64 pos_nth0_tr(u64 n);
u64 pos_nth1_tr(u64 n);
u64 pos_nth2_tr(u64 n);

/// Position of the n'th occurrence of letter in TR (1-indexed), with the
/// n == 0 case mapped to 0. nullopt on overflow.
std::optional<u64> try_pos_nth_tr(Letter letter, u64 n) noexcept;

/// Occurrences of 0, 1, 2 among TR[1..n] (1-indexed), i.e. in the length-n prefix.
std::array<u64, 3> count_letters(u64 n);

/// Position n >= 1 of B lies in the image pi(TR[y]) starting at u, at offset t.
struct BlockLocation {
  u64 n = 0;
  u64 y = 0;
  u64 t = 0;
  u64 u = 0;
  friend bool operator==(const BlockLocation&, const BlockLocation&) = default;
};

/// Start of the block pi(TR[y]) in B: 3 c0(y) + 3 c1(y) + 2 c2(y) + 1.
u64 block_start(u64 y);

/// Throws std::invalid_argument for n == 0 (the prepended letter).
BlockLocation find_block(u64 n);

/// B[n], 0-indexed.
Letter b_letter(u64 n);

/// Number of 1s (resp. 0s) in B[0..n-1].
u64 bpref1(u64 n);
u64 bpref0(u64 n);

/// I_1(n) and I_0(n): 1-indexed position in B of the n'th 1 (resp. 0); n >= 1.
u64 nth1_b(u64 n);
u64 nth0_b(u64 n);

struct BoundFamily {
  std::string name;
  bool pass = true;
  std::int64_t worst_low_slack = 0;   // min over n of (value - lower bound)
  std::int64_t worst_high_slack = 0;  // min over n of (upper bound - value)
  std::optional<u64> first_failure;
};

struct IndexBoundsReport {
  u64 n_max = 0;
  std::vector<BoundFamily> families;
  bool pass() const;
};

/// For 1 <= n <= n_max:
///   floor(psi n) - 2 <= I0(n) <= floor(psi n) + 2
///   floor(gamma n) - 1 <= I1(n) <= floor(gamma n) + 2
///   A0(n) - 1 <= I0(n) <= A0(n) + 1     (A0, A1: n'th 0 and n'th 1 of TR, 1-indexed)
///   A1(n) <= 2 I1(n) + 1 - n <= A1(n) + 5
///   floor(psi n) - 1 <= A0(n) <= floor(psi n) + 1
/// The n-range is split across `threads` workers.
IndexBoundsReport verify_index_bounds(u64 n_max, unsigned threads = 1);

} // namespace tribwords
