#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "tribwords/numeration.hpp"
#include "tribwords/words.hpp"

namespace tribwords {

/// Deterministic finite automaton with output over the digits {0,1}, read msd-first.
///
/// Text form:
///   states K initial 0
///   out <bit> on0 <state> on1 <state>     (K lines, state i on line i+2)
class Dfao {
public:
  struct State {
    Letter output = 0;
    std::array<std::uint32_t, 2> next{};
    friend bool operator==(const State&, const State&) = default;
  };

  Dfao() = default;
  /// Throws std::invalid_argument if a transition or the initial state is out of range.
  Dfao(std::vector<State> states, std::uint32_t initial = 0);

  std::size_t state_count() const { return states_.size(); }
  std::uint32_t initial() const { return initial_; }
  const std::vector<State>& states() const { return states_; }

  std::uint32_t run(std::span<const std::uint8_t> digits) const;
  Letter eval_digits(std::span<const std::uint8_t> digits) const { return states_[run(digits)].output; }
  Letter eval(u64 n) const { return eval_digits(encode(n).digits()); }

  /// Hopcroft partition refinement followed by canonical renumbering.
  Dfao minimized() const;
  /// Unreachable states dropped, states numbered in BFS order from the initial state (which becomes 0).
  Dfao canonical() const;

  void write(std::ostream& os) const;
  static Dfao read(std::istream& is);

  friend bool operator==(const Dfao&, const Dfao&) = default;

private:
  std::vector<State> states_;
  std::uint32_t initial_ = 0;
};

/// Learns the DFAO for B from the positional evaluator b_letter.
///
/// Digit strings (leading zeros allowed) of length <= max_digits/2 are
/// explored breadth-first; two strings share a state when b_letter agrees on
/// every extension by up to max_digits - max_digits/2 further digits (strings
/// containing 111 form a sink with output 0). The result is checked against
/// b_letter for every n below T_{max_digits+2} and then minimized.
///
/// Throws std::invalid_argument for max_digits outside [8, 24] and
/// std::runtime_error when the depth is insufficient (a state cannot be
/// expanded, two merged prefixes disagree, or the sweep finds a mismatch).
Dfao dfao_synthesize(int max_digits);

} // namespace tribwords
