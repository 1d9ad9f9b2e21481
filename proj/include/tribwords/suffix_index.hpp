#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tribwords/words.hpp"

namespace tribwords {

/// Suffix array and LCP array of a word over a small alphabet.
/// lcp()[i] is the longest common prefix of suffixes sa()[i-1] and sa()[i]; lcp()[0] = 0.
class SuffixIndex {
public:
  explicit SuffixIndex(std::span<const Letter> text);

  std::size_t size() const { return text_.size(); }
  std::span<const Letter> text() const { return text_; }
  std::span<const std::uint32_t> sa() const { return sa_; }
  std::span<const std::uint32_t> lcp() const { return lcp_; }

private:
  std::vector<Letter> text_;
  std::vector<std::uint32_t> sa_;
  std::vector<std::uint32_t> lcp_;
};

} // namespace tribwords
