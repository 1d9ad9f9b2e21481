#include "tribwords/suffix_index.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace tribwords {

SuffixIndex::SuffixIndex(std::span<const Letter> text) : text_(text.begin(), text.end()) {
  if (text_.size() >= std::numeric_limits<std::uint32_t>::max())
    throw std::length_error("SuffixIndex: text too long");
  const std::size_t n = text_.size();
  sa_.resize(n);
  lcp_.assign(n, 0);
  if (n == 0)
    return;

  // Prefix doubling with counting sorts.
  std::vector<std::uint32_t> rank(n), tmp(n);
  std::size_t classes = kMaxAlphabet;
  std::vector<std::uint32_t> count(std::max(classes, n) + 1);
  for (std::size_t i = 0; i < n; ++i) {
    rank[i] = text_[i];
    ++count[rank[i]];
  }
  for (std::size_t c = 1; c < classes; ++c)
    count[c] += count[c - 1];
  for (std::size_t i = n; i-- > 0;)
    sa_[--count[rank[i]]] = static_cast<std::uint32_t>(i);

  for (std::size_t k = 1;; k <<= 1) {
    std::size_t p = 0;
    for (std::size_t i = n > k ? n - k : 0; i < n; ++i)
      tmp[p++] = static_cast<std::uint32_t>(i);
    for (std::size_t j = 0; j < n; ++j)
      if (sa_[j] >= k)
        tmp[p++] = static_cast<std::uint32_t>(sa_[j] - k);

    std::fill(count.begin(), count.begin() + static_cast<std::ptrdiff_t>(classes), 0);
    for (std::size_t i = 0; i < n; ++i)
      ++count[rank[i]];
    for (std::size_t c = 1; c < classes; ++c)
      count[c] += count[c - 1];
    for (std::size_t j = n; j-- > 0;)
      sa_[--count[rank[tmp[j]]]] = tmp[j];

    auto second = [&](std::size_t i) -> std::int64_t { return i + k < n ? rank[i + k] : -1; };
    tmp[sa_[0]] = 0;
    std::size_t next_classes = 1;
    for (std::size_t j = 1; j < n; ++j) {
      const std::size_t a = sa_[j - 1];
      const std::size_t b = sa_[j];
      const bool same = rank[a] == rank[b] && second(a) == second(b);
      tmp[b] = static_cast<std::uint32_t>(same ? next_classes - 1 : next_classes++);
    }
    rank.swap(tmp);
    classes = next_classes;
    if (classes == n)
      break;
  }

  // Kasai.
  std::vector<std::uint32_t> pos(n);
  for (std::size_t i = 0; i < n; ++i)
    pos[sa_[i]] = static_cast<std::uint32_t>(i);
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (pos[i] == 0) {
      h = 0;
      continue;
    }
    const std::size_t j = sa_[pos[i] - 1];
    while (i + h < n && j + h < n && text_[i + h] == text_[j + h])
      ++h;
    lcp_[pos[i]] = static_cast<std::uint32_t>(h);
    if (h > 0)
      --h;
  }
}

} // namespace tribwords
