#include "tribwords/navigator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace tribwords {

namespace {

constexpr u64 kU64Max = std::numeric_limits<u64>::max();

// Largest s with f(s) <= target, for nondecreasing f with f(0) <= target.
// f returns nullopt for "beyond 64 bits", which compares above any target.
// Gallops outward from guess, then bisects.
template <class F>
u64 last_at_most(F&& f, u64 target, u64 guess) {
  auto ok = [&](u64 s) {
    const std::optional<u64> v = f(s);
    return v && *v <= target;
  };
  u64 lo = 0;
  u64 hi = 0;
  if (ok(guess)) {
    lo = guess;
    for (u64 step = 1;; step *= 2) {
      if (lo > kU64Max - step) {
        if (ok(kU64Max))
          return kU64Max;
        hi = kU64Max;
        break;
      }
      const u64 cand = lo + step;
      if (!ok(cand)) {
        hi = cand;
        break;
      }
      lo = cand;
    }
  } else {
    hi = guess;
    for (u64 step = 1;; step *= 2) {
      const u64 cand = hi > step ? hi - step : 0;
      if (ok(cand)) {
        lo = cand;
        break;
      }
      if (cand == 0)
        throw std::logic_error("last_at_most: f(0) exceeds target");
      hi = cand;
    }
  }
  while (hi - lo > 1) {
    const u64 mid = lo + (hi - lo) / 2;
    if (ok(mid))
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

u64 scaled_guess(u64 n, double factor) {
  const double g = std::floor(static_cast<double>(n) * factor);
  if (!(g > 0.0))
    return 0;
  if (g >= 1.8e19)
    return kU64Max / 2;
  return static_cast<u64>(g);
}

struct Frequencies {
  std::array<double, 3> letter;  // frequencies of 0, 1, 2 in TR
  double block;                  // mean |pi(a)|
};

const Frequencies& frequencies() {
  static const Frequencies fr = [] {
    const double psi = constants().psi;
    Frequencies f{};
    f.letter = {1.0 / psi, 1.0 / (psi * psi), 1.0 / (psi * psi * psi)};
    f.block = 3.0 * f.letter[0] + 3.0 * f.letter[1] + 2.0 * f.letter[2];
    return f;
  }();
  return fr;
}

std::optional<u64> count_letter(Letter letter, u64 n) {
  const u64 guess = scaled_guess(n, frequencies().letter[letter]);
  return last_at_most([letter](u64 s) { return try_pos_nth_tr(letter, s); }, n, guess);
}

std::optional<std::array<u64, 3>> try_count_letters(u64 n) {
  std::array<u64, 3> c{};
  for (Letter a = 0; a < 3; ++a) {
    const auto v = count_letter(a, n);
    if (!v)
      return std::nullopt;
    c[a] = *v;
  }
  return c;
}

std::optional<u64> try_block_start(u64 y) {
  const auto c = try_count_letters(y);
  if (!c)
    return std::nullopt;
  const auto a = checked_mul(3, (*c)[0]);
  const auto b = checked_mul(3, (*c)[1]);
  const auto d = checked_mul(2, (*c)[2]);
  if (!a || !b || !d)
    return std::nullopt;
  auto s = checked_add(*a, *b);
  if (s)
    s = checked_add(*s, *d);
  if (s)
    s = checked_add(*s, 1);
  return s;
}

struct Located {
  BlockLocation loc;
  std::array<u64, 3> counts;  // count_letters(loc.y)
};

Located locate(u64 n) {
  if (n == 0)
    throw std::invalid_argument("find_block: position 0 is the prepended letter, outside every block");
  const u64 guess = scaled_guess(n - 1, 1.0 / frequencies().block);
  const u64 y = last_at_most(try_block_start, n, guess);
  const auto c = try_count_letters(y);
  if (!c)
    throw std::overflow_error("find_block: letter counts exceed 64 bits");
  const u64 u = 3 * (*c)[0] + 3 * (*c)[1] + 2 * (*c)[2] + 1;
  return {{n, y, n - u, u}, *c};
}

u64 require(std::optional<u64> v, const char* what, u64 n) {
  if (!v)
    throw std::overflow_error(std::string(what) + "(" + std::to_string(n) + ") exceeds 64 bits");
  return *v;
}

std::optional<u64> try_bpref1(u64 n) {
  if (n <= 1)
    return 0;
  try {
    return bpref1(n);
  } catch (const std::overflow_error&) {
    return std::nullopt;
  }
}

std::optional<u64> try_bpref0(u64 n) {
  const auto ones = try_bpref1(n);
  if (!ones)
    return std::nullopt;
  return n - *ones;
}

} // namespace

Letter tr_letter(u64 y) {
  if (y == 0)
    return 0;
  const auto table = trib_table();
  int k = static_cast<int>(std::upper_bound(table.begin() + 2, table.end(), y) - table.begin()) - 1;
  u64 rem = y;
  int trailing = 0;
  for (; k >= 2; --k) {
    if (table[static_cast<std::size_t>(k)] <= rem) {
      rem -= table[static_cast<std::size_t>(k)];
      ++trailing;
    } else {
      trailing = 0;
    }
  }
  return static_cast<Letter>(trailing);
}

std::optional<u64> try_pos_nth_tr(Letter letter, u64 n) noexcept {
  if (n == 0)
    return 0;
  static constexpr std::array<u64, 3> kOffset{1, 2, 4};
  if (letter > 2)
    return std::nullopt;
  std::optional<u64> x = n - 1;
  for (int i = 0; i <= letter && x; ++i)
    x = try_shift(*x);
  if (!x)
    return std::nullopt;
  return checked_add(*x, kOffset[letter]);
}

u64 pos_nth0_tr(u64 n) {
  if (n == 0)
    throw std::invalid_argument("pos_nth0_tr: n must be >= 1");
  return require(try_pos_nth_tr(0, n), "pos_nth0_tr", n);
}

u64 pos_nth1_tr(u64 n) {
  if (n == 0)
    throw std::invalid_argument("pos_nth1_tr: n must be >= 1");
  return require(try_pos_nth_tr(1, n), "pos_nth1_tr", n);
}

u64 pos_nth2_tr(u64 n) {
  if (n == 0)
    throw std::invalid_argument("pos_nth2_tr: n must be >= 1");
  return require(try_pos_nth_tr(2, n), "pos_nth2_tr", n);
}

std::array<u64, 3> count_letters(u64 n) {
  const auto c = try_count_letters(n);
  if (!c)
    throw std::overflow_error("count_letters(" + std::to_string(n) + ") exceeds 64 bits");
  return *c;
}

u64 block_start(u64 y) { return require(try_block_start(y), "block_start", y); }

BlockLocation find_block(u64 n) { return locate(n).loc; }

Letter b_letter(u64 n) {
  if (n == 0)
    return 0;
  const BlockLocation loc = find_block(n);
  if (loc.t == 0)
    return 1;
  return (loc.t == 2 && tr_letter(loc.y) == 1) ? 1 : 0;
}

u64 bpref1(u64 n) {
  if (n <= 1)
    return 0;
  const Located l = locate(n - 1);
  // Whole blocks before y: pi(0) and pi(2) hold one 1, pi(1) holds two.
  const u64 whole = l.counts[0] + 2 * l.counts[1] + l.counts[2];
  const u64 partial = 1 + ((l.loc.t == 2 && tr_letter(l.loc.y) == 1) ? 1 : 0);
  return whole + partial;
}

u64 bpref0(u64 n) { return n - bpref1(n); }

u64 nth1_b(u64 n) {
  if (n == 0)
    throw std::invalid_argument("nth1_b: n must be >= 1");
  const u64 guess = scaled_guess(n, constants().gamma);
  return last_at_most(try_bpref1, n - 1, guess > 0 ? guess - 1 : 0) + 1;
}

u64 nth0_b(u64 n) {
  if (n == 0)
    throw std::invalid_argument("nth0_b: n must be >= 1");
  const u64 guess = scaled_guess(n, constants().psi);
  return last_at_most(try_bpref0, n - 1, guess > 0 ? guess - 1 : 0) + 1;
}

bool IndexBoundsReport::pass() const {
  return std::all_of(families.begin(), families.end(), [](const BoundFamily& f) { return f.pass; });
}

namespace {

struct Interval {
  std::int64_t lo;
  std::int64_t value;
  std::int64_t hi;
};

constexpr std::size_t kFamilies = 5;

const std::array<const char*, kFamilies> kFamilyNames{
    "floor(psi n) - 2 <= I0(n) <= floor(psi n) + 2",
    "floor(gamma n) - 1 <= I1(n) <= floor(gamma n) + 2",
    "A0(n) - 1 <= I0(n) <= A0(n) + 1",
    "A1(n) <= 2 I1(n) + 1 - n <= A1(n) + 5",
    "floor(psi n) - 1 <= A0(n) <= floor(psi n) + 1",
};

std::array<Interval, kFamilies> bound_intervals(u64 n) {
  const auto s = [](u64 v) { return static_cast<std::int64_t>(v); };
  const std::int64_t fp = s(floor_psi_times(n));
  const std::int64_t fg = s(floor_gamma_times(n));
  const std::int64_t i0 = s(nth0_b(n));
  const std::int64_t i1 = s(nth1_b(n));
  const std::int64_t a0 = s(pos_nth0_tr(n));
  const std::int64_t a1 = s(pos_nth1_tr(n));
  const std::int64_t z = 2 * i1 + 1 - s(n);
  return {{
      {fp - 2, i0, fp + 2},
      {fg - 1, i1, fg + 2},
      {a0 - 1, i0, a0 + 1},
      {a1, z, a1 + 5},
      {fp - 1, a0, fp + 1},
  }};
}

void sweep(u64 first, u64 last, std::vector<BoundFamily>& families) {
  for (u64 n = first; n <= last; ++n) {
    const auto iv = bound_intervals(n);
    for (std::size_t k = 0; k < kFamilies; ++k) {
      auto& fam = families[k];
      const std::int64_t low = iv[k].value - iv[k].lo;
      const std::int64_t high = iv[k].hi - iv[k].value;
      fam.worst_low_slack = std::min(fam.worst_low_slack, low);
      fam.worst_high_slack = std::min(fam.worst_high_slack, high);
      if ((low < 0 || high < 0) && fam.pass) {
        fam.pass = false;
        fam.first_failure = n;
      }
    }
  }
}

std::vector<BoundFamily> fresh_families() {
  std::vector<BoundFamily> fams;
  for (auto name : kFamilyNames) {
    BoundFamily f;
    f.name = name;
    f.worst_low_slack = std::numeric_limits<std::int64_t>::max();
    f.worst_high_slack = std::numeric_limits<std::int64_t>::max();
    fams.push_back(std::move(f));
  }
  return fams;
}

} // namespace

IndexBoundsReport verify_index_bounds(u64 n_max, unsigned threads) {
  if (n_max == 0)
    throw std::invalid_argument("verify_index_bounds: n_max must be >= 1");
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<u64>(n_max, 64))));

  std::vector<std::vector<BoundFamily>> partial(threads, fresh_families());
  const u64 chunk = (n_max + threads - 1) / threads;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    const u64 first = 1 + w * chunk;
    const u64 last = std::min(n_max, first + chunk - 1);
    if (first > last)
      continue;
    if (threads == 1)
      sweep(first, last, partial[w]);
    else
      pool.emplace_back([&, w, first, last] { sweep(first, last, partial[w]); });
  }
  for (auto& t : pool)
    t.join();

  IndexBoundsReport report;
  report.n_max = n_max;
  report.families = fresh_families();
  for (std::size_t k = 0; k < kFamilies; ++k) {
    auto& fam = report.families[k];
    for (const auto& part : partial) {
      fam.worst_low_slack = std::min(fam.worst_low_slack, part[k].worst_low_slack);
      fam.worst_high_slack = std::min(fam.worst_high_slack, part[k].worst_high_slack);
      if (!part[k].pass) {
        fam.pass = false;
        if (!fam.first_failure || *part[k].first_failure < *fam.first_failure)
          fam.first_failure = part[k].first_failure;
      }
    }
  }
  return report;
}

} // namespace tribwords
