#include "tribwords/dfao.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "tribwords/navigator.hpp"

namespace tribwords {

Dfao::Dfao(std::vector<State> states, std::uint32_t initial) : states_(std::move(states)), initial_(initial) {
  if (states_.empty())
    throw std::invalid_argument("Dfao: no states");
  if (initial_ >= states_.size())
    throw std::invalid_argument("Dfao: initial state out of range");
  for (const auto& s : states_) {
    if (s.output > 1)
      throw std::invalid_argument("Dfao: output must be 0 or 1");
    for (auto t : s.next)
      if (t >= states_.size())
        throw std::invalid_argument("Dfao: transition target out of range");
  }
}

std::uint32_t Dfao::run(std::span<const std::uint8_t> digits) const {
  std::uint32_t q = initial_;
  for (auto d : digits) {
    if (d > 1)
      throw std::invalid_argument("Dfao::run: digit must be 0 or 1");
    q = states_[q].next[d];
  }
  return q;
}

Dfao Dfao::canonical() const {
  std::vector<std::int64_t> id(states_.size(), -1);
  std::vector<std::uint32_t> order;
  std::deque<std::uint32_t> queue{initial_};
  id[initial_] = 0;
  order.push_back(initial_);
  while (!queue.empty()) {
    const auto q = queue.front();
    queue.pop_front();
    for (auto t : states_[q].next) {
      if (id[t] < 0) {
        id[t] = static_cast<std::int64_t>(order.size());
        order.push_back(t);
        queue.push_back(t);
      }
    }
  }
  std::vector<State> out;
  out.reserve(order.size());
  for (auto q : order) {
    State s = states_[q];
    for (auto& t : s.next)
      t = static_cast<std::uint32_t>(id[t]);
    out.push_back(s);
  }
  return Dfao(std::move(out), 0);
}

Dfao Dfao::minimized() const {
  const Dfao reach = canonical();
  const auto& st = reach.states_;
  const std::size_t n = st.size();

  // Inverse transitions per digit.
  std::array<std::vector<std::vector<std::uint32_t>>, 2> inv;
  for (int c = 0; c < 2; ++c) {
    inv[c].assign(n, {});
    for (std::uint32_t q = 0; q < n; ++q)
      inv[c][st[q].next[c]].push_back(q);
  }

  std::vector<std::vector<std::uint32_t>> blocks;
  std::vector<std::uint32_t> block_of(n);
  for (Letter out = 0; out < 2; ++out) {
    std::vector<std::uint32_t> members;
    for (std::uint32_t q = 0; q < n; ++q)
      if (st[q].output == out)
        members.push_back(q);
    if (members.empty())
      continue;
    for (auto q : members)
      block_of[q] = static_cast<std::uint32_t>(blocks.size());
    blocks.push_back(std::move(members));
  }

  std::vector<bool> in_work(blocks.size(), true);
  std::deque<std::uint32_t> work;
  for (std::uint32_t b = 0; b < blocks.size(); ++b)
    work.push_back(b);

  while (!work.empty()) {
    const auto splitter = work.front();
    work.pop_front();
    in_work[splitter] = false;
    const auto splitter_members = blocks[splitter];
    for (int c = 0; c < 2; ++c) {
      std::vector<bool> hit(n, false);
      std::vector<std::uint32_t> touched;
      for (auto target : splitter_members)
        for (auto src : inv[c][target])
          if (!hit[src]) {
            hit[src] = true;
            touched.push_back(block_of[src]);
          }
      std::sort(touched.begin(), touched.end());
      touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
      for (auto y : touched) {
        std::vector<std::uint32_t> inside;
        std::vector<std::uint32_t> outside;
        for (auto q : blocks[y])
          (hit[q] ? inside : outside).push_back(q);
        if (inside.empty() || outside.empty())
          continue;
        const auto fresh = static_cast<std::uint32_t>(blocks.size());
        blocks[y] = std::move(inside);
        blocks.push_back(std::move(outside));
        in_work.push_back(false);
        for (auto q : blocks[fresh])
          block_of[q] = fresh;
        if (in_work[y]) {
          in_work[fresh] = true;
          work.push_back(fresh);
        } else {
          const auto smaller = blocks[y].size() <= blocks[fresh].size() ? y : fresh;
          in_work[smaller] = true;
          work.push_back(smaller);
        }
      }
    }
  }

  std::vector<State> quotient(blocks.size());
  for (std::uint32_t b = 0; b < blocks.size(); ++b) {
    const auto& rep = st[blocks[b].front()];
    quotient[b].output = rep.output;
    quotient[b].next = {block_of[rep.next[0]], block_of[rep.next[1]]};
  }
  return Dfao(std::move(quotient), block_of[reach.initial_]).canonical();
}

void Dfao::write(std::ostream& os) const {
  os << "states " << states_.size() << " initial " << initial_ << '\n';
  for (const auto& s : states_)
    os << "out " << int(s.output) << " on0 " << s.next[0] << " on1 " << s.next[1] << '\n';
}

Dfao Dfao::read(std::istream& is) {
  auto fail = [](const std::string& why) -> Dfao { throw std::runtime_error("malformed DFAO file: " + why); };
  std::string line;
  if (!std::getline(is, line))
    return fail("missing header");
  std::istringstream head(line);
  std::string kw_states, kw_initial;
  long long count = -1, initial = -1;
  if (!(head >> kw_states >> count >> kw_initial >> initial) || kw_states != "states" || kw_initial != "initial" ||
      count <= 0 || initial < 0)
    return fail("bad header '" + line + "'");
  std::vector<State> states;
  states.reserve(static_cast<std::size_t>(count));
  for (long long i = 0; i < count; ++i) {
    if (!std::getline(is, line))
      return fail("expected " + std::to_string(count) + " state lines");
    std::istringstream row(line);
    std::string kw_out, kw0, kw1;
    long long out = -1, t0 = -1, t1 = -1;
    if (!(row >> kw_out >> out >> kw0 >> t0 >> kw1 >> t1) || kw_out != "out" || kw0 != "on0" || kw1 != "on1" ||
        out < 0 || out > 1 || t0 < 0 || t1 < 0)
      return fail("bad state line '" + line + "'");
    states.push_back({static_cast<Letter>(out), {static_cast<std::uint32_t>(t0), static_cast<std::uint32_t>(t1)}});
  }
  try {
    return Dfao(std::move(states), static_cast<std::uint32_t>(initial));
  } catch (const std::invalid_argument& e) {
    return fail(e.what());
  }
}

namespace {

// A digit string of at most 32 digits, msd in the highest used bit.
struct Digits {
  std::uint32_t bits = 0;
  int len = 0;

  Digits then(std::uint32_t suffix, int suffix_len) const {
    return {(bits << suffix_len) | suffix, len + suffix_len};
  }
  bool has_111() const { return (bits & (bits >> 1) & (bits >> 2)) != 0; }
  u64 value() const {
    u64 v = 0;
    for (int j = 0; j < len; ++j)
      if ((bits >> j) & 1u)
        v += trib_number(j + 2);
    return v;
  }
};

constexpr Letter kInvalid = 2;

} // namespace

Dfao dfao_synthesize(int max_digits) {
  if (max_digits < 8 || max_digits > 24)
    throw std::invalid_argument("dfao_synthesize: depth must be in [8, 24]");
  const int prefix_depth = max_digits / 2;
  const int suffix_depth = max_digits - prefix_depth;

  const u64 limit = trib_number(max_digits + 2);
  std::vector<Letter> table(limit);
  for (u64 n = 0; n < limit; ++n)
    table[n] = b_letter(n);

  auto profile = [&](Digits p) {
    std::vector<Letter> prof;
    prof.reserve((std::size_t{2} << suffix_depth) - 1);
    for (int sl = 0; sl <= suffix_depth; ++sl)
      for (std::uint32_t s = 0; s < (1u << sl); ++s) {
        const Digits c = p.then(s, sl);
        prof.push_back(c.has_111() ? kInvalid : table[c.value()]);
      }
    return prof;
  };

  std::map<std::vector<Letter>, std::uint32_t> ids;
  std::vector<Digits> reps;
  std::vector<Dfao::State> states;

  auto intern = [&](Digits d, std::vector<Letter> prof) {
    const auto [it, fresh] = ids.emplace(std::move(prof), static_cast<std::uint32_t>(reps.size()));
    if (fresh) {
      reps.push_back(d);
      states.push_back({it->first.front() == kInvalid ? Letter{0} : it->first.front(), {}});
    }
    return std::pair{it->second, fresh};
  };

  intern(Digits{}, profile(Digits{}));
  for (std::size_t q = 0; q < reps.size(); ++q) {
    const Digits rep = reps[q];
    if (rep.len >= prefix_depth)
      throw std::runtime_error("dfao_synthesize: depth " + std::to_string(max_digits) +
                               " too small, a state first appears at prefix length " + std::to_string(rep.len));
    for (std::uint32_t a = 0; a < 2; ++a) {
      const Digits child = rep.then(a, 1);
      const auto target = intern(child, profile(child)).first;
      states[q].next[a] = target;
    }
  }

  // Every explored prefix must agree with its state's transitions.
  for (int len = 0; len < prefix_depth; ++len)
    for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
      const Digits p{bits, len};
      const auto it = ids.find(profile(p));
      if (it == ids.end())
        throw std::runtime_error("dfao_synthesize: unexplored profile, depth insufficient");
      for (std::uint32_t a = 0; a < 2; ++a) {
        const auto child = ids.find(profile(p.then(a, 1)));
        if (child == ids.end() || child->second != states[it->second].next[a])
          throw std::runtime_error("dfao_synthesize: inconsistent merge at depth " + std::to_string(max_digits));
      }
    }

  Dfao learned(std::move(states), 0);
  for (u64 n = 0; n < limit; ++n)
    if (learned.eval(n) != table[n])
      throw std::runtime_error("dfao_synthesize: learned automaton disagrees with b_letter at n = " +
                               std::to_string(n));
  return learned.minimized();
}

} // namespace tribwords
