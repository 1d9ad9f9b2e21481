#include "tribwords/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <random>
#include <stdexcept>
#include <thread>

#include "tribwords/dfao.hpp"
#include "tribwords/factor_lab.hpp"
#include "tribwords/kimberling.hpp"
#include "tribwords/navigator.hpp"

namespace tribwords {

using nlohmann::json;

namespace {

constexpr std::string_view kPrintedB5 = "01001011001010010110010010110010";
constexpr double kCriticalExponent = 3.19148788395;

struct Params {
  std::size_t construction_len;
  int identities_imax;
  std::size_t derived_len;
  std::size_t balance_len;
  std::size_t balance_nmax;
  u64 bounds_nmax;
  std::size_t complexity_len;
  std::size_t complexity_nmax;
  std::size_t bispecial_len;
  std::size_t bispecial_max;
  std::size_t returns_len;
  int returns_nmax;
  int lengths_nmax;
  int exponent_nmax;
  std::size_t exponent_prefix;
  u64 perf_base;
  std::size_t perf_queries;
  int dfao_depth;
  int dfao_depth_check;
  u64 dfao_sweep;
};

Params params_for(Profile p) {
  if (p == Profile::Desk)
    return {100000, 25, 100000, 100000, 200, 10000, 100000, 200, 100000, 300, 100000, 6, 20, 20, 20000,
            1000000000000000ULL, 10000, 16, 18, 100000};
  return {1000000, 60, 1000000, 1000000, 300, 1000000, 1000000, 400, 1000000, 600, 1000000, 8, 20, 20, 50000,
          1000000000000000ULL, 100000, 16, 20, 1000000};
}

std::optional<std::size_t> first_mismatch(const Word& a, const Word& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i])
      return i;
  if (a.size() != b.size())
    return n;
  return std::nullopt;
}

json words_json(const std::vector<Word>& ws) {
  json arr = json::array();
  for (const auto& w : ws)
    arr.push_back(w.to_string());
  return arr;
}

CheckResult check_construction(const Params& p) {
  CheckResult r{"C01", "inflation, 0 f(TR) and positional builders of B agree; the first 32 letters are B_5", {}, false, {}, 0};
  r.params = {{"length", p.construction_len}};
  const Word inflation = build_b(p.construction_len, BuildMethod::Inflation);
  const Word morphic = build_b(p.construction_len, BuildMethod::Morphic);
  const Word positional = build_b(p.construction_len, BuildMethod::Positional);
  const auto im = first_mismatch(inflation, morphic);
  const auto ip = first_mismatch(inflation, positional);
  const bool printed = inflation.prefix(32).to_string() == kPrintedB5;
  r.pass = !im && !ip && printed;
  r.detail = {{"inflation_vs_morphic_mismatch", im ? json(*im) : json(nullptr)},
              {"inflation_vs_positional_mismatch", ip ? json(*ip) : json(nullptr)},
              {"prefix32", inflation.prefix(32).to_string()}};
  return r;
}

CheckResult check_iterate_identities(const Params& p) {
  CheckResult r{"C02", "beta_i = T_{i+2}+T_i+1, N00(i) = T_{i-1}+T_{i-2}, N1(i) = 2T_i and beta_i = c_i", {}, false, {}, 0};
  r.params = {{"imax", p.identities_imax}, {"materialized_through", std::min(p.identities_imax, kMaterializedIterates)}};
  const auto checks = verify_iterate_identities(p.identities_imax);
  r.pass = std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass; });
  json rows = json::array();
  for (const auto& c : checks)
    rows.push_back({{"identity", c.identity},
                    {"range", {c.first, c.last}},
                    {"pass", c.pass},
                    {"first_failure", c.first_failure ? json(*c.first_failure) : json(nullptr)}});
  r.detail = {{"identities", rows}};
  return r;
}

CheckResult check_derived_sequence(const Params& p) {
  CheckResult r{"C03", "return words to 10 in B are 100, 101, 10 and the derived sequence of 10 is TR", {}, false, {}, 0};
  r.params = {{"length", p.derived_len}};
  const Word b = build_b(p.derived_len, BuildMethod::Inflation);
  const Word ten = Word::parse("10", 2);
  const auto returns = return_words(b, ten);
  const std::vector<Word> expected{Word::parse("100", 2), Word::parse("101", 2), Word::parse("10", 2)};
  const Word derived = derived_sequence(b, ten);
  const Word tr = tribonacci_prefix(derived.size());
  const bool same = std::equal(derived.letters().begin(), derived.letters().end(), tr.letters().begin());
  r.pass = returns == expected && same;
  r.detail = {{"return_words", words_json(returns)}, {"derived_length", derived.size()}, {"derived_equals_tr", same}};
  return r;
}

CheckResult check_balance(const Params& p) {
  CheckResult r{"C04", "B is 3-balanced but not 2-balanced, failing first at window length 47", {}, false, {}, 0};
  r.params = {{"length", p.balance_len}, {"doubled_length", 2 * p.balance_len}, {"nmax", p.balance_nmax}};
  const Word b = build_b(2 * p.balance_len, BuildMethod::Inflation);
  const auto rows = balance_profile(b.prefix(p.balance_len), p.balance_nmax);
  const auto doubled = balance_profile(b, p.balance_nmax);
  bool stable = true;
  u64 worst = 0;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    stable = stable && rows[k].min_ones == doubled[k].min_ones && rows[k].max_ones == doubled[k].max_ones;
    worst = std::max(worst, rows[k].spread());
  }
  const auto fail2 = first_unbalanced_length(rows, 2);
  const auto fail3 = first_unbalanced_length(rows, 3);
  r.pass = stable && !fail3 && fail2 == std::size_t{47};
  json witness = nullptr;
  if (fail2) {
    const auto& row = rows[*fail2 - 1];
    witness = {{"length", row.n},
               {"min_window", {{"start", row.argmin}, {"ones", row.min_ones}}},
               {"max_window", {{"start", row.argmax}, {"ones", row.max_ones}}}};
  }
  r.detail = {{"max_spread", worst}, {"stable_under_doubling", stable}, {"two_balance_witness", witness}};
  return r;
}

CheckResult check_index_bounds(const Params& p) {
  CheckResult r{"C05", "floor(psi n)-2 <= I0(n) <= floor(psi n)+2 and floor(gamma n)-1 <= I1(n) <= floor(gamma n)+2, with |A0(n)-I0(n)| <= 1", {}, false, {}, 0};
  r.params = {{"nmax", p.bounds_nmax}};
  const auto report = verify_index_bounds(p.bounds_nmax, 1);
  r.pass = report.pass();
  json fams = json::array();
  for (const auto& f : report.families)
    fams.push_back({{"bound", f.name},
                    {"pass", f.pass},
                    {"worst_low_slack", f.worst_low_slack},
                    {"worst_high_slack", f.worst_high_slack}});
  r.detail = {{"families", fams}};
  return r;
}

CheckResult check_complexity(const Params& p) {
  CheckResult r{"C06", "B has factor complexity 2n; its left-special factors are the prefixes of B and 0^-1 B", {}, false, {}, 0};
  r.params = {{"length", p.complexity_len}, {"nmax", p.complexity_nmax}};
  const Word b = build_b(p.complexity_len + 1, BuildMethod::Inflation);
  const FactorReport report = complexity_profile(b.prefix(p.complexity_len), p.complexity_nmax);
  std::optional<std::size_t> bad;
  for (const auto& row : report.rows)
    if (row.complexity != 2 * row.n) {
      bad = row.n;
      break;
    }
  const bool prefixes = left_specials_are_prefixes(report, b);
  r.pass = !bad && prefixes && report.all_saturated();
  r.detail = {{"first_complexity_failure", bad ? json(*bad) : json(nullptr)},
              {"left_specials_are_prefixes", prefixes},
              {"saturated", report.all_saturated()}};
  return r;
}

CheckResult check_bispecials(const Params& p) {
  CheckResult r{"C07", "brute-force bispecial factors of B equal the short list plus the pi(b_n) families", {}, false, {}, 0};
  r.params = {{"length", p.bispecial_len}, {"max_factor_length", p.bispecial_max}};
  const auto cmp = compare_bispecials(build_b(p.bispecial_len, BuildMethod::Inflation), p.bispecial_max);
  r.pass = cmp.match() && cmp.saturated;
  r.detail = {{"count", cmp.found.size()},
              {"missing", words_json(cmp.missing)},
              {"unexpected", words_json(cmp.unexpected)},
              {"saturated", cmp.saturated}};
  return r;
}

CheckResult check_returns(const Params& p) {
  CheckResult r{"C08", "shortest return to pi(b_n)10 is pi(phi^n(0)); |pi(r_n)| = T_{n+5}-T_{n+4}, |pi(b_n)| = T_{n+5}-4", {}, false, {}, 0};
  r.params = {{"length", p.returns_len}, {"return_nmax", p.returns_nmax}, {"length_nmax", p.lengths_nmax}};
  const auto checks = check_shortest_returns(build_b(p.returns_len, BuildMethod::Inflation), p.returns_nmax);
  json rows = json::array();
  bool returns_ok = true;
  for (const auto& c : checks) {
    returns_ok = returns_ok && c.match();
    rows.push_back({{"n", c.n}, {"expected_length", c.expected.size()}, {"match", c.match()}});
  }
  bool lengths_ok = true;
  std::optional<int> first_bad;
  Word rn = Word::parse("0", 3);
  for (int n = 0; n <= p.lengths_nmax; ++n) {
    if (n > 0)
      rn = apply(morphisms::phi(), rn);
    const u64 lr = apply(morphisms::pi(), rn).size();
    const u64 lb = apply(morphisms::pi(), tribonacci_bispecial(n)).size();
    if (lr != trib_number(n + 5) - trib_number(n + 4) || lb != trib_number(n + 5) - 4) {
      lengths_ok = false;
      first_bad = first_bad.value_or(n);
    }
  }
  r.pass = returns_ok && lengths_ok;
  r.detail = {{"shortest_returns", rows}, {"length_formulas", lengths_ok},
              {"first_length_failure", first_bad ? json(*first_bad) : json(nullptr)}};
  return r;
}

CheckResult check_critical_exponent(const Params& p) {
  CheckResult r{"C09", "critical exponent of B is 2 + 1/(psi-1) = 3.19148788395...; the largest exponent in a prefix is 1+|w|/|v| for a bispecial w", {}, false, {}, 0};
  r.params = {{"nmax", p.exponent_nmax}, {"prefix", p.exponent_prefix}};
  const auto rep = critical_exponent_report(p.exponent_nmax, 6, p.exponent_prefix);
  const Word prefix = build_b(p.exponent_prefix, BuildMethod::Inflation);
  const ExponentWitness best = max_exponent(prefix, prefix.size());
  std::optional<int> matched;
  for (const auto& row : rep.rows)
    if (row.e == best.exponent)
      matched = row.n;
  // The border of the witness (its length minus one period) is a bispecial
  // factor recurring at distance `period`; it must belong to the expected list,
  // respect that family's return-length bound, and give exactly best.exponent.
  const Word border = prefix.substr(best.position, best.length - best.period);
  const auto records = theory_bispecials(p.exponent_nmax);
  const BispecialRecord* family = nullptr;
  for (const auto& rec : records)
    if (rec.word == border)
      family = &rec;
  const bool border_ok = family && best.period >= family->return_length &&
                         best.exponent == Rational(static_cast<std::int64_t>(best.length),
                                                   static_cast<std::int64_t>(best.period));
  const bool bounded = compare_with_critical_limit(best.exponent) < 0;
  const double gap = std::abs(rep.rows.back().value - kCriticalExponent);
  r.pass = rep.pass() && gap <= 1e-4 && border_ok && bounded;
  json cross = json::array();
  for (const auto& c : rep.crosscheck)
    cross.push_back({{"n", c.n}, {"length", c.length}, {"expected", c.expected.to_string()},
                     {"brute_force", c.brute_force.to_string()}});
  r.detail = {{"increasing", rep.increasing},
              {"inequality", rep.inequality},
              {"e_last", rep.rows.back().e.to_string()},
              {"gap_to_limit", gap},
              {"brute_force_max", {{"exponent", best.exponent.to_string()},
                                   {"position", best.position},
                                   {"length", best.length},
                                   {"period", best.period},
                                   {"equals_e_n", matched ? json(*matched) : json(nullptr)},
                                   {"border_family", family ? to_string(family->family) : std::string()},
                                   {"border_n", family && family->n ? json(*family->n) : json(nullptr)},
                                   {"border_length", border.size()},
                                   {"below_limit", bounded}}},
              {"crosscheck", cross}};
  return r;
}

CheckResult check_performance(const Params& p) {
  CheckResult r{"C10", "logarithmic-time B[n] at n ~ 10^15 and DFAO equivalence with the positional evaluator", {}, false, {}, 0};
  r.params = {{"base", p.perf_base}, {"queries", p.perf_queries}, {"dfao_depth", p.dfao_depth},
              {"dfao_depth_check", p.dfao_depth_check}, {"sweep", p.dfao_sweep}};

  std::mt19937_64 rng(20170601);
  std::uniform_int_distribution<u64> dist(p.perf_base, 2 * p.perf_base - 1);
  std::vector<u64> queries(p.perf_queries);
  for (auto& q : queries)
    q = dist(rng);
  queries.front() = p.perf_base;
  u64 ones = 0;
  const auto t0 = std::chrono::steady_clock::now();
  for (auto q : queries)
    ones += b_letter(q);
  const double per_query_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count() /
      static_cast<double>(queries.size());

  const Dfao dfao = dfao_synthesize(p.dfao_depth);
  std::optional<u64> mismatch;
  for (u64 n = 0; n < p.dfao_sweep && !mismatch; ++n)
    if (dfao.eval(n) != b_letter(n))
      mismatch = n;
  const Dfao deeper = dfao_synthesize(p.dfao_depth_check);

  r.pass = per_query_ms < 1.0 && !mismatch && deeper.state_count() == dfao.state_count();
  r.detail = {{"query_checksum_ones", ones},
              {"query_under_1ms", per_query_ms < 1.0},
              {"dfao_states", dfao.state_count()},
              {"dfao_states_deeper", deeper.state_count()},
              {"dfao_identical", deeper == dfao},
              {"first_mismatch", mismatch ? json(*mismatch) : json(nullptr)}};
  r.detail["__per_query_ms"] = per_query_ms;
  return r;
}

using CheckFn = std::function<CheckResult(const Params&)>;

CheckResult timed(const CheckFn& fn, const Params& p, const std::string& id) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckResult r;
  try {
    r = fn(p);
  } catch (const std::exception& e) {
    r.id = id;
    r.pass = false;
    r.detail = {{"error", e.what()}};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

} // namespace

Profile parse_profile(std::string_view name) {
  if (name == "desk")
    return Profile::Desk;
  if (name == "deep")
    return Profile::Deep;
  throw std::invalid_argument("unknown profile '" + std::string(name) + "' (expected desk or deep)");
}

std::string_view to_string(Profile profile) { return profile == Profile::Desk ? "desk" : "deep"; }

bool VerificationSuiteResult::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

json VerificationSuiteResult::to_json(bool with_timings) const {
  json out = {{"schema", 1}, {"profile", std::string(to_string(profile))}, {"pass", pass()}};
  json arr = json::array();
  for (const auto& c : checks) {
    json detail = c.detail;
    json timing = nullptr;
    if (detail.is_object() && detail.contains("__per_query_ms")) {
      timing = detail["__per_query_ms"];
      detail.erase("__per_query_ms");
    }
    json item = {{"id", c.id}, {"claim", c.claim}, {"params", c.params}, {"pass", c.pass}, {"detail", detail}};
    if (with_timings) {
      item["seconds"] = c.seconds;
      if (!timing.is_null())
        item["per_query_ms"] = timing;
    }
    arr.push_back(std::move(item));
  }
  out["checks"] = std::move(arr);
  return out;
}

unsigned worker_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("TRIBWORDS_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      return static_cast<unsigned>(std::min<unsigned long>(v, 256));
  }
  return hw;
}

VerificationSuiteResult run_suite(Profile profile, unsigned threads) {
  const Params p = params_for(profile);
  const std::vector<std::pair<std::string, CheckFn>> parallel{
      {"C01", check_construction}, {"C02", check_iterate_identities}, {"C03", check_derived_sequence},
      {"C04", check_balance},      {"C05", check_index_bounds}, {"C06", check_complexity},
      {"C07", check_bispecials},   {"C08", check_returns},      {"C09", check_critical_exponent},
  };

  VerificationSuiteResult result;
  result.profile = profile;
  result.checks.resize(parallel.size() + 1);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < parallel.size();)
      result.checks[k] = timed(parallel[k].second, p, parallel[k].first);
  };
  const unsigned n_workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(parallel.size())));
  if (n_workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < n_workers; ++w)
      pool.emplace_back(worker);
    for (auto& t : pool)
      t.join();
  }
  result.checks.back() = timed(check_performance, p, "C10");
  return result;
}

} // namespace tribwords
