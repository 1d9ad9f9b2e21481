#include "tribwords/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "tribwords/dfao.hpp"
#include "tribwords/factor_lab.hpp"
#include "tribwords/kimberling.hpp"
#include "tribwords/navigator.hpp"
#include "tribwords/numeration.hpp"
#include "tribwords/suite.hpp"
#include "tribwords/words.hpp"

namespace tribwords {

using nlohmann::json;

namespace {

constexpr u64 kMaxEvalIndex = static_cast<u64>(std::numeric_limits<std::int64_t>::max());

u64 parse_decimal(const std::string& text, const char* what, u64 max = std::numeric_limits<u64>::max()) {
  u64 v = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (text.empty() || ec == std::errc::invalid_argument || ptr != last)
    throw std::invalid_argument(std::string(what) + ": '" + text + "' is not a decimal integer");
  if (ec == std::errc::result_out_of_range || v > max)
    throw std::overflow_error(std::string(what) + ": " + text + " exceeds " + std::to_string(max));
  return v;
}

std::string json_text(const json& j) { return j.dump(2) + "\n"; }

// Options shared by all subcommands, filled in by CLI11 and consumed by the handlers.
struct Options {
  bool json = false;
  bool timings = false;
  std::string n_text;
  std::string digits;
  std::size_t length = 0;
  std::string morphism = "phi";
  std::string method = "inflation";
  int imax = 25;
  std::string nmax_text = "10000";
  std::string profile = "desk";
  int depth = 16;
  std::string out_path;
  std::string file_path;
  std::size_t nmax = 0;
  u64 k = 3;
  std::size_t cap = 0;
};

class Runner {
public:
  Runner(std::ostream& out) : out_(out) {}

  int numeration(const std::string& op, const Options& o) {
    if (op == "decode") {
      const u64 n = decode(TribRep::parse(o.digits));
      if (o.json)
        out_ << json_text({{"digits", o.digits}, {"value", n}});
      else
        out_ << n << "\n";
      return kExitOk;
    }
    const u64 n = parse_decimal(o.n_text, "n");
    const TribRep rep = op == "encode" ? encode(n) : encode(shift(n));
    if (o.json) {
      json j = {{"n", n}, {"digits", rep.to_string()}};
      if (op == "shift")
        j["value"] = decode(rep);
      out_ << json_text(j);
    } else if (op == "encode") {
      out_ << rep.to_string() << "\n";
    } else {
      out_ << decode(rep) << "\n";
    }
    return kExitOk;
  }

  int gen(const std::string& what, const Options& o) {
    Word w;
    if (what == "tr")
      w = tribonacci_prefix(o.length);
    else if (what == "fixed-point")
      w = fixed_point_prefix(morphisms::by_name(o.morphism), 0, o.length);
    else
      w = build_b(o.length, parse_build_method(o.method));
    if (o.json)
      out_ << json_text({{"word", what}, {"length", w.size()}, {"letters", w.to_string()}});
    else
      out_ << w.to_string() << "\n";
    return kExitOk;
  }

  int eval(const std::string& what, const Options& o) {
    const u64 n = parse_decimal(o.n_text, "--n", kMaxEvalIndex);
    u64 value = 0;
    int index_base = 0;
    if (what == "b") {
      value = b_letter(n);
      index_base = 0;
    } else if (what == "tr") {
      value = tr_letter(n);
      index_base = 0;
    } else if (what == "nth1" || what == "nth0") {
      if (n == 0)
        throw std::invalid_argument("--n: occurrence counts start at 1");
      value = what == "nth1" ? nth1_b(n) : nth0_b(n);
      index_base = 1;
    }
    if (o.json)
      out_ << json_text({{"query", what}, {"n", n}, {"value", value}, {"index_base", index_base}});
    else
      out_ << value << "\n";
    return kExitOk;
  }

  int verify_prop1(const Options& o) {
    const auto checks = verify_iterate_identities(o.imax);
    bool pass = true;
    json arr = json::array();
    for (const auto& c : checks) {
      pass = pass && c.pass;
      arr.push_back({{"identity", c.identity}, {"range", {c.first, c.last}}, {"pass", c.pass}});
    }
    if (o.json) {
      out_ << json_text({{"schema", 1}, {"pass", pass}, {"identities", arr}});
    } else {
      for (const auto& c : checks)
        out_ << (c.pass ? "ok   " : "FAIL ") << c.identity << "  [" << c.first << ", " << c.last << "]\n";
    }
    return pass ? kExitOk : kExitCheckFailed;
  }

  int verify_bounds(const Options& o) {
    const u64 n_max = parse_decimal(o.nmax_text, "--nmax", u64{1} << 36);
    const auto report = verify_index_bounds(n_max, worker_count());
    if (o.json) {
      json arr = json::array();
      for (const auto& f : report.families)
        arr.push_back({{"bound", f.name},
                       {"pass", f.pass},
                       {"worst_low_slack", f.worst_low_slack},
                       {"worst_high_slack", f.worst_high_slack},
                       {"first_failure", f.first_failure ? json(*f.first_failure) : json(nullptr)}});
      out_ << json_text({{"schema", 1}, {"nmax", n_max}, {"pass", report.pass()}, {"families", arr}});
    } else {
      for (const auto& f : report.families)
        out_ << (f.pass ? "ok   " : "FAIL ") << f.name << "  slack low " << f.worst_low_slack << ", high "
             << f.worst_high_slack << "\n";
    }
    return report.pass() ? kExitOk : kExitCheckFailed;
  }

  int verify_all(const Options& o) {
    const auto result = run_suite(parse_profile(o.profile), worker_count());
    if (o.json) {
      out_ << json_text(result.to_json(o.timings));
    } else {
      for (const auto& c : result.checks) {
        out_ << (c.pass ? "[PASS] " : "[FAIL] ") << c.id << "  " << c.claim;
        if (o.timings)
          out_ << "  (" << std::fixed << std::setprecision(3) << c.seconds << " s)";
        out_ << "\n";
      }
      out_ << (result.pass() ? "all checks passed" : "some checks failed") << "\n";
    }
    return result.pass() ? kExitOk : kExitCheckFailed;
  }

  int dfao_synth(const Options& o) {
    const Dfao dfao = dfao_synthesize(o.depth);
    if (o.out_path.empty()) {
      dfao.write(out_);
    } else {
      std::ofstream file(o.out_path);
      if (!file)
        throw std::runtime_error("cannot open '" + o.out_path + "' for writing");
      dfao.write(file);
      if (o.json)
        out_ << json_text({{"depth", o.depth}, {"states", dfao.state_count()}, {"file", o.out_path}});
      else
        out_ << dfao.state_count() << " states written to " << o.out_path << "\n";
    }
    return kExitOk;
  }

  int dfao_eval(const Options& o) {
    std::ifstream file(o.file_path);
    if (!file)
      throw std::runtime_error("cannot open '" + o.file_path + "'");
    const Dfao dfao = Dfao::read(file);
    const u64 n = parse_decimal(o.n_text, "--n");
    const Letter v = dfao.eval(n);
    if (o.json)
      out_ << json_text({{"n", n}, {"value", v}});
    else
      out_ << int(v) << "\n";
    return kExitOk;
  }

  int analyze_complexity(const Options& o) {
    const std::size_t nmax = o.nmax ? o.nmax : 200;
    const std::size_t len = o.length ? o.length : 100000;
    const FactorReport rep = complexity_profile(build_b(len, BuildMethod::Inflation), nmax);
    bool pass = rep.all_saturated();
    json arr = json::array();
    for (const auto& row : rep.rows) {
      pass = pass && row.complexity == 2 * row.n;
      arr.push_back({{"n", row.n},
                     {"complexity", row.complexity},
                     {"left_special", row.left_special.size()},
                     {"right_special", row.right_special.size()},
                     {"bispecial", row.bispecial.size()},
                     {"saturated", row.saturated}});
    }
    if (o.json) {
      out_ << json_text({{"schema", 1}, {"length", len}, {"pass", pass}, {"rows", arr}});
    } else {
      out_ << "   n   p(n)  left  right  bisp\n";
      for (const auto& row : rep.rows)
        out_ << std::setw(4) << row.n << std::setw(7) << row.complexity << std::setw(6) << row.left_special.size()
             << std::setw(7) << row.right_special.size() << std::setw(6) << row.bispecial.size()
             << (row.saturated ? "" : "  unsaturated") << "\n";
    }
    return pass ? kExitOk : kExitCheckFailed;
  }

  int analyze_balance(const Options& o) {
    const std::size_t nmax = o.nmax ? o.nmax : 200;
    const std::size_t len = o.length ? o.length : 100000;
    const auto rows = balance_profile(build_b(len, BuildMethod::Inflation), nmax);
    const auto fail = first_unbalanced_length(rows, o.k);
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"n", r.n}, {"min_ones", r.min_ones}, {"max_ones", r.max_ones},
                     {"argmin", r.argmin}, {"argmax", r.argmax}});
    if (o.json) {
      json witness = nullptr;
      if (fail)
        witness = {{"n", *fail}, {"argmin", rows[*fail - 1].argmin}, {"argmax", rows[*fail - 1].argmax}};
      out_ << json_text({{"schema", 1}, {"length", len}, {"k", o.k}, {"pass", !fail}, {"witness", witness},
                         {"rows", arr}});
    } else {
      out_ << "   n  min  max  spread\n";
      for (const auto& r : rows)
        out_ << std::setw(4) << r.n << std::setw(5) << r.min_ones << std::setw(5) << r.max_ones << std::setw(8)
             << r.spread() << "\n";
      if (fail)
        out_ << "not " << o.k << "-balanced: window length " << *fail << ", starts " << rows[*fail - 1].argmin
             << " and " << rows[*fail - 1].argmax << "\n";
      else
        out_ << o.k << "-balanced for window lengths up to " << nmax << "\n";
    }
    return fail ? kExitCheckFailed : kExitOk;
  }

  int analyze_exponent(const Options& o) {
    const std::size_t len = o.length ? o.length : 20000;
    const Word b = build_b(len, BuildMethod::Inflation);
    const std::size_t cap = o.cap ? std::min(o.cap, len) : len;
    const auto best = max_exponent(b, cap);
    const bool below = compare_with_critical_limit(best.exponent) < 0;
    if (o.json)
      out_ << json_text({{"schema", 1},
                         {"length", len},
                         {"cap", cap},
                         {"pass", below},
                         {"exponent", best.exponent.to_string()},
                         {"value", best.exponent.to_double()},
                         {"position", best.position},
                         {"factor_length", best.length},
                         {"period", best.period}});
    else
      out_ << "max exponent " << best.exponent << " (" << std::setprecision(12) << best.exponent.to_double()
           << ") at position " << best.position << ", length " << best.length << ", period " << best.period
           << (below ? "" : "  above the critical limit") << "\n";
    return below ? kExitOk : kExitCheckFailed;
  }

  int analyze_bispecial(const Options& o) {
    const std::size_t nmax = o.nmax ? o.nmax : 300;
    const std::size_t len = o.length ? o.length : 100000;
    const auto cmp = compare_bispecials(build_b(len, BuildMethod::Inflation), nmax);
    const bool pass = cmp.match() && cmp.saturated;
    if (o.json) {
      json arr = json::array();
      for (const auto& w : cmp.found)
        arr.push_back({{"n", w.size()}, {"word", w.to_string()}});
      json missing = json::array(), unexpected = json::array();
      for (const auto& w : cmp.missing)
        missing.push_back(w.to_string());
      for (const auto& w : cmp.unexpected)
        unexpected.push_back(w.to_string());
      out_ << json_text({{"schema", 1}, {"length", len}, {"nmax", nmax}, {"pass", pass}, {"bispecial", arr},
                         {"missing", missing}, {"unexpected", unexpected}});
    } else {
      for (const auto& w : cmp.found) {
        const std::string s = w.to_string();
        out_ << std::setw(4) << w.size() << "  " << (s.size() > 60 ? s.substr(0, 57) + "..." : s) << "\n";
      }
      out_ << cmp.found.size() << " bispecial factors, " << cmp.missing.size() << " missing, "
           << cmp.unexpected.size() << " unexpected\n";
    }
    return pass ? kExitOk : kExitCheckFailed;
  }

private:
  std::ostream& out_;
};

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kimberling's sequence B and the Tribonacci word", "tribwords"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Machine-readable JSON output");
  std::function<int()> action;
  Runner run(out);

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc, std::function<int()> fn) {
    auto* sub = parent->add_subcommand(name, desc);
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };

  auto* numeration = app.add_subcommand("numeration", "Tribonacci representations")->require_subcommand(1);
  for (const char* op : {"encode", "shift"}) {
    const std::string name = op;
    leaf(numeration, name, name == "encode" ? "Greedy representation of n, msd-first" : "Value of encode(n) followed by 0",
         [&, name] { return run.numeration(name, o); })
        ->add_option("n", o.n_text, "Decimal integer")
        ->required();
  }
  leaf(numeration, "decode", "Value of a digit string", [&] { return run.numeration("decode", o); })
      ->add_option("digits", o.digits, "Binary digits without 111, msd-first")
      ->required();

  auto* gen = app.add_subcommand("gen", "Generate prefixes of TR, B or a fixed point")->require_subcommand(1);
  leaf(gen, "tr", "Prefix of the Tribonacci word", [&] { return run.gen("tr", o); })
      ->add_option("--length", o.length, "Number of letters")
      ->required();
  auto* fp = leaf(gen, "fixed-point", "Prefix of a morphism's fixed point from 0", [&] { return run.gen("fixed-point", o); });
  fp->add_option("--morphism", o.morphism, "phi, f, pi, inflation or identity")->capture_default_str();
  fp->add_option("--length", o.length, "Number of letters")->required();
  auto* gb = leaf(gen, "b", "Prefix of B", [&] { return run.gen("b", o); });
  gb->add_option("--length", o.length, "Number of letters")->required();
  gb->add_option("--method", o.method, "inflation, morphic or positional")
      ->check(CLI::IsMember({"inflation", "morphic", "positional"}))
      ->capture_default_str();

  auto* eval = app.add_subcommand("eval", "Positional evaluation")->require_subcommand(1);
  const std::vector<std::pair<std::string, std::string>> evals{
      {"b", "B[n], 0-indexed"},
      {"tr", "TR[n], 0-indexed"},
      {"nth1", "1-indexed position of the n'th 1 of B"},
      {"nth0", "1-indexed position of the n'th 0 of B"}};
  for (const auto& [name, desc] : evals)
    leaf(eval, name, desc, [&, name = name] { return run.eval(name, o); })
        ->add_option("--n", o.n_text, "Decimal index, at most 2^63-1")
        ->required();

  auto* verify = app.add_subcommand("verify", "Verification checks")->require_subcommand(1);
  leaf(verify, "prop1", "Length and counting identities of the inflation iterates", [&] { return run.verify_prop1(o); })
      ->add_option("--imax", o.imax, "Largest iterate index")
      ->capture_default_str();
  leaf(verify, "bounds", "Index bounds for the n'th 0 and n'th 1", [&] { return run.verify_bounds(o); })
      ->add_option("--nmax", o.nmax_text, "Largest n")
      ->capture_default_str();
  auto* all = leaf(verify, "all", "Every acceptance check", [&] { return run.verify_all(o); });
  all->add_option("--profile", o.profile, "desk or deep")
      ->check(CLI::IsMember({"desk", "deep"}))
      ->capture_default_str();
  all->add_flag("--timings", o.timings, "Include wall times (output is then not reproducible)");

  auto* dfao = app.add_subcommand("dfao", "Automaton for B")->require_subcommand(1);
  auto* synth = leaf(dfao, "synth", "Learn and minimize the DFAO", [&] { return run.dfao_synth(o); });
  synth->add_option("--depth", o.depth, "Digit depth, 8..24")->capture_default_str();
  synth->add_option("--out", o.out_path, "Output file (default: standard output)");
  auto* deval = leaf(dfao, "eval", "Run a DFAO file on encode(n)", [&] { return run.dfao_eval(o); });
  deval->add_option("--file", o.file_path, "DFAO text file")->required();
  deval->add_option("--n", o.n_text, "Decimal integer")->required();

  auto* analyze = app.add_subcommand("analyze", "Brute-force analysis of a B-prefix")->require_subcommand(1);
  auto* cx = leaf(analyze, "complexity", "Factor complexity and special factors", [&] { return run.analyze_complexity(o); });
  cx->add_option("--length", o.length, "Prefix length (default 100000)");
  cx->add_option("--nmax", o.nmax, "Largest factor length (default 200)");
  auto* bal = leaf(analyze, "balance", "Sliding-window balance", [&] { return run.analyze_balance(o); });
  bal->add_option("--k", o.k, "Balance bound to test")->capture_default_str();
  bal->add_option("--length", o.length, "Prefix length (default 100000)");
  bal->add_option("--nmax", o.nmax, "Largest window length (default 200)");
  auto* ex = leaf(analyze, "exponent", "Largest exponent of a factor", [&] { return run.analyze_exponent(o); });
  ex->add_option("--cap", o.cap, "Largest factor length (default: the prefix length)");
  ex->add_option("--length", o.length, "Prefix length (default 20000)");
  auto* bs = leaf(analyze, "bispecial", "Bispecial factors versus the expected families", [&] { return run.analyze_bispecial(o); });
  bs->add_option("--nmax", o.nmax, "Largest factor length (default 300)");
  bs->add_option("--length", o.length, "Prefix length (default 100000)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (!action) {
    err << app.help();
    return kExitUsage;
  }
  try {
    return action();
  } catch (const std::exception& e) {
    err << "tribwords: " << e.what() << "\n";
    return kExitInvalidInput;
  }
}

} // namespace tribwords
