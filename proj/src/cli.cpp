#include "fibpart/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "fibpart/asymptotics.hpp"
#include "fibpart/counting.hpp"
#include "fibpart/dynamics.hpp"
#include "fibpart/errors.hpp"
#include "fibpart/staircase.hpp"
#include "fibpart/zeckendorf.hpp"

namespace fibpart::cli {

namespace {

struct Cell {
  std::string text;
  bool numeric = true;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void write(std::ostream& os, Format format) const {
    if (format == Format::csv) {
      for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
      os << '\n';
      for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i].text;
        os << '\n';
      }
      return;
    }
    // Numeric cells are written verbatim so unbounded integers stay exact.
    os << "[";
    for (std::size_t r = 0; r < rows.size(); ++r) {
      os << (r ? ",\n " : "\n ") << "{";
      for (std::size_t i = 0; i < columns.size(); ++i) {
        os << (i ? "," : "") << nlohmann::json(columns[i]).dump() << ":";
        const Cell& c = rows[r][i];
        os << (c.numeric ? c.text : nlohmann::json(c.text).dump());
      }
      os << "}";
    }
    os << (rows.empty() ? "]\n" : "\n]\n");
  }
};

Cell num(const Integer& v) { return {to_string(v), true}; }
Cell num(std::uint64_t v) { return {std::to_string(v), true}; }
Cell text(std::string s) { return {std::move(s), false}; }
Cell flag(bool b) { return {b ? "true" : "false", true}; }

Cell real(long double v, unsigned precision) {
  std::ostringstream os;
  os << std::setprecision(static_cast<int>(precision)) << v;
  return {os.str(), true};
}

// ---- parallel range helper -------------------------------------------------

struct Chunk {
  std::uint64_t from;
  std::uint64_t to;
};

std::vector<Chunk> split(std::uint64_t from, std::uint64_t to, unsigned jobs) {
  std::vector<Chunk> out;
  const std::uint64_t total = to - from + 1;
  const std::uint64_t parts = std::min<std::uint64_t>(std::max(1u, jobs), total);
  std::uint64_t start = from;
  for (std::uint64_t i = 0; i < parts; ++i) {
    const std::uint64_t len = total / parts + (i < total % parts ? 1 : 0);
    out.push_back({start, start + len - 1});
    start += len;
  }
  return out;
}

template <typename Result>
std::vector<Result> run_chunks(const std::vector<Chunk>& chunks, unsigned jobs,
                               const std::function<Result(const Chunk&)>& work) {
  std::vector<Result> results(chunks.size());
  if (jobs <= 1 || chunks.size() == 1) {
    for (std::size_t i = 0; i < chunks.size(); ++i) results[i] = work(chunks[i]);
    return results;
  }
  std::vector<std::jthread> workers;
  workers.reserve(chunks.size());
  for (std::size_t i = 0; i < chunks.size(); ++i)
    workers.emplace_back([&, i] { results[i] = work(chunks[i]); });
  workers.clear();  // joins
  return results;
}

// ---- commands ----------------------------------------------------------------

int cmd_r(const RunConfig& c, std::ostream& os) {
  os << to_string(r_pair(parse_integer(c.value)).current) << '\n';
  return kExitOk;
}

int cmd_zeckendorf(const RunConfig& c, std::ostream& os) {
  os << encode(parse_integer(c.value)).str() << '\n';
  return kExitOk;
}

int cmd_seq(const RunConfig& c, std::ostream& os) {
  if (c.to < c.from) throw CLI::ValidationError("--to", "must be >= --from");
  const auto chunks = split(c.from, c.to, c.jobs);
  const auto parts = run_chunks<std::vector<Integer>>(
      chunks, c.jobs, [](const Chunk& ch) { return r_values(ch.from, ch.to); });
  Table t{{"n", "R"}, {}};
  std::uint64_t n = c.from;
  for (const auto& part : parts)
    for (const auto& r : part) t.rows.push_back({num(n++), num(r)});
  t.write(os, c.format);
  return kExitOk;
}

int cmd_orbit(const RunConfig& c, std::ostream& os) {
  Table t{{"n", "y_decimal", "y_p", "y_q", "h_num", "h_den", "log_h"}, {}};
  OrbitPoint pt = orbit_point(0);
  for (std::uint64_t n = 0; n <= c.steps; ++n) {
    const Ratio h = h_eval(pt.y);
    const long double log_h = std::log(h.num().convert_to<long double>()) - std::log(h.den().convert_to<long double>());
    t.rows.push_back({num(n), num(Integer(0)), num(pt.y.p()), num(pt.y.q()), num(h.num()), num(h.den()),
                      real(log_h, c.precision)});
    t.rows.back()[1] = {to_decimal(pt.y, c.precision), true};
    pt = successor(pt);
  }
  t.write(os, c.format);
  return kExitOk;
}

int cmd_staircase(const RunConfig& c, std::ostream& os) {
  Table t{{"lo_dec", "hi_dec", "value_num", "value_den", "lo_p", "lo_q", "hi_p", "hi_q"}, {}};
  for (const auto& p : staircase_table(c.depth)) {
    const Interval& i = p.interval;
    t.rows.push_back({{to_decimal(i.lo, c.precision), true},
                      {to_decimal(i.hi, c.precision), true},
                      num(p.value.num()),
                      num(p.value.den()),
                      num(i.lo.p()),
                      num(i.lo.q()),
                      num(i.hi.p()),
                      num(i.hi.q())});
  }
  t.write(os, c.format);
  return kExitOk;
}

void add_window_rows(Table& t, const Window& w, unsigned precision) {
  for (const auto& i : w.intervals())
    t.rows.push_back({text(i.str()), num(i.lo.p()), num(i.lo.q()), num(i.hi.p()), num(i.hi.q()), flag(i.lo_closed),
                      flag(i.hi_closed), {to_decimal(i.lo, precision), true}, {to_decimal(i.hi, precision), true}});
}

int cmd_window(const RunConfig& c, std::ostream& os) {
  Table t{{"interval", "lo_p", "lo_q", "hi_p", "hi_q", "lo_closed", "hi_closed", "lo_dec", "hi_dec"}, {}};
  add_window_rows(t, patch_window(Patch::parse(c.pattern)), c.precision);
  t.write(os, c.format);
  return kExitOk;
}

int cmd_patch(const RunConfig& c, std::ostream& os) {
  const Patch patch = Patch::parse(c.pattern);
  const auto chunks = split(0, c.limit, c.jobs);
  const auto parts = run_chunks<std::vector<std::uint64_t>>(
      chunks, c.jobs, [&](const Chunk& ch) { return patch_hits(patch, ch.from, ch.to); });
  std::vector<std::uint64_t> hits;
  for (const auto& p : parts) hits.insert(hits.end(), p.begin(), p.end());
  if (c.density) {
    const Density d = density(patch, c.precision);
    const long double empirical =
        static_cast<long double>(hits.size()) / static_cast<long double>(c.limit + 1);
    Table t{{"limit", "hits", "empirical", "density_p", "density_q", "density_decimal"}, {}};
    t.rows.push_back({num(c.limit), num(static_cast<std::uint64_t>(hits.size())), real(empirical, c.precision),
                      num(d.exact.p()), num(d.exact.q()), {d.approx, true}});
    t.write(os, c.format);
    return kExitOk;
  }
  Table t{{"n"}, {}};
  for (auto n : hits) t.rows.push_back({num(n)});
  t.write(os, c.format);
  return kExitOk;
}

int cmd_growth(const RunConfig& c, std::ostream& os) {
  if (c.from < 1 || c.to < c.from) throw CLI::ValidationError("growth", "needs 1 <= --from <= --to");
  Table t{{"H", "logH", "ratio"}, {}};
  for (const auto& s : growth_curve(c.from, c.to))
    t.rows.push_back({num(s.H), real(s.logH, c.precision), real(s.ratio, c.precision)});
  t.write(os, c.format);
  return kExitOk;
}

int cmd_cdf(const RunConfig& c, std::ostream& os) {
  const CdfBound b = cdf_bounds(GoldenFraction::parse(c.value), c.depth);
  Table t{{"x", "k", "lower", "upper", "lower_dec", "upper_dec"}, {}};
  const Ratio lo = b.lower();
  const Ratio hi = b.upper();
  t.rows.push_back({{b.x.decimal(c.precision), true},
                    num(std::uint64_t{b.k}),
                    text(lo.str()),
                    text(hi.str()),
                    {to_significant(lo.num(), lo.den(), c.precision), true},
                    {to_significant(hi.num(), hi.den(), c.precision), true}});
  t.write(os, c.format);
  return kExitOk;
}

int cmd_profile(const RunConfig& c, std::ostream& os) {
  Table t{{"gamma", "value", "lower", "upper"}, {}};
  for (const auto& p : limit_profile(c.samples, c.depth)) {
    const Ratio lo = p.bound.lower();
    const Ratio hi = p.bound.upper();
    t.rows.push_back({{p.gamma.decimal(c.precision), true},
                      real(p.value, c.precision),
                      {to_significant(lo.num(), lo.den(), c.precision), true},
                      {to_significant(hi.num(), hi.den(), c.precision), true}});
  }
  t.write(os, c.format);
  return kExitOk;
}

// ---- verify --------------------------------------------------------------------

using Failure = std::optional<std::string>;

Failure verify_counts(const Chunk& ch) {
  const std::uint64_t oracle_cap = kDefaultOracleBound;
  const auto batch = r_values(ch.from, ch.to + 1);
  OrbitPoint pt = orbit_point(Integer(ch.from));
  for (std::uint64_t n = ch.from; n <= ch.to; ++n) {
    const Integer& r = batch[n - ch.from];
    const Integer& r_next = batch[n - ch.from + 1];
    const RPair pair = r_pair(Integer(n));
    if (pair.current != r) return "matrix R(" + std::to_string(n) + ") != batch value";
    if (n > 0 && (!pair.previous || *pair.previous != (n == ch.from ? r_pair(Integer(n - 1)).current
                                                                     : batch[n - ch.from - 1])))
      return "pair consistency fails at n = " + std::to_string(n);
    if (n <= oracle_cap && r_bruteforce(n) != r) return "oracle R(" + std::to_string(n) + ") != batch value";
    const Ratio h = h_eval(pt.y);
    if (r * h.num() != r_next * h.den()) return "cocycle h(y_n) != R(n+1)/R(n) at n = " + std::to_string(n);
    if (!in_strip(pt.y) || pt.y != pt.x.conjugate()) return "orbit confinement fails at n = " + std::to_string(n);
    const OrbitPoint next = successor(pt);
    if (g_index(next.x, next.y) != g_index(pt.x, pt.y) + 1) return "g(s(p)) != g(p) + 1 at n = " + std::to_string(n);
    if (next != orbit_point(Integer(n + 1))) return "successor disagrees with orbit_point at n = " + std::to_string(n + 1);
    pt = next;
  }
  return std::nullopt;
}

int cmd_verify(const RunConfig& c, std::ostream& os, std::ostream& err) {
  std::vector<std::pair<std::string, std::function<Failure()>>> checks;
  checks.emplace_back("R paths agree (oracle, matrix, cocycle, batch), pair consistency, orbit confinement", [&]() -> Failure {
    const auto chunks = split(0, c.max, c.jobs);
    for (const auto& f : run_chunks<Failure>(chunks, c.jobs, verify_counts))
      if (f) return f;
    return std::nullopt;
  });
  checks.emplace_back("cocycle product equals batch sequence", [&]() -> Failure {
    const auto cocycle = cocycle_sequence(c.max);
    const auto batch = r_values(0, c.max);
    for (std::uint64_t n = 0; n <= c.max; ++n)
      if (cocycle[n] != batch[n]) return "cocycle R(" + std::to_string(n) + ") != batch value";
    return std::nullopt;
  });
  for (const char* pattern : {"1", "1,1"}) {
    checks.emplace_back(std::string("window/scan duality for patch (") + pattern + ")", [&, pattern]() -> Failure {
      const Patch p = Patch::parse(pattern);
      if (patch_hits(p, 0, c.max) != patch_hits_by_scan(p, 0, c.max)) return std::string("hit sets differ");
      return std::nullopt;
    });
  }
  checks.emplace_back("longest nondecreasing run is R(0..3)", [&]() -> Failure {
    if (c.max < 3) return std::nullopt;
    const RunStats s = longest_nondecreasing_run(c.max);
    if (s.k_max != 3 || s.witnesses != std::vector<std::uint64_t>{0})
      return "k_max = " + std::to_string(s.k_max) + " with " + std::to_string(s.witnesses.size()) + " witnesses";
    return std::nullopt;
  });
  checks.emplace_back("CDF sandwich lower <= upper, monotone in x", [&]() -> Failure {
    const unsigned k = 12;
    const PartialSums sums(cdf_sums_needed(k));
    std::optional<CdfBound> prev;
    for (int i = 0; i <= 32; ++i) {
      const GoldenFraction x{GoldenNum::phi() * GoldenNum(i), 32};
      CdfBound b = cdf_bounds(x, k, sums);
      if (b.lower_count > b.upper_count) return "lower > upper at x = " + x.decimal();
      if (prev && (b.lower_count < prev->lower_count || b.upper_count < prev->upper_count))
        return "bounds decrease at x = " + x.decimal();
      prev = std::move(b);
    }
    return std::nullopt;
  });

  for (const auto& [name, check] : checks) {
    if (auto f = check()) {
      err << "verification failed: " << name << ": " << *f << '\n';
      return kExitVerifyFailed;
    }
    os << "ok  " << name << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Fibonacci partition function toolkit", "fibpart"};
  app.require_subcommand(1);
  app.fallthrough();

  const std::map<std::string, Format> formats{{"csv", Format::csv}, {"json", Format::json}};
  app.add_option("--format", cfg.format, "csv or json")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--out", cfg.out, "output file (default: standard output)");
  app.add_option("--precision", cfg.precision, "decimal digits")->check(CLI::Range(1u, 200u));
  app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1u, 256u));

  auto* r = app.add_subcommand("r", "print R(n)");
  r->add_option("n", cfg.value)->required();
  auto* z = app.add_subcommand("zeckendorf", "print the Zeckendorf word of n");
  z->add_option("n", cfg.value)->required();
  auto* seq = app.add_subcommand("seq", "R(n) for a range of n");
  seq->add_option("--from", cfg.from);
  seq->add_option("--to", cfg.to)->required();
  auto* orbit = app.add_subcommand("orbit", "orbit of 0 with h values");
  orbit->add_option("--steps", cfg.steps);
  auto* stair = app.add_subcommand("staircase", "plateaus of h");
  stair->add_option("--depth", cfg.depth)->check(CLI::Range(0u, 24u));
  auto* window = app.add_subcommand("window", "acceptance window of a patch");
  window->add_option("--pattern", cfg.pattern)->required();
  auto* patch = app.add_subcommand("patch", "occurrences of a patch");
  patch->add_option("--pattern", cfg.pattern)->required();
  patch->add_option("--limit", cfg.limit);
  patch->add_flag("--density", cfg.density, "print the exact density instead of the hits");
  auto* growth = app.add_subcommand("growth", "A(H) / H^(log 2 / log phi)");
  growth->add_option("--from", cfg.from);
  growth->add_option("--to", cfg.to)->required();
  auto* cdf = app.add_subcommand("cdf", "dyadic bounds on the Bernoulli convolution CDF");
  cdf->add_option("x", cfg.value)->required();
  cdf->add_option("--depth", cfg.depth)->check(CLI::Range(2u, 40u));
  auto* profile = app.add_subcommand("profile", "log-periodic limit profile on [1, phi]");
  profile->add_option("--samples", cfg.samples)->check(CLI::Range(2, 100000));
  profile->add_option("--depth", cfg.depth)->check(CLI::Range(2u, 40u));
  auto* verify = app.add_subcommand("verify", "cross-path consistency sweeps");
  verify->add_option("--max", cfg.max);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "usage error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (cfg.command == "growth" && cfg.from == 0) cfg.from = 1;

  std::ofstream file;
  if (!cfg.out.empty()) {
    file.open(cfg.out);
    if (!file) {
      err << "cannot open output file " << cfg.out << '\n';
      return kExitUsage;
    }
  }
  std::ostream& os = cfg.out.empty() ? out : file;

  try {
    static const std::map<std::string, std::function<int(const RunConfig&, std::ostream&)>> commands{
        {"r", cmd_r},           {"zeckendorf", cmd_zeckendorf}, {"seq", cmd_seq},
        {"orbit", cmd_orbit},   {"staircase", cmd_staircase},   {"window", cmd_window},
        {"patch", cmd_patch},   {"growth", cmd_growth},         {"cdf", cmd_cdf},
        {"profile", cmd_profile}};
    if (cfg.command == "verify") return cmd_verify(cfg, os, err);
    return commands.at(cfg.command)(cfg, os);
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace fibpart::cli
