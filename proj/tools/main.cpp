// Command-line front end: counting tables, truncated expansions,
// exact-vs-expansion comparisons, exhaustive oracle runs, and seeded Monte
// Carlo checks. Machine formats are CSV and JSON lines; exact values are
// emitted as lossless integer/fraction strings, decimals are renderings only.
//
// Exit codes: 0 success, 2 usage or domain error, 3 resource cap exceeded.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "connasym/asymptotics.hpp"
#include "connasym/count_table.hpp"
#include "connasym/errors.hpp"
#include "connasym/oracle.hpp"
#include "connasym/polynomial.hpp"
#include "connasym/rational.hpp"
#include "connasym/sequences.hpp"

using namespace connasym;
using nlohmann::ordered_json;

namespace {

constexpr const char* kSchemaVersion = "1";

// Desk-scale resource caps; beyond these the CLI exits with code 3.
constexpr unsigned kMaxTableOrder = 300;
constexpr unsigned kMaxPolyIndex = 16;
constexpr unsigned kMaxExpandN = 4096;
constexpr unsigned kMaxExpandR = 32;
constexpr unsigned kMaxCompareRows = 300;

void require_cap(bool ok, const std::string& what) {
  if (!ok) throw ResourceError(what);
}

enum class Format { kHuman, kCsv, kJson };

Format to_format(const std::string& s) {
  if (s == "human") return Format::kHuman;
  if (s == "csv") return Format::kCsv;
  return Format::kJson;
}

// Data goes to stdout unless --output redirects it; diagnostics stay on
// stderr either way.
struct Output {
  std::ofstream file;
  bool use_file = false;

  void open(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw UsageError("cannot open output file '" + path + "'");
    use_file = true;
  }
  std::ostream& os() { return use_file ? file : std::cout; }
};

ordered_json base_record(const std::string& command) {
  ordered_json rec;
  rec["schema_version"] = kSchemaVersion;
  rec["command"] = command;
  return rec;
}

std::string format_double(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

std::string pad_index(const std::string& s) {
  return std::string(4 - std::min<std::size_t>(4, s.size()), ' ') + s;
}

// ---------------------------------------------------------------------------
// counts

struct CountsArgs {
  std::string seq;
  unsigned max = 0;
  int m = -1;
  std::string format = "csv";
  std::string output;
};

int run_counts(const CountsArgs& a) {
  const bool needs_m = a.seq == "c_m" || a.seq == "i_m";
  if (needs_m && a.m < 0) throw UsageError("--m is required for sequence '" + a.seq + "'");
  if (!needs_m && a.m >= 0) throw UsageError("--m only applies to sequences c_m and i_m");

  Output out;
  out.open(a.output);
  const Format fmt = to_format(a.format);

  if (a.seq == "P") {
    require_cap(a.max >= 1 && a.max <= kMaxPolyIndex,
                "polynomial index cap is " + std::to_string(kMaxPolyIndex));
    const seq::PolynomialTable table = seq::rho_polynomials(a.max);
    if (fmt == Format::kCsv) out.os() << "k,polynomial\n";
    if (fmt == Format::kHuman) out.os() << "   k  P_k\n";
    for (unsigned k = 1; k <= a.max; ++k) {
      switch (fmt) {
        case Format::kCsv:
          out.os() << k << "," << to_string(table.at(k)) << "\n";
          break;
        case Format::kJson: {
          ordered_json rec = base_record("counts");
          rec["seq"] = "P";
          rec["k"] = k;
          rec["polynomial"] = to_string(table.at(k));
          out.os() << rec.dump() << "\n";
          break;
        }
        case Format::kHuman:
          out.os() << pad_index(std::to_string(k)) << "  "
                   << to_string(table.at(k), PolyStyle::kHuman) << "\n";
          break;
      }
    }
    return 0;
  }

  require_cap(a.max <= kMaxTableOrder, "table order cap is " + std::to_string(kMaxTableOrder));
  require_cap(a.m <= static_cast<int>(kMaxTableOrder),
              "component count cap is " + std::to_string(kMaxTableOrder));

  CountTable table;
  if (a.seq == "g") table = seq::graph_counts(a.max);
  else if (a.seq == "t") table = seq::tournament_counts(a.max);
  else if (a.seq == "c") table = seq::connected_counts(a.max);
  else if (a.seq == "i") table = seq::irreducible_counts(a.max);
  else if (a.seq == "c_m")
    table = seq::components_counts(seq::ComponentKind::kGraphConnected,
                                   static_cast<unsigned>(a.m), a.max);
  else
    table = seq::components_counts(seq::ComponentKind::kTournamentIrreducible,
                                   static_cast<unsigned>(a.m), a.max);

  // c_0 = i_0 = 0 are index conventions, not data; those tables print from 1.
  const unsigned start = (a.seq == "c" || a.seq == "i") ? 1 : 0;
  if (fmt == Format::kCsv) out.os() << "n,count\n";
  if (fmt == Format::kHuman) out.os() << "   n  count\n";
  for (unsigned n = start; n < table.counts.size(); ++n) {
    switch (fmt) {
      case Format::kCsv:
        out.os() << n << "," << table.at(n).get_str() << "\n";
        break;
      case Format::kJson: {
        ordered_json rec = base_record("counts");
        rec["seq"] = a.seq;
        if (needs_m) rec["m"] = a.m;
        rec["n"] = n;
        rec["count"] = table.at(n).get_str();
        out.os() << rec.dump() << "\n";
        break;
      }
      case Format::kHuman:
        out.os() << pad_index(std::to_string(n)) << "  " << table.at(n).get_str() << "\n";
        break;
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// expand

struct ExpandArgs {
  std::string kind;
  unsigned n = 0;
  unsigned r = 0;
  std::string p;
  std::string format = "csv";
  std::string output;
  int digits = 12;
};

int run_expand(const ExpandArgs& a) {
  require_cap(a.n <= kMaxExpandN, "expansion size cap is " + std::to_string(kMaxExpandN));
  require_cap(a.r <= kMaxExpandR, "expansion order cap is " + std::to_string(kMaxExpandR));

  Rational value;
  if (a.kind == "graph-p") {
    if (a.p.empty()) throw UsageError("--p is required for kind graph-p");
    value = asym::expansion_prob_connected_p(a.n, a.r, Rational::parse(a.p));
  } else {
    if (!a.p.empty()) throw UsageError("--p only applies to kind graph-p");
    value = a.kind == "graph" ? asym::expansion_prob_connected(a.n, a.r)
                              : asym::expansion_prob_irreducible(a.n, a.r);
  }

  Output out;
  out.open(a.output);
  switch (to_format(a.format)) {
    case Format::kCsv:
      out.os() << "kind,n,r,p,exact,decimal\n"
               << a.kind << "," << a.n << "," << a.r << "," << a.p << "," << value.to_string()
               << "," << to_decimal_string(value, a.digits) << "\n";
      break;
    case Format::kJson: {
      ordered_json rec = base_record("expand");
      rec["kind"] = a.kind;
      rec["n"] = a.n;
      rec["r"] = a.r;
      if (a.p.empty())
        rec["p"] = nullptr;
      else
        rec["p"] = a.p;
      rec["exact"] = value.to_string();
      rec["decimal"] = to_decimal_string(value, a.digits);
      out.os() << rec.dump() << "\n";
      break;
    }
    case Format::kHuman:
      out.os() << "kind     " << a.kind << "\n"
               << "n        " << a.n << "\n"
               << "r        " << a.r << "\n";
      if (!a.p.empty()) out.os() << "p        " << a.p << "\n";
      out.os() << "exact    " << value.to_string() << "\n"
               << "decimal  " << to_decimal_string(value, a.digits) << "\n";
      break;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// compare

struct CompareArgs {
  std::string kind;
  unsigned r = 0;
  std::string range;
  std::string format = "csv";
  std::string output;
  int digits = 12;
};

std::pair<unsigned, unsigned> parse_range(const std::string& text) {
  const auto pos = text.find("..");
  if (pos == std::string::npos)
    throw UsageError("range must have the form LO..HI, got '" + text + "'");
  try {
    const unsigned lo = static_cast<unsigned>(std::stoul(text.substr(0, pos)));
    const unsigned hi = static_cast<unsigned>(std::stoul(text.substr(pos + 2)));
    return {lo, hi};
  } catch (const std::exception&) {
    throw UsageError("range must have the form LO..HI, got '" + text + "'");
  }
}

int run_compare(const CompareArgs& a) {
  const auto [lo, hi] = parse_range(a.range);
  require_cap(hi <= kMaxTableOrder, "range end cap is " + std::to_string(kMaxTableOrder));
  require_cap(hi < lo || hi - lo + 1 <= kMaxCompareRows,
              "range too large: at most " + std::to_string(kMaxCompareRows) + " rows");
  require_cap(a.r <= kMaxExpandR, "expansion order cap is " + std::to_string(kMaxExpandR));

  const auto kind = a.kind == "graph" ? asym::ProbKind::kGraph : asym::ProbKind::kTournament;
  const auto rows = asym::error_report(kind, a.r, lo, hi);

  Output out;
  out.open(a.output);
  const Format fmt = to_format(a.format);
  if (fmt == Format::kCsv)
    out.os() << "n,exact,approx,abs_error,scaled_error,exact_dec,approx_dec,abs_error_dec,"
                "scaled_error_dec\n";
  if (fmt == Format::kHuman)
    out.os() << "   n  exact             approx            abs_error         scaled_error\n";
  for (const auto& row : rows) {
    const std::string exact_dec = to_decimal_string(row.exact, a.digits);
    const std::string approx_dec = to_decimal_string(row.approx, a.digits);
    const std::string abs_dec = to_decimal_string(row.abs_error, a.digits);
    const std::string scaled_dec = to_decimal_string(row.scaled_error, a.digits);
    switch (fmt) {
      case Format::kCsv:
        out.os() << row.n << "," << row.exact.to_string() << "," << row.approx.to_string() << ","
                 << row.abs_error.to_string() << "," << row.scaled_error.to_string() << ","
                 << exact_dec << "," << approx_dec << "," << abs_dec << "," << scaled_dec
                 << "\n";
        break;
      case Format::kJson: {
        ordered_json rec = base_record("compare");
        rec["kind"] = a.kind;
        rec["r"] = row.r;
        rec["n"] = row.n;
        rec["exact"] = row.exact.to_string();
        rec["approx"] = row.approx.to_string();
        rec["abs_error"] = row.abs_error.to_string();
        rec["scaled_error"] = row.scaled_error.to_string();
        rec["exact_dec"] = exact_dec;
        rec["approx_dec"] = approx_dec;
        rec["abs_error_dec"] = abs_dec;
        rec["scaled_error_dec"] = scaled_dec;
        out.os() << rec.dump() << "\n";
        break;
      }
      case Format::kHuman: {
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%4u  %-16s  %-16s  %-16s  %-16s\n", row.n,
                      exact_dec.c_str(), approx_dec.c_str(), abs_dec.c_str(),
                      scaled_dec.c_str());
        out.os() << buf;
        break;
      }
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// oracle

struct OracleArgs {
  std::string kind;
  int n = 0;
  bool allow_n7 = false;
  std::string format = "csv";
  std::string output;
};

int run_oracle(const OracleArgs& a) {
  const bool graph = a.kind == "graph";
  const auto kind = graph ? oracle::InstanceKind::kGraph : oracle::InstanceKind::kTournament;
  const std::uint64_t count = graph ? oracle::count_connected_exhaustive(a.n, a.allow_n7)
                                    : oracle::count_irreducible_exhaustive(a.n, a.allow_n7);
  const auto histogram = oracle::component_histogram_exhaustive(kind, a.n, a.allow_n7);
  const char* count_name = graph ? "connected" : "irreducible";
  std::uint64_t total = 0;
  for (const auto& [m, c] : histogram) total += c;

  Output out;
  out.open(a.output);
  switch (to_format(a.format)) {
    case Format::kCsv:
      out.os() << "m,count\n";
      for (const auto& [m, c] : histogram) out.os() << m << "," << c << "\n";
      break;
    case Format::kJson: {
      ordered_json rec = base_record("oracle");
      rec["kind"] = a.kind;
      rec["n"] = a.n;
      rec["count_name"] = count_name;
      rec["count"] = std::to_string(count);
      ordered_json hist = ordered_json::object();
      for (const auto& [m, c] : histogram) hist[std::to_string(m)] = std::to_string(c);
      rec["histogram"] = hist;
      rec["total"] = std::to_string(total);
      out.os() << rec.dump() << "\n";
      break;
    }
    case Format::kHuman:
      out.os() << count_name << " = " << count << "\n\n   m  count\n";
      for (const auto& [m, c] : histogram)
        out.os() << pad_index(std::to_string(m)) << "  " << c << "\n";
      out.os() << "\ntotal = " << total << "\n";
      break;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// mc

struct McArgs {
  std::string kind;
  int n = 0;
  std::string p;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::string format = "csv";
  std::string output;
  int digits = 12;
};

int run_mc(const McArgs& a) {
  const auto kind =
      a.kind == "graph" ? oracle::InstanceKind::kGraph : oracle::InstanceKind::kTournament;
  const auto result = oracle::mc_estimate(kind, a.n, Rational::parse(a.p), a.trials, a.seed);
  const std::string estimate_dec = to_decimal_string(result.estimate, a.digits);
  const std::string stderr_dec = format_double(result.std_error, a.digits);

  Output out;
  out.open(a.output);
  switch (to_format(a.format)) {
    case Format::kCsv:
      out.os() << "kind,n,p,trials,seed,successes,estimate,estimate_dec,std_error\n"
               << a.kind << "," << a.n << "," << a.p << "," << a.trials << "," << a.seed << ","
               << result.successes << "," << result.estimate.to_string() << "," << estimate_dec
               << "," << stderr_dec << "\n";
      break;
    case Format::kJson: {
      ordered_json rec = base_record("mc");
      rec["kind"] = a.kind;
      rec["n"] = a.n;
      rec["p"] = a.p;
      rec["trials"] = a.trials;
      rec["seed"] = a.seed;
      rec["successes"] = result.successes;
      rec["estimate"] = result.estimate.to_string();
      rec["estimate_dec"] = estimate_dec;
      rec["std_error"] = stderr_dec;
      out.os() << rec.dump() << "\n";
      break;
    }
    case Format::kHuman:
      out.os() << "kind       " << a.kind << "\n"
               << "n          " << a.n << "\n"
               << "p          " << a.p << "\n"
               << "trials     " << a.trials << "\n"
               << "seed       " << a.seed << "\n"
               << "successes  " << result.successes << "\n"
               << "estimate   " << result.estimate.to_string() << " = " << estimate_dec << "\n"
               << "std_error  " << stderr_dec << "\n";
      break;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact counting sequences, asymptotic connectivity/irreducibility expansions, "
      "and enumeration/Monte-Carlo cross-checks for labeled graphs and tournaments"};
  app.require_subcommand(1);
  const auto format_check = CLI::IsMember({"human", "csv", "json"});
  const auto digits_check = CLI::Range(1, 50);

  CountsArgs counts;
  auto* counts_cmd = app.add_subcommand("counts", "Print a counting-sequence table");
  counts_cmd->add_option("--seq", counts.seq, "Sequence name")
      ->required()
      ->check(CLI::IsMember({"g", "t", "c", "i", "c_m", "i_m", "P"}));
  counts_cmd->add_option("--max", counts.max, "Largest index to print")->required();
  counts_cmd->add_option("--m", counts.m, "Component count for c_m / i_m");
  counts_cmd->add_option("--format", counts.format, "human, csv, or json")->check(format_check);
  counts_cmd->add_option("--output", counts.output, "Write data to a file instead of stdout");

  ExpandArgs expand;
  auto* expand_cmd = app.add_subcommand("expand", "Evaluate a truncated expansion exactly");
  expand_cmd->add_option("--kind", expand.kind, "graph, tournament, or graph-p")
      ->required()
      ->check(CLI::IsMember({"graph", "tournament", "graph-p"}));
  expand_cmd->add_option("--n", expand.n, "Instance size")->required();
  expand_cmd->add_option("--r", expand.r, "Truncation order")->required();
  expand_cmd->add_option("--p", expand.p, "Edge probability as a fraction a/b (graph-p only)");
  expand_cmd->add_option("--format", expand.format, "human, csv, or json")->check(format_check);
  expand_cmd->add_option("--digits", expand.digits, "Significant digits for decimals")
      ->check(digits_check);
  expand_cmd->add_option("--output", expand.output, "Write data to a file instead of stdout");

  CompareArgs compare;
  auto* compare_cmd =
      app.add_subcommand("compare", "Exact probability vs truncated expansion over a range");
  compare_cmd->add_option("--kind", compare.kind, "graph or tournament")
      ->required()
      ->check(CLI::IsMember({"graph", "tournament"}));
  compare_cmd->add_option("--r", compare.r, "Truncation order")->required();
  compare_cmd->add_option("--n", compare.range, "Size range LO..HI")->required();
  compare_cmd->add_option("--format", compare.format, "human, csv, or json")->check(format_check);
  compare_cmd->add_option("--digits", compare.digits, "Significant digits for decimals")
      ->check(digits_check);
  compare_cmd->add_option("--output", compare.output, "Write data to a file instead of stdout");

  OracleArgs oracle_args;
  auto* oracle_cmd =
      app.add_subcommand("oracle", "Exhaustive enumeration counts and component histogram");
  oracle_cmd->add_option("--kind", oracle_args.kind, "graph or tournament")
      ->required()
      ->check(CLI::IsMember({"graph", "tournament"}));
  oracle_cmd->add_option("--n", oracle_args.n, "Instance size")->required();
  oracle_cmd->add_flag("--allow-n7", oracle_args.allow_n7, "Permit the n = 7 run (~2.1M masks)");
  oracle_cmd->add_option("--format", oracle_args.format, "human, csv, or json")
      ->check(format_check);
  oracle_cmd->add_option("--output", oracle_args.output,
                         "Write data to a file instead of stdout");

  McArgs mc;
  auto* mc_cmd = app.add_subcommand("mc", "Seeded Monte Carlo estimate");
  mc_cmd->add_option("--kind", mc.kind, "graph or tournament")
      ->required()
      ->check(CLI::IsMember({"graph", "tournament"}));
  mc_cmd->add_option("--n", mc.n, "Instance size")->required();
  mc_cmd->add_option("--p", mc.p, "Edge probability as a fraction a/b")->required();
  mc_cmd->add_option("--trials", mc.trials, "Number of trials")->required();
  mc_cmd->add_option("--seed", mc.seed, "64-bit generator seed")->required();
  mc_cmd->add_option("--format", mc.format, "human, csv, or json")->check(format_check);
  mc_cmd->add_option("--digits", mc.digits, "Significant digits for decimals")
      ->check(digits_check);
  mc_cmd->add_option("--output", mc.output, "Write data to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (counts_cmd->parsed()) return run_counts(counts);
    if (expand_cmd->parsed()) return run_expand(expand);
    if (compare_cmd->parsed()) return run_compare(compare);
    if (oracle_cmd->parsed()) return run_oracle(oracle_args);
    if (mc_cmd->parsed()) return run_mc(mc);
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
