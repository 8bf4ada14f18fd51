// Command-line front end: enumeration, statistics, the bijection, series and
// the verification suites.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "schroeder/bijection.hpp"
#include "schroeder/errors.hpp"
#include "schroeder/formulas.hpp"
#include "schroeder/path.hpp"
#include "schroeder/permutation.hpp"
#include "schroeder/series.hpp"
#include "schroeder/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace schroeder;

constexpr const char* kVersion = "0.1.0";
constexpr int kHardLimit = 14;

enum ExitCode { kOk = 0, kMismatch = 1, kUsage = 2 };

struct Options {
  std::string format;
  int limit = kDefaultEnumerationLimit;
  int jobs = 1;
  int offset = 0;
  std::string avoid;
  bool schroeder_ambient = false;
  int n = 0;
  int n_max = 7;
  int k = 3;
  int r = 1;
  int order = 10;
  std::optional<int> max_height;
  bool paths = false;
  std::string perm;
  std::string path;
  std::string to_perm;
  std::string to_path;
  bool show_word = false;
  std::string gf;
  std::string suite = "all";
  std::optional<int> levels;
  std::string spec = "length";
};

// One row of output: an index and a decimal or textual value.
struct Row {
  long n;
  std::string value;
};

void emit(const std::string& format, const json& query, const std::vector<Row>& rows, json meta) {
  if (format == "json") {
    json values = json::array();
    for (const auto& r : rows) values.push_back({{"n", r.n}, {"value", r.value}});
    meta["version"] = kVersion;
    std::cout << json{{"query", query}, {"values", values}, {"meta", meta}}.dump(2) << "\n";
  } else if (format == "bfile") {
    for (const auto& r : rows) std::cout << r.n << ' ' << r.value << "\n";
  } else if (format == "csv") {
    for (std::size_t i = 0; i < rows.size(); ++i) std::cout << (i ? "," : "") << rows[i].value;
    std::cout << "\n";
  } else {
    for (const auto& r : rows) std::cout << r.value << "\n";
  }
}

std::string format_or(const Options& o, const char* fallback) {
  return o.format.empty() ? fallback : o.format;
}

PatternSet avoided(const Options& o) { return o.avoid.empty() ? PatternSet{} : PatternSet::parse(o.avoid); }
Ambient ambient(const Options& o) { return o.schroeder_ambient ? Ambient::Schroeder : Ambient::None; }

json base_query(const std::string& command, const Options& o) {
  json q{{"command", command}};
  if (!o.avoid.empty()) q["avoid"] = o.avoid;
  if (o.schroeder_ambient) q["schroeder"] = true;
  return q;
}

int run_enumerate(const Options& o) {
  std::vector<Row> rows;
  json q = base_query("enumerate", o);
  q["n"] = o.n;
  if (o.paths) {
    q["paths"] = true;
    if (o.max_height) q["max_height"] = *o.max_height;
    long i = 0;
    for_each_path(o.n, o.max_height, [&](const SchroderPath& p) { rows.push_back({i++, p.str()}); }, o.limit);
  } else {
    long i = 0;
    for_each_in_class(o.n, avoided(o), ambient(o), [&](const Permutation& p) { rows.push_back({i++, p.str()}); },
                      o.limit);
  }
  emit(format_or(o, "lines"), q, rows, {{"count", rows.size()}, {"limit", o.limit}});
  return kOk;
}

int run_count(const Options& o) {
  std::vector<Row> rows;
  const auto patterns = avoided(o);
  for (int n = o.offset; n <= o.n_max; ++n)
    rows.push_back({n, std::to_string(count_class(n, patterns, ambient(o), o.limit))});
  json q = base_query("count", o);
  q["n_max"] = o.n_max;
  q["offset"] = o.offset;
  emit(format_or(o, "bfile"), q, rows, {{"limit", o.limit}});
  return kOk;
}

int run_stats(const Options& o) {
  if (o.perm.empty() == o.path.empty()) throw InvalidInput("stats: give exactly one of --perm and --path");
  std::vector<Row> rows;
  json q{{"command", "stats"}};
  if (!o.perm.empty()) {
    const auto pi = Permutation::parse(o.perm);
    q["perm"] = pi.str();
    const int cutoff = o.levels.value_or(pi.size());
    const auto v = stat_vector(pi, cutoff);
    for (int k = 1; k <= cutoff; ++k) rows.push_back({k, v.tau(k).get_str()});
  } else {
    const auto path = SchroderPath::parse(o.path);
    q["path"] = path.str();
    const int cutoff = o.levels.value_or(path.size() + 1);
    const auto v = tau_vector(path, cutoff);
    for (int k = 1; k <= cutoff; ++k) rows.push_back({k, v[static_cast<std::size_t>(k - 1)].get_str()});
  }
  emit(format_or(o, "csv"), q, rows, json::object());
  return kOk;
}

int run_bijection(const Options& o) {
  if (o.to_perm.empty() == o.to_path.empty())
    throw InvalidInput("bijection: give exactly one of --to-perm and --to-path");
  json q{{"command", "bijection"}};
  std::vector<Row> rows;
  json meta = json::object();
  if (!o.to_perm.empty()) {
    const auto path = SchroderPath::parse(o.to_perm);
    q["to_perm"] = path.str();
    rows.push_back({0, phi_direct(path).str()});
    if (o.show_word) {
      const auto word = triangle_word(path).str();
      rows.push_back({1, word});
      meta["word"] = word;
    }
  } else {
    const auto pi = Permutation::parse(o.to_path);
    q["to_path"] = pi.str();
    const auto path = phi_inverse(pi);
    rows.push_back({0, path.str()});
    if (o.show_word) {
      const auto word = triangle_word(path).str();
      rows.push_back({1, word});
      meta["word"] = word;
    }
  }
  emit(format_or(o, "lines"), q, rows, meta);
  return kOk;
}

RationalGF named_gf(const Options& o) {
  const std::string& g = o.gf;
  if (g == "avoid-12k") return gf_avoid_12k(o.k);
  if (g == "avoid-213k") return gf_avoid_213k(o.k);
  if (g == "avoid-2314k") return gf_avoid_2314k(o.k);
  if (g == "avoid-3214k") return gf_avoid_3214k(o.k);
  if (g == "once-12k") return gf_once_12k(o.k);
  if (g == "once-213k") return gf_once_213k(o.k);
  if (g == "exactly-r-12k") return gf_exactly_r_12k(o.k, o.r);
  throw InvalidInput("--gf: unknown generating function '" + g + "'");
}

int run_series(const Options& o) {
  if (o.order < 0) throw InvalidInput("--order must be nonnegative");
  std::vector<BigInt> coefficients;
  json q{{"command", "series"}, {"gf", o.gf}, {"order", o.order}};
  json meta = json::object();
  if (o.gf == "schroeder") {
    coefficients.emplace_back(1);
    for (int n = 1; n <= o.order; ++n) coefficients.push_back(schroder_number(n - 1));
  } else {
    q["k"] = o.k;
    if (o.gf == "exactly-r-12k") q["r"] = o.r;
    const auto f = named_gf(o);
    coefficients = f.expand_integers(o.order);
    meta["numerator"] = f.num().str();
    meta["denominator"] = f.den().str();
  }
  std::vector<Row> rows;
  for (int n = o.offset; n <= o.order; ++n) rows.push_back({n, coefficients[static_cast<std::size_t>(n)].get_str()});
  emit(format_or(o, "csv"), q, rows, meta);
  return kOk;
}

int run_cf(const Options& o) {
  if (o.order < 0) throw InvalidInput("--order must be nonnegative");
  json q{{"command", "cf"}, {"order", o.order}};
  json meta = json::object();
  std::vector<Row> rows;
  if (o.levels) {
    if (*o.levels < 1) throw InvalidInput("--levels must be positive");
    q["levels"] = *o.levels;
    const std::vector<RationalGF> ms(static_cast<std::size_t>(*o.levels), RationalGF::x());
    const auto f = finite_schroder_cf(ms);
    meta["numerator"] = f.num().str();
    meta["denominator"] = f.den().str();
    const auto c = f.expand_integers(o.order);
    for (int n = o.offset; n <= o.order; ++n) rows.push_back({n, c[static_cast<std::size_t>(n)].get_str()});
    emit(format_or(o, "csv"), q, rows, meta);
    return kOk;
  }
  q["spec"] = o.spec;
  TruncSeries s(0, o.order);
  std::vector<std::string> names;
  if (o.spec == "length") {
    s = eval_schroder_cf([](int) { return Monomial::var(0); }, o.order, o.order, 0);
    names = {"x"};
  } else if (o.spec == "subsequences") {
    s = increasing_subsequence_fraction(o.order, o.order);
    names = {"x", "q"};
  } else if (o.spec == "length-noninversions") {
    s = length_plus_noninversions_fraction(o.order, o.order);
    names = {"q"};
  } else {
    throw InvalidInput("--spec: expected length, subsequences or length-noninversions");
  }
  // Collect by grading degree; each row is the polynomial in the other variables.
  std::vector<TruncSeries> slices;
  for (int n = 0; n <= o.order; ++n) slices.emplace_back(0, o.order);
  for (const auto& [m, c] : s.terms()) {
    const auto d = static_cast<std::size_t>(m.exponent(0));
    slices[d].add_term(m * Monomial::var(0, -m.exponent(0)), c);
  }
  for (int n = o.offset; n <= o.order; ++n) rows.push_back({n, slices[static_cast<std::size_t>(n)].str(names)});
  emit(format_or(o, "lines"), q, rows, meta);
  return kOk;
}

int run_verify(const Options& o) {
  const auto results = run_suite(o.suite, o.n_max, o.jobs);
  bool all_passed = true;
  for (const auto& r : results) all_passed = all_passed && r.passed;
  const std::string format = format_or(o, "json");
  if (format == "json") {
    json items = json::array();
    for (const auto& r : results) {
      json item{{"identity", r.name}, {"passed", r.passed}};
      if (!r.passed) item["first_mismatch"] = r.first_mismatch;
      items.push_back(item);
    }
    json suites = json::array();
    for (const auto& s : suite_names()) suites.push_back(s);
    json report{{"query", {{"command", "verify"}, {"suite", o.suite}, {"n_max", o.n_max}}},
                {"passed", all_passed},
                {"results", items},
                {"meta", {{"version", kVersion}, {"suites", suites}}}};
    std::cout << report.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
      if (!r.passed) std::cout << "  (" << r.first_mismatch << ")";
      std::cout << "\n";
    }
  }
  return all_passed ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schroeder permutations, paths and their generating functions"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "bfile", "lines"}));
  app.add_option("--limit", o.limit, "Largest n that may be enumerated")
      ->check(CLI::Range(0, kHardLimit));
  app.add_option("--offset", o.offset, "First n to print")->check(CLI::NonNegativeNumber);

  auto* enumerate = app.add_subcommand("enumerate", "List S_n(R) or Schroeder paths of size n");
  enumerate->add_option("--n", o.n, "Size")->required()->check(CLI::NonNegativeNumber);
  enumerate->add_option("--avoid", o.avoid, "Comma-separated patterns");
  enumerate->add_flag("--schroeder", o.schroeder_ambient, "Also avoid 1243 and 2143");
  enumerate->add_flag("--paths", o.paths, "List Schroeder paths instead");
  enumerate->add_option("--max-height", o.max_height, "Height bound for --paths");

  auto* count = app.add_subcommand("count", "Count S_n(R) for n up to --n-max");
  count->add_option("--avoid", o.avoid, "Comma-separated patterns");
  count->add_option("--n-max", o.n_max, "Largest n")->required()->check(CLI::NonNegativeNumber);
  count->add_flag("--schroeder", o.schroeder_ambient, "Also avoid 1243 and 2143");

  auto* stats = app.add_subcommand("stats", "tau_1, tau_2, ... of a permutation or path");
  stats->add_option("--perm", o.perm, "Permutation");
  stats->add_option("--path", o.path, "Schroeder path over N, E, D");
  stats->add_option("--k", o.levels, "Number of statistics");

  auto* bijection = app.add_subcommand("bijection", "Apply phi or its inverse");
  bijection->add_option("--to-perm", o.to_perm, "Path to map to a permutation");
  bijection->add_option("--to-path", o.to_path, "Permutation to map back to a path");
  bijection->add_flag("--show-word", o.show_word, "Also print the transposition word");

  auto* series = app.add_subcommand("series", "Coefficients of a closed-form generating function");
  series->add_option("--gf", o.gf, "avoid-12k, avoid-213k, avoid-2314k, avoid-3214k, once-12k, once-213k, "
                                   "exactly-r-12k or schroeder")
      ->required();
  series->add_option("--k", o.k, "Pattern length");
  series->add_option("--r", o.r, "Number of occurrences for exactly-r-12k");
  series->add_option("--order", o.order, "Last coefficient");

  auto* cf = app.add_subcommand("cf", "Expand a Schroeder continued fraction");
  cf->add_option("--order", o.order, "Truncation order");
  cf->add_option("--levels", o.levels, "Finite fraction with this many levels of x");
  cf->add_option("--spec", o.spec, "length, subsequences or length-noninversions");

  auto* verify = app.add_subcommand("verify", "Run identity suites against brute-force oracles");
  verify->add_option("--suite", o.suite, "Suite name or all");
  verify->add_option("--n-max", o.n_max, "Largest enumerated size")->check(CLI::Range(0, kHardLimit));
  verify->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (enumerate->parsed()) return run_enumerate(o);
    if (count->parsed()) return run_count(o);
    if (stats->parsed()) return run_stats(o);
    if (bijection->parsed()) return run_bijection(o);
    if (series->parsed()) return run_series(o);
    if (cf->parsed()) return run_cf(o);
    if (verify->parsed()) return run_verify(o);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceLimit& e) {
    std::cerr << "error: " << e.what() << " (raise --limit, at most " << kHardLimit << ")\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
