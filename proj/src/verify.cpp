#include "schroeder/verify.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <set>
#include <sstream>
#include <thread>

#include "schroeder/bcs.hpp"
#include "schroeder/bijection.hpp"
#include "schroeder/errors.hpp"
#include "schroeder/formulas.hpp"
#include "schroeder/path.hpp"
#include "schroeder/permutation.hpp"
#include "schroeder/transfer.hpp"

namespace schroeder {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"bijection", "gf-avoid", "gf-once", "e2",
                                              "cf",        "transfer", "bcs"};
  return names;
}

std::optional<std::string> first_mismatch(const std::vector<BigInt>& formula,
                                          const std::vector<BigInt>& oracle) {
  const std::size_t n = std::max(formula.size(), oracle.size());
  for (std::size_t i = 0; i < n; ++i) {
    const BigInt f = i < formula.size() ? formula[i] : BigInt(0);
    const BigInt o = i < oracle.size() ? oracle[i] : BigInt(0);
    if (f != o)
      return "n = " + std::to_string(i) + ": formula " + f.get_str() + ", oracle " + o.get_str();
  }
  return std::nullopt;
}

namespace {

using Result = std::optional<std::string>;

Result same_gf(const RationalGF& got, const RationalGF& want) {
  if (got == want) return std::nullopt;
  return "got " + got.str() + ", expected " + want.str();
}

Result same_series(const TruncSeries& got, const TruncSeries& want) {
  for (const auto& [m, c] : want.terms())
    if (got.coefficient(m) != c)
      return m.str() + ": got " + got.coefficient(m).get_str() + ", expected " + c.get_str();
  for (const auto& [m, c] : got.terms())
    if (want.coefficient(m) != c) return m.str() + ": got " + c.get_str() + ", expected 0";
  return std::nullopt;
}

RationalGF polynomial_gf(const std::vector<BigInt>& coefficients) {
  return RationalGF(IntPoly(coefficients));
}

std::vector<BigInt> truncate(std::vector<BigInt> v, std::size_t size) {
  v.resize(size, BigInt(0));
  return v;
}

// ---- bijection ----

struct Golden {
  const char* path;
  const char* perm;
};
constexpr Golden kGolden[] = {{"NDNNEEENNDENEE", "836791425"},
                              {"DNEDDNNENDEE", "978624135"},
                              {"NNENDNNEDEEDE", "683425719"}};

void add_bijection(std::vector<Check>& out, int n_max) {
  out.push_back({"golden vectors", []() -> Result {
                   for (const auto& g : kGolden) {
                     const auto path = SchroderPath::parse(g.path);
                     const auto want = Permutation::parse(g.perm);
                     if (phi_direct(path) != want) return std::string("direct ") + g.path + " -> " + phi_direct(path).str();
                     if (phi_recursive(path) != want)
                       return std::string("recursive ") + g.path + " -> " + phi_recursive(path).str();
                     if (phi_inverse(want) != path) return std::string("inverse ") + g.perm + " -> " + phi_inverse(want).str();
                   }
                   return std::nullopt;
                 }});
  for (int n = 0; n <= n_max; ++n) {
    out.push_back({"paths of size " + std::to_string(n), [n, n_max]() -> Result {
                     Result bad;
                     for_each_path(n, std::nullopt, [&](const SchroderPath& path) {
                       if (bad) return;
                       const Permutation pi = phi_recursive(path);
                       if (phi_direct(path) != pi) bad = "direct and recursive differ at " + path.str();
                       else if (phi_inverse(pi) != path) bad = "inverse fails at " + path.str();
                       else
                         for (int k = 1; k <= n + 1 && !bad; ++k)
                           if (tau(path, k) != tau(pi, k))
                             bad = "tau_" + std::to_string(k) + " differs at " + path.str();
                     }, n_max);
                     return bad;
                   }});
  }
  out.push_back({"class sizes", [n_max]() -> Result {
                   for (int n = 1; n <= n_max + 1; ++n) {
                     const BigInt got(static_cast<unsigned long>(count_class(n, {}, Ambient::Schroeder, n_max + 1)));
                     if (got != schroder_number(n - 1))
                       return "n = " + std::to_string(n) + ": " + got.get_str() + " permutations";
                   }
                   return std::nullopt;
                 }});
  out.push_back({"omega embedding gives Catalan paths", [n_max]() -> Result {
                   Result bad;
                   for (int n = 0; n <= n_max && !bad; ++n) {
                     for_each_in_class(n, PatternSet{Permutation{1, 3, 2}}, Ambient::None, [&](const Permutation& pi) {
                       if (bad) return;
                       const auto path = krattenthaler_map(pi);
                       if (std::find(path.steps().begin(), path.steps().end(), Step::D) != path.steps().end())
                         bad = pi.str() + " maps to a path with a diagonal step";
                       else if (phi_direct(path) != omega(pi))
                         bad = pi.str() + " is not recovered";
                     }, n_max);
                   }
                   return bad;
                 }});
}

// ---- gf-avoid ----

void add_gf_avoid(std::vector<Check>& out, int n_max) {
  for (int k = 2; k <= 6; ++k) {
    out.push_back({"avoid 12..." + std::to_string(k), [k, n_max]() {
                     return first_mismatch(gf_avoid_12k(k).expand_integers(n_max),
                                           brute_avoid_counts(PatternSet{pattern_12k(k)}, n_max));
                   }});
    out.push_back({"avoid 213..." + std::to_string(k), [k, n_max]() {
                     return first_mismatch(gf_avoid_213k(k).expand_integers(n_max),
                                           brute_avoid_counts(PatternSet{pattern_213k(k)}, n_max));
                   }});
  }
  out.push_back({"append transform replays the 12...k family", []() -> Result {
                   for (int k = 2; k <= 8; ++k)
                     if (auto bad = same_gf(avoid_append_transform(gf_avoid_12k(k - 1)), gf_avoid_12k(k)))
                       return "k = " + std::to_string(k) + ": " + *bad;
                   return std::nullopt;
                 }});
  out.push_back({"append transform from 231", [n_max]() {
                   return first_mismatch(avoid_append_transform(gf_avoid_2314k(3)).expand_integers(n_max),
                                         brute_avoid_counts(PatternSet{pattern_2314k(4)}, n_max));
                 }});
  for (int k = 3; k <= 4; ++k) {
    out.push_back({"avoid 2314..." + std::to_string(k), [k, n_max]() {
                     return first_mismatch(gf_avoid_2314k(k).expand_integers(n_max),
                                           brute_avoid_counts(PatternSet{pattern_2314k(k)}, n_max));
                   }});
    out.push_back({"avoid 3214..." + std::to_string(k), [k, n_max]() {
                     return first_mismatch(gf_avoid_3214k(k).expand_integers(n_max),
                                           brute_avoid_counts(PatternSet{pattern_3214k(k)}, n_max));
                   }});
  }
  out.push_back({"count 231", [n_max]() -> Result {
                   const auto oracle = brute_avoid_counts(PatternSet{Permutation{2, 3, 1}}, n_max);
                   for (int n = 2; n <= n_max; ++n)
                     if (count_231(n) != oracle[static_cast<std::size_t>(n)])
                       return "n = " + std::to_string(n) + ": formula " + count_231(n).get_str() + ", oracle " +
                              oracle[static_cast<std::size_t>(n)].get_str();
                   return std::nullopt;
                 }});
  out.push_back({"count 321", [n_max]() -> Result {
                   const auto oracle = brute_avoid_counts(PatternSet{Permutation{3, 2, 1}}, n_max);
                   for (int n = 1; n <= n_max; ++n)
                     if (count_321(n) != oracle[static_cast<std::size_t>(n)])
                       return "n = " + std::to_string(n) + ": formula " + count_321(n).get_str() + ", oracle " +
                              oracle[static_cast<std::size_t>(n)].get_str();
                   return std::nullopt;
                 }});
  out.push_back({"321 products", [n_max]() -> Result {
                   const PatternSet avoid321{Permutation{3, 2, 1}};
                   for (int total = 3; total <= n_max; ++total) {
                     for (int i = 1; i <= total - 2; ++i) {
                       for (const auto& a : enumerate_class(i, avoid321, Ambient::Schroeder, n_max)) {
                         for (const auto& b : enumerate_class(total - i, avoid321, Ambient::Schroeder, n_max)) {
                           const bool avoids = !contains(star(a, b), Permutation{3, 2, 1});
                           if (avoids != star_avoids_321_conditions(a, b))
                             return a.str() + " * " + b.str() + ": conditions disagree";
                         }
                       }
                     }
                   }
                   return std::nullopt;
                 }});
}

// ---- gf-once ----

void add_gf_once(std::vector<Check>& out, int n_max) {
  for (int k = 2; k <= 4; ++k)
    out.push_back({"exactly one 12..." + std::to_string(k), [k, n_max]() {
                     return first_mismatch(gf_once_12k(k).expand_integers(n_max), brute_G(pattern_12k(k), n_max));
                   }});
  for (int k = 3; k <= 4; ++k)
    out.push_back({"exactly one 213..." + std::to_string(k), [k, n_max]() {
                     return first_mismatch(gf_once_213k(k).expand_integers(n_max), brute_G(pattern_213k(k), n_max));
                   }});
  for (const char* t : {"1", "12", "21", "213"}) {
    const auto tau = Permutation::parse(t);
    out.push_back({std::string("contain-once transform for ") + t, [tau, n_max]() {
                     const auto j = polynomial_gf(brute_J(tau, n_max));
                     const auto h = polynomial_gf(brute_H(tau, n_max));
                     return first_mismatch(contain_once_transform(j, h).expand_integers(n_max),
                                           brute_G(append_max(tau), n_max));
                   }});
  }
  out.push_back({"contain-once transform replays both families", []() -> Result {
                   RationalGF g = contain_once_transform(RationalGF::x(), RationalGF(1));
                   for (int k = 2; k <= 6; ++k) {
                     if (auto bad = same_gf(g, gf_once_12k(k))) return "12..." + std::to_string(k) + ": " + *bad;
                     g = contain_once_transform(g, gf_avoid_12k(k));
                   }
                   const RationalGF j21(IntPoly{BigInt(0), BigInt(0), BigInt(1), BigInt(1)});
                   g = contain_once_transform(j21, gf_avoid_213k(2));
                   for (int k = 3; k <= 6; ++k) {
                     if (auto bad = same_gf(g, gf_once_213k(k))) return "213..." + std::to_string(k) + ": " + *bad;
                     g = contain_once_transform(g, gf_avoid_213k(k));
                   }
                   return std::nullopt;
                 }});
  out.push_back({"G = J exactly when the last entry is the maximum", [n_max]() -> Result {
                   for (int size = 1; size <= 4; ++size) {
                     for (const auto& tau : enumerate_class(size, {}, Ambient::Schroeder)) {
                       const bool ends_in_max = tau.at(size) == size;
                       const bool equal = brute_G(tau, n_max) == brute_J(tau, n_max);
                       if (ends_in_max != equal) return tau.str() + ": G = J is " + (equal ? "true" : "false");
                     }
                   }
                   return std::nullopt;
                 }});
  out.push_back({"length-4 witnesses", []() -> Result {
                   const std::set<Permutation> w123{Permutation::parse("2314"), Permutation::parse("1423"),
                                                    Permutation::parse("2341"), Permutation::parse("1342"),
                                                    Permutation::parse("4123"), Permutation::parse("3124")};
                   const std::set<Permutation> w213{Permutation::parse("3241"), Permutation::parse("2413"),
                                                    Permutation::parse("1324"), Permutation::parse("3142"),
                                                    Permutation::parse("4213")};
                   const auto a = once_witnesses(pattern_12k(3), 4);
                   const auto b = once_witnesses(pattern_213k(3), 4);
                   if (std::set<Permutation>(a.begin(), a.end()) != w123) return std::string("123 witnesses differ");
                   if (std::set<Permutation>(b.begin(), b.end()) != w213) return std::string("213 witnesses differ");
                   if (gf_once_12k(3).expand_integers(4)[4] != 6) return std::string("x^4 of once-123 is not 6");
                   if (gf_once_213k(3).expand_integers(4)[4] != 5) return std::string("x^4 of once-213 is not 5");
                   return std::nullopt;
                 }});
}

// ---- e2 ----

void add_e2(std::vector<Check>& out, int n_max) {
  for (int k = 2; k <= 3; ++k)
    for (int r = 1; r <= 3; ++r)
      out.push_back({"exactly " + std::to_string(r) + " of 12..." + std::to_string(k), [k, r, n_max]() {
                       return first_mismatch(gf_exactly_r_12k(k, r).expand_integers(n_max),
                                             brute_tau_counts(k, r, n_max));
                     }});
  out.push_back({"exactly one equals x^k / p_{k-1}^2", []() -> Result {
                   for (int k = 2; k <= 6; ++k)
                     if (auto bad = same_gf(gf_exactly_r_12k(k, 1), gf_once_12k(k)))
                       return "k = " + std::to_string(k) + ": " + *bad;
                   return std::nullopt;
                 }});
  out.push_back({"exact counts add up to the class", [n_max]() -> Result {
                   const int order = std::min(n_max, 8);
                   for (int k = 2; k <= 3; ++k) {
                     const long big_r = binom(order, k, BinomMode::Standard).get_si();
                     RationalGF total = gf_avoid_12k(k);
                     for (int r = 1; r <= big_r; ++r) total = total + gf_exactly_r_12k(k, r, order);
                     std::vector<BigInt> want{BigInt(1)};
                     for (int n = 1; n <= order; ++n) want.push_back(schroder_number(n - 1));
                     if (auto bad = first_mismatch(total.expand_integers(order), want))
                       return "k = " + std::to_string(k) + ", " + *bad;
                   }
                   return std::nullopt;
                 }});
}

// ---- cf ----

void add_cf(std::vector<Check>& out, int n_max) {
  const int order = std::min(n_max, 6);
  out.push_back({"finite fraction of x/(1-x) levels", []() -> Result {
                   const RationalGF x = RationalGF::x();
                   const RationalGF one_minus_x = RationalGF(1) - x;
                   for (int k = 2; k <= 8; ++k) {
                     std::vector<CfLevel> levels{{x, one_minus_x}};
                     for (int i = 1; i < k - 1; ++i) levels.push_back({-x, one_minus_x});
                     const RationalGF value = RationalGF(1) + eval_finite_cf(levels);
                     if (auto bad = same_gf(value, gf_avoid_12k(k))) return "k = " + std::to_string(k) + ": " + *bad;
                     const std::vector<RationalGF> monomials(static_cast<std::size_t>(k - 1), x);
                     if (auto bad = same_gf(finite_schroder_cf(monomials), gf_avoid_12k(k)))
                       return "k = " + std::to_string(k) + ", Schroder form: " + *bad;
                   }
                   return std::nullopt;
                 }});
  out.push_back({"multivariate tau fraction", [order]() {
                   return same_series(tau_fraction(4, order, order), tau_series(4, order));
                 }});
  out.push_back({"fraction depth stabilizes", [order]() {
                   return same_series(tau_fraction(4, order, order + 3), tau_fraction(4, order, order));
                 }});
  out.push_back({"increasing subsequence count", [n_max]() {
                   const int o = std::min(n_max, 6);
                   return same_series(increasing_subsequence_fraction(o, o), increasing_subsequence_series(o));
                 }});
  out.push_back({"length plus noninversions", [n_max]() {
                   const int o = std::min(n_max, 6);
                   return same_series(length_plus_noninversions_fraction(o, o), length_plus_noninversions_series(o));
                 }});
}

// ---- transfer ----

void add_transfer(std::vector<Check>& out) {
  out.push_back({"determinant", []() -> Result {
                   for (int k = 0; k <= 10; ++k)
                     if (transfer_det(k) != cheb_p(k + 1).inflate(2))
                       return "k = " + std::to_string(k) + ": " + transfer_det(k).str("t");
                   return std::nullopt;
                 }});
  for (int k = 0; k <= 5; ++k) {
    out.push_back({"minor ratios, k = " + std::to_string(k), [k]() -> Result {
                     constexpr int order = 12;
                     for (int r = 0; r <= k; ++r)
                       for (int s = 0; s <= k; ++s) {
                         const auto want = truncate(gf_between_heights(r, s, k, order).coeffs(), order + 1);
                         if (auto bad = first_mismatch(transfer_minor_gf(k, r, s).expand_integers(order), want))
                           return "r = " + std::to_string(r) + ", s = " + std::to_string(s) + ", " + *bad;
                       }
                     return std::nullopt;
                   }});
  }
}

// ---- bcs ----

void add_bcs(std::vector<Check>& out, int n_max) {
  constexpr int big_k = 4;
  const int depth = std::min(n_max, 6);
  const std::vector<std::pair<std::string, StatMatrix>> cases{
      {"identity", StatMatrix::Identity(big_k - 1, big_k - 1)},
      {"B", binomial_matrix(big_k - 1)},
      {"B inverse", binomial_inverse(big_k - 1)},
      {"random", random_stat_matrix(big_k - 1, big_k - 1, -1, 2, 20240607u)},
      {"single column", random_stat_matrix(big_k - 1, 1, 0, 3, 7u)}};
  for (const auto& [name, a] : cases) {
    out.push_back({"A = " + name, [a, depth]() -> Result {
                     const auto report = bcs_check(a, big_k, depth);
                     if (report.passed) return std::nullopt;
                     return report.first_mismatch;
                   }});
  }
  out.push_back({"B times its inverse", []() -> Result {
                   for (int size = 1; size <= 8; ++size)
                     if (binomial_matrix(size) * binomial_inverse(size) != StatMatrix::Identity(size, size))
                       return "size " + std::to_string(size);
                   return std::nullopt;
                 }});
}

}  // namespace

std::vector<Check> suite_checks(const std::string& suite, int n_max) {
  if (n_max < 0) throw InvalidInput("verify: negative n_max");
  std::vector<Check> out;
  if (suite == "all") {
    for (const auto& name : suite_names()) {
      auto part = suite_checks(name, n_max);
      for (auto& c : part) c.name = name + ": " + c.name;
      std::move(part.begin(), part.end(), std::back_inserter(out));
    }
  } else if (suite == "bijection") {
    add_bijection(out, n_max);
  } else if (suite == "gf-avoid") {
    add_gf_avoid(out, n_max);
  } else if (suite == "gf-once") {
    add_gf_once(out, n_max);
  } else if (suite == "e2") {
    add_e2(out, n_max);
  } else if (suite == "cf") {
    add_cf(out, n_max);
  } else if (suite == "transfer") {
    add_transfer(out);
  } else if (suite == "bcs") {
    add_bcs(out, n_max);
  } else {
    throw InvalidInput("unknown suite '" + suite + "'");
  }
  return out;
}

std::vector<CheckResult> run_checks(const std::string& suite, const std::vector<Check>& checks, int jobs) {
  std::vector<CheckResult> results(checks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < checks.size(); i = next++) {
      CheckResult& r = results[i];
      r.suite = suite;
      r.name = checks[i].name;
      try {
        const auto bad = checks[i].run();
        r.passed = !bad;
        if (bad) r.first_mismatch = *bad;
      } catch (const std::exception& e) {
        r.passed = false;
        r.first_mismatch = std::string("exception: ") + e.what();
      }
    }
  };
  const int threads = std::clamp(jobs, 1, static_cast<int>(std::max<std::size_t>(checks.size(), 1)));
  std::vector<std::future<void>> pool;
  for (int t = 1; t < threads; ++t) pool.push_back(std::async(std::launch::async, worker));
  worker();
  for (auto& f : pool) f.get();
  return results;
}

std::vector<CheckResult> run_suite(const std::string& suite, int n_max, int jobs) {
  return run_checks(suite, suite_checks(suite, n_max), jobs);
}

// ---- continued-fraction series ----

namespace {

void for_each_schroeder(int max_length, const std::function<void(const Permutation&)>& visit) {
  for (int n = 0; n <= max_length; ++n) for_each_in_class(n, {}, Ambient::Schroeder, visit, std::max(max_length, 1));
}

std::uint64_t tau_or_zero(const std::vector<std::uint64_t>& t, int k) {
  return static_cast<std::size_t>(k) <= t.size() ? t[static_cast<std::size_t>(k - 1)] : 0;
}

}  // namespace

TruncSeries tau_series(int vars, int order) {
  TruncSeries out(1, order);
  for_each_schroeder(order, [&](const Permutation& pi) {
    const auto t = tau_all(pi);
    std::vector<std::pair<int, long>> powers;
    for (int k = 1; k <= vars; ++k) powers.emplace_back(k, static_cast<long>(tau_or_zero(t, k)));
    if (pi.empty()) powers.clear();
    out.add_term(Monomial(std::move(powers)), 1);
  });
  return out;
}

TruncSeries tau_fraction(int vars, int order, int depth) {
  return eval_schroder_cf(
      [vars](int n) {
        std::vector<std::pair<int, long>> powers;
        for (int k = 1; k <= vars; ++k) powers.emplace_back(k, binom(n, k - 1, BinomMode::Standard).get_si());
        return Monomial(std::move(powers));
      },
      depth, order, 1);
}

TruncSeries increasing_subsequence_series(int order) {
  TruncSeries out(0, order);
  for_each_schroeder(order, [&](const Permutation& pi) {
    long m = 0;
    for (auto v : tau_all(pi)) m += static_cast<long>(v);
    if (pi.empty()) m = 0;
    out.add_term(Monomial({{0, pi.size()}, {1, m}}), 1);
  });
  return out;
}

TruncSeries increasing_subsequence_fraction(int order, int depth) {
  return eval_schroder_cf([](int n) { return Monomial({{0, 1}, {1, 1L << n}}); }, depth, order, 0);
}

TruncSeries length_plus_noninversions_series(int order) {
  TruncSeries out(0, order);
  for_each_schroeder(order, [&](const Permutation& pi) {
    const auto t = tau_all(pi);
    const long e = pi.empty() ? 0 : static_cast<long>(tau_or_zero(t, 1) + tau_or_zero(t, 2));
    out.add_term(Monomial::var(0, e), 1);
  });
  return out;
}

TruncSeries length_plus_noninversions_fraction(int order, int depth) {
  return eval_schroder_cf([](int n) { return Monomial::var(0, n + 1); }, depth, order, 0);
}

}  // namespace schroeder
