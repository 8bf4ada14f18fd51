#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "schroeder/numbers.hpp"
#include "schroeder/series.hpp"

namespace schroeder {

/// A named identity; run() returns the first mismatch, or nullopt on success.
struct Check {
  std::string name;
  std::function<std::optional<std::string>()> run;
};

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string first_mismatch;
};

/// bijection, gf-avoid, gf-once, e2, cf, transfer, bcs
const std::vector<std::string>& suite_names();

/// Checks of one suite ("all" expands to every suite). Enumeration-based
/// oracles stop at n_max. Throws InvalidInput for an unknown suite.
std::vector<Check> suite_checks(const std::string& suite, int n_max);

/// Runs the checks on up to `jobs` threads; results keep the input order.
/// An exception inside a check counts as a failure.
std::vector<CheckResult> run_checks(const std::string& suite, const std::vector<Check>& checks,
                                    int jobs = 1);
std::vector<CheckResult> run_suite(const std::string& suite, int n_max, int jobs = 1);

/// "n = 5: formula 12, oracle 13" for the first differing index.
std::optional<std::string> first_mismatch(const std::vector<BigInt>& formula,
                                          const std::vector<BigInt>& oracle);

/// sum over pi in S(1243, 2143) with |pi| <= order of prod_{k <= vars} x_k^{tau_k(pi)}.
/// Variable k has index k; x_1 grades.
TruncSeries tau_series(int vars, int order);
/// The Schroeder continued fraction with levels prod_{k <= vars} x_k^{C(n, k-1)}.
TruncSeries tau_fraction(int vars, int order, int depth);

/// sum q^{m(pi)} x^{|pi|}, m = number of nonempty increasing subsequences
/// (x is variable 0, q variable 1); and the fraction with levels x q^{2^n}.
TruncSeries increasing_subsequence_series(int order);
TruncSeries increasing_subsequence_fraction(int order, int depth);
/// sum q^{tau_1 + tau_2}, truncated at q^order (q is variable 0); and the
/// fraction with levels q^{n+1}.
TruncSeries length_plus_noninversions_series(int order);
TruncSeries length_plus_noninversions_fraction(int order, int depth);

}  // namespace schroeder
