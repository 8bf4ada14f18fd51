#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <string>

#include "schroeder/series.hpp"

namespace schroeder {

/// Rows are indexed by k (tau_k), columns by the derived statistics: column n
/// defines sum_k A(k, n) tau_k.
using StatMatrix = Eigen::Matrix<long, Eigen::Dynamic, Eigen::Dynamic>;

/// B(i, j) = C(i, j) with 0-based indices.
StatMatrix binomial_matrix(int size);
/// (-1)^(i+j) C(i, j), the inverse of binomial_matrix(size).
StatMatrix binomial_inverse(int size);
/// Entries drawn uniformly from lo..hi with a fixed-seed mt19937.
StatMatrix random_stat_matrix(int rows, int cols, int lo, int hi, std::uint32_t seed);

/// Variable 0 is the length x; variable j >= 1 is q_j for column j - 1 of A.
/// sum over pi in S_n(1243, 2143, 12...K), n <= n_max, of x^n prod_j q_j^{tau_{A,j}(pi)}.
/// A must have K - 1 rows.
TruncSeries bcs_statistic_side(const StatMatrix& a, int big_k, int n_max);
/// The finite Schroeder continued fraction with K - 1 levels, level n being
/// x prod_j q_j^{(BA)(n, j)}, truncated at x^n_max.
TruncSeries bcs_fraction_side(const StatMatrix& a, int big_k, int n_max);

struct BcsReport {
  bool passed = false;
  std::size_t terms = 0;
  std::string first_mismatch;  // empty when passed
};

/// Compares the two sides term by term.
BcsReport bcs_check(const StatMatrix& a, int big_k, int n_max);

}  // namespace schroeder
