#include "schroeder/bcs.hpp"

#include <random>

#include "schroeder/errors.hpp"
#include "schroeder/permutation.hpp"

namespace schroeder {

StatMatrix binomial_matrix(int size) {
  StatMatrix b = StatMatrix::Zero(size, size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j <= i; ++j) b(i, j) = binom(i, j, BinomMode::Standard).get_si();
  return b;
}

StatMatrix binomial_inverse(int size) {
  StatMatrix b = binomial_matrix(size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      if ((i + j) % 2 != 0) b(i, j) = -b(i, j);
  return b;
}

StatMatrix random_stat_matrix(int rows, int cols, int lo, int hi, std::uint32_t seed) {
  std::mt19937 gen(seed);
  std::uniform_int_distribution<int> pick(lo, hi);
  StatMatrix a(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a(i, j) = pick(gen);
  return a;
}

namespace {

void check_shape(const StatMatrix& a, int big_k, int n_max) {
  if (big_k < 2) throw InvalidInput("bcs: K must be at least 2");
  if (a.rows() != big_k - 1) throw InvalidInput("bcs: A must have K - 1 rows");
  if (n_max < 0) throw InvalidInput("bcs: negative n_max");
}

}  // namespace

TruncSeries bcs_statistic_side(const StatMatrix& a, int big_k, int n_max) {
  check_shape(a, big_k, n_max);
  TruncSeries out(0, n_max);
  const PatternSet avoid{Permutation::identity(big_k)};
  for (int n = 0; n <= n_max; ++n) {
    for_each_in_class(n, avoid, Ambient::Schroeder, [&](const Permutation& pi) {
      const auto t = tau_all(pi);
      std::vector<std::pair<int, long>> powers{{0, n}};
      for (Eigen::Index j = 0; j < a.cols(); ++j) {
        long e = 0;
        for (Eigen::Index k = 0; k < a.rows() && static_cast<std::size_t>(k) < t.size(); ++k)
          e += a(k, j) * static_cast<long>(t[static_cast<std::size_t>(k)]);
        powers.emplace_back(static_cast<int>(j) + 1, e);
      }
      out.add_term(Monomial(std::move(powers)), 1);
    }, n_max);
  }
  return out;
}

TruncSeries bcs_fraction_side(const StatMatrix& a, int big_k, int n_max) {
  check_shape(a, big_k, n_max);
  const StatMatrix ba = binomial_matrix(big_k - 1) * a;
  const auto level = [&](int n) {
    std::vector<std::pair<int, long>> powers{{0, 1}};
    for (Eigen::Index j = 0; j < ba.cols(); ++j) powers.emplace_back(static_cast<int>(j) + 1, ba(n, j));
    return Monomial(std::move(powers));
  };
  return eval_schroder_cf(level, big_k - 1, n_max, 0);
}

BcsReport bcs_check(const StatMatrix& a, int big_k, int n_max) {
  const TruncSeries lhs = bcs_statistic_side(a, big_k, n_max);
  const TruncSeries rhs = bcs_fraction_side(a, big_k, n_max);
  BcsReport report;
  report.terms = lhs.terms().size();
  for (const auto& [m, c] : lhs.terms()) {
    if (rhs.coefficient(m) != c) {
      report.first_mismatch = m.str() + ": statistic side " + c.get_str() + ", fraction side " +
                              rhs.coefficient(m).get_str();
      return report;
    }
  }
  for (const auto& [m, c] : rhs.terms()) {
    if (lhs.coefficient(m) != c) {
      report.first_mismatch = m.str() + ": statistic side 0, fraction side " + c.get_str();
      return report;
    }
  }
  report.passed = true;
  return report;
}

}  // namespace schroeder
