#pragma once

#include <vector>

#include "schroeder/numbers.hpp"
#include "schroeder/permutation.hpp"
#include "schroeder/polynomial.hpp"
#include "schroeder/series.hpp"

namespace schroeder {

/// p_k(x) with p_{-1} = 0, p_0 = 1, p_k = (1 - x) p_{k-1} - x p_{k-2}.
/// Memoized; safe to call from several threads.
IntPoly cheb_p(int k);

/// 1 + x p_{k-2} / p_{k-1}: the class S(1243, 2143, 12...k).
RationalGF gf_avoid_12k(int k);
/// Same function, for S(1243, 2143, 213...k).
RationalGF gf_avoid_213k(int k);

/// (2 - P) / (2 - x - P): from avoiding R to avoiding every rho followed by a
/// new maximum. P must have constant term 1.
RationalGF avoid_append_transform(const RationalGF& p);

/// 1 + x f_{k-1} / f_k for S(1243, 2143, 2314...k), k >= 3.
RationalGF gf_avoid_2314k(int k);
/// 1 + x g_{k-1} / g_k for S(1243, 2143, 3214...k), k >= 3.
RationalGF gf_avoid_3214k(int k);
IntPoly family_f(int k);  // k >= 2
IntPoly family_g(int k);  // k >= 2

/// (n + 2) 2^(n-3), n >= 2.
BigInt count_231(int n);
/// C(n-1, 0) + C(n-1, 1) + 2 C(n-1, 2) + 2 C(n-1, 3), n >= 1.
BigInt count_321(int n);

/// The three conditions under which pi1 * pi2 avoids 321 (for |pi2| >= 2).
bool star_avoids_321_conditions(const Permutation& pi1, const Permutation& pi2);

/// Permutations in S(1243, 2143) with exactly r increasing subsequences of length k.
/// With max_degree >= 0, terms whose lowest power of x exceeds max_degree are
/// skipped; the result is then exact only through x^max_degree.
RationalGF gf_exactly_r_12k(int k, int r, int max_degree = -1);

/// One solution (l_0..l_b, m_0..m_b) of r = sum (l_i + m_i) C(k + i - 1, k - 1).
struct LevelCounts {
  std::vector<int> l;
  std::vector<int> m;
};
/// Largest b with C(k + b, k) <= r.
int exactly_r_depth(int k, int r);
/// All solutions, or only those with sum (l_i + m_i) <= max_total when max_total >= 0.
std::vector<LevelCounts> exactly_r_solutions(int k, int r, int max_total = -1);

/// x J / (2 - x - H)^2. H must have constant term 1.
RationalGF contain_once_transform(const RationalGF& j, const RationalGF& h);
/// x^k / p_{k-1}^2, k >= 2.
RationalGF gf_once_12k(int k);
/// x^k (1 + x)(1 - x)^2 / p_{k-1}^2, k >= 3.
RationalGF gf_once_213k(int k);

/// tau followed by the new maximum |tau| + 1.
Permutation append_max(const Permutation& tau);
/// 1, 2, ..., k
Permutation pattern_12k(int k);
/// 2, 1, 3, ..., k
Permutation pattern_213k(int k);
/// 2, 3, 1, 4, ..., k
Permutation pattern_2314k(int k);
/// 3, 2, 1, 4, ..., k
Permutation pattern_3214k(int k);

/// Oracle coefficient lists over S_n(1243, 2143), n = 0..n_max.
/// G: exactly one occurrence of tau. H: avoids tau. J: exactly one tau and no (tau, |tau|+1).
std::vector<BigInt> brute_G(const Permutation& tau, int n_max, int limit = kDefaultEnumerationLimit);
std::vector<BigInt> brute_H(const Permutation& tau, int n_max, int limit = kDefaultEnumerationLimit);
std::vector<BigInt> brute_J(const Permutation& tau, int n_max, int limit = kDefaultEnumerationLimit);
/// |S_n(1243, 2143, extra)| for n = 0..n_max.
std::vector<BigInt> brute_avoid_counts(const PatternSet& extra, int n_max,
                                       int limit = kDefaultEnumerationLimit);
/// #{pi in S_n(1243, 2143) : tau_k(pi) = r} for n = 0..n_max.
std::vector<BigInt> brute_tau_counts(int k, int r, int n_max, int limit = kDefaultEnumerationLimit);
/// Members of S_n(1243, 2143) with exactly one occurrence of tau.
std::vector<Permutation> once_witnesses(const Permutation& tau, int n);

BigInt schroder_number(int n);
BigInt catalan_number(int n);

}  // namespace schroeder
