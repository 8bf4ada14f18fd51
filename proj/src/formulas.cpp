#include "schroeder/formulas.hpp"

#include <algorithm>
#include <mutex>

#include "schroeder/errors.hpp"

namespace schroeder {

IntPoly cheb_p(int k) {
  if (k < -1) throw InvalidInput("cheb_p: k must be at least -1");
  static std::mutex mutex;
  static std::vector<IntPoly> cache{IntPoly(), IntPoly(BigInt(1))};  // p_{-1}, p_0
  std::lock_guard lock(mutex);
  const IntPoly one_minus_x{BigInt(1), BigInt(-1)};
  while (static_cast<int>(cache.size()) < k + 2) {
    const std::size_t n = cache.size();
    cache.push_back(one_minus_x * cache[n - 1] - IntPoly::x() * cache[n - 2]);
  }
  return cache[static_cast<std::size_t>(k + 1)];
}

namespace {

const RationalGF& x_gf() {
  static const RationalGF x = RationalGF::x();
  return x;
}

RationalGF one_plus_x_ratio(const IntPoly& top, const IntPoly& bottom) {
  return RationalGF(1) + RationalGF(IntPoly::x() * top, bottom);
}

void require_unit_constant(const RationalGF& f, const char* what) {
  if (f.expand(0)[0] != 1) throw InvalidInput(std::string(what) + ": constant term must be 1");
}

Permutation with_prefix(std::vector<int> prefix, int k) {
  for (int v = static_cast<int>(prefix.size()) + 1; v <= k; ++v) prefix.push_back(v);
  return Permutation(std::move(prefix));
}

}  // namespace

RationalGF gf_avoid_12k(int k) {
  if (k < 1) throw InvalidInput("gf_avoid_12k: k must be positive");
  if (k == 1) return RationalGF(1);
  return one_plus_x_ratio(cheb_p(k - 2), cheb_p(k - 1));
}

RationalGF gf_avoid_213k(int k) {
  if (k < 1) throw InvalidInput("gf_avoid_213k: k must be positive");
  return gf_avoid_12k(k);
}

RationalGF avoid_append_transform(const RationalGF& p) {
  require_unit_constant(p, "avoid_append_transform");
  const RationalGF two(2);
  const RationalGF den = two - x_gf() - p;
  if (den.is_zero()) throw DomainError("avoid_append_transform: degenerate denominator");
  return (two - p) / den;
}

IntPoly family_f(int k) {
  if (k < 2) throw InvalidInput("family_f: k must be at least 2");
  const IntPoly one_minus_x{BigInt(1), BigInt(-1)};
  if (k == 2) return one_minus_x.pow(2);
  const IntPoly one_minus_2x{BigInt(1), BigInt(-2)};
  return one_minus_2x.pow(2) * cheb_p(k - 3) - one_minus_x.pow(2) * IntPoly::x() * cheb_p(k - 4);
}

IntPoly family_g(int k) {
  if (k < 2) throw InvalidInput("family_g: k must be at least 2");
  const IntPoly a{BigInt(1), BigInt(2), BigInt(-1)};
  const IntPoly b{BigInt(1), BigInt(0), BigInt(2), BigInt(-4), BigInt(1)};
  return b * cheb_p(k - 1) - a * IntPoly::x() * cheb_p(k);
}

RationalGF gf_avoid_2314k(int k) {
  if (k < 3) throw InvalidInput("gf_avoid_2314k: k must be at least 3");
  return one_plus_x_ratio(family_f(k - 1), family_f(k));
}

RationalGF gf_avoid_3214k(int k) {
  if (k < 3) throw InvalidInput("gf_avoid_3214k: k must be at least 3");
  return one_plus_x_ratio(family_g(k - 1), family_g(k));
}

BigInt count_231(int n) {
  if (n < 2) throw DomainError("count_231: n must be at least 2");
  BigInt v = n + 2;
  if (n >= 3) return v << static_cast<unsigned>(n - 3);
  return v >> 1;  // n = 2
}

BigInt count_321(int n) {
  if (n < 1) throw DomainError("count_321: n must be at least 1");
  const auto c = [n](long j) { return binom(n - 1, j, BinomMode::Standard); };
  return c(0) + c(1) + 2 * c(2) + 2 * c(3);
}

bool star_avoids_321_conditions(const Permutation& pi1, const Permutation& pi2) {
  if (pi1.empty() || pi2.empty()) throw InvalidInput("star_avoids_321_conditions: empty factor");
  const bool begins_with_one = pi1.at(1) == 1 || pi2.at(1) == 1;
  // 2, 3, ..., i appear left to right in pi1
  std::vector<int> where(static_cast<std::size_t>(pi1.size()) + 1);
  for (int p = 1; p <= pi1.size(); ++p) where[static_cast<std::size_t>(pi1.at(p))] = p;
  bool middle_increasing = true;
  for (int v = 3; v <= pi1.size(); ++v)
    if (where[static_cast<std::size_t>(v)] < where[static_cast<std::size_t>(v - 1)]) middle_increasing = false;
  bool tail_increasing = true;
  for (int p = 3; p <= pi2.size(); ++p)
    if (pi2.at(p) < pi2.at(p - 1)) tail_increasing = false;
  return begins_with_one && middle_increasing && tail_increasing;
}

int exactly_r_depth(int k, int r) {
  if (k < 2 || r < 1) throw InvalidInput("exactly_r: need k >= 2 and r >= 1");
  int b = 0;
  while (binom(k + b + 1, k, BinomMode::Standard) <= r) ++b;
  return b;
}

std::vector<LevelCounts> exactly_r_solutions(int k, int r, int max_total) {
  const int b = exactly_r_depth(k, r);
  std::vector<long> weight(static_cast<std::size_t>(b) + 1);
  for (int i = 0; i <= b; ++i) weight[static_cast<std::size_t>(i)] = binom(k + i - 1, k - 1, BinomMode::Standard).get_si();

  std::vector<LevelCounts> out;
  LevelCounts cur{std::vector<int>(static_cast<std::size_t>(b) + 1, 0),
                  std::vector<int>(static_cast<std::size_t>(b) + 1, 0)};
  // Assign level i, highest first; level 0 has weight 1 and absorbs the rest.
  auto assign = [&](auto&& self, int i, long remaining, long used) -> void {
    const auto w = weight[static_cast<std::size_t>(i)];
    if (i == 0) {
      if (max_total >= 0 && used + remaining > max_total) return;
      for (int l = 0; l <= remaining; ++l) {
        cur.l[0] = l;
        cur.m[0] = static_cast<int>(remaining) - l;
        out.push_back(cur);
      }
      return;
    }
    for (long s = 0; s * w <= remaining; ++s) {
      if (max_total >= 0 && used + s > max_total) break;
      for (int l = 0; l <= s; ++l) {
        cur.l[static_cast<std::size_t>(i)] = l;
        cur.m[static_cast<std::size_t>(i)] = static_cast<int>(s) - l;
        self(self, i - 1, remaining - s * w, used + s);
      }
    }
  };
  assign(assign, b, r, 0);
  return out;
}

RationalGF gf_exactly_r_12k(int k, int r, int max_degree) {
  const IntPoly lower = cheb_p(k - 2);
  const IntPoly upper = cheb_p(k - 1);
  RationalGF total;
  const int max_total = max_degree >= 0 ? std::max(max_degree - (k - 1), -1) : -1;
  if (max_degree >= 0 && max_total < 0) return total;
  for (const auto& s : exactly_r_solutions(k, r, max_total)) {
    const std::size_t levels = s.l.size();
    BigInt coefficient = 1;
    int exponent = k - 1;
    for (std::size_t i = 0; i < levels; ++i) {
      const long next = i + 1 < levels ? s.l[i + 1] : 0;
      const long l = s.l[i];
      const long m = s.m[i];
      coefficient *= binom(l + next + m - 1, next + m, BinomMode::Extended) *
                     binom(next + m, m, BinomMode::Extended);
      exponent += static_cast<int>(l + m);
    }
    if (coefficient == 0) continue;
    const int l0 = s.l[0];
    const RationalGF term = RationalGF(IntPoly::monomial(coefficient, exponent)) *
                            RationalGF(lower).pow(l0 - 1) / RationalGF(upper).pow(l0 + 1);
    total = total + term;
  }
  return total;
}

RationalGF contain_once_transform(const RationalGF& j, const RationalGF& h) {
  require_unit_constant(h, "contain_once_transform");
  const RationalGF den = RationalGF(2) - x_gf() - h;
  if (den.is_zero()) throw DomainError("contain_once_transform: degenerate denominator");
  return x_gf() * j / den.pow(2);
}

RationalGF gf_once_12k(int k) {
  if (k < 2) throw InvalidInput("gf_once_12k: k must be at least 2");
  return RationalGF(IntPoly::monomial(BigInt(1), k), cheb_p(k - 1).pow(2));
}

RationalGF gf_once_213k(int k) {
  if (k < 3) throw InvalidInput("gf_once_213k: k must be at least 3");
  const IntPoly factor = IntPoly{BigInt(1), BigInt(1)} * IntPoly{BigInt(1), BigInt(-1)}.pow(2);
  return RationalGF(IntPoly::monomial(BigInt(1), k) * factor, cheb_p(k - 1).pow(2));
}

Permutation append_max(const Permutation& tau) {
  std::vector<int> e(tau.entries().begin(), tau.entries().end());
  e.push_back(tau.size() + 1);
  return Permutation(std::move(e));
}

Permutation pattern_12k(int k) { return Permutation::identity(k); }
Permutation pattern_213k(int k) { return with_prefix({2, 1}, std::max(k, 2)); }
Permutation pattern_2314k(int k) { return with_prefix({2, 3, 1}, std::max(k, 3)); }
Permutation pattern_3214k(int k) { return with_prefix({3, 2, 1}, std::max(k, 3)); }

namespace {

std::vector<BigInt> tally(int n_max, int limit, const PatternSet& avoid,
                          const std::function<bool(const Permutation&)>& keep) {
  std::vector<BigInt> out;
  for (int n = 0; n <= n_max; ++n) {
    std::uint64_t count = 0;
    for_each_in_class(
        n, avoid, Ambient::Schroeder,
        [&](const Permutation& pi) {
          if (keep(pi)) ++count;
        },
        limit);
    out.emplace_back(static_cast<unsigned long>(count));
  }
  return out;
}

}  // namespace

std::vector<BigInt> brute_G(const Permutation& tau, int n_max, int limit) {
  return tally(n_max, limit, {}, [&](const Permutation& pi) { return count_occurrences(pi, tau) == 1; });
}

std::vector<BigInt> brute_H(const Permutation& tau, int n_max, int limit) {
  return tally(n_max, limit, PatternSet{tau}, [](const Permutation&) { return true; });
}

std::vector<BigInt> brute_J(const Permutation& tau, int n_max, int limit) {
  return tally(n_max, limit, PatternSet{append_max(tau)},
               [&](const Permutation& pi) { return count_occurrences(pi, tau) == 1; });
}

std::vector<BigInt> brute_avoid_counts(const PatternSet& extra, int n_max, int limit) {
  return tally(n_max, limit, extra, [](const Permutation&) { return true; });
}

std::vector<BigInt> brute_tau_counts(int k, int r, int n_max, int limit) {
  return tally(n_max, limit, {}, [&](const Permutation& pi) { return tau(pi, k) == r; });
}

std::vector<Permutation> once_witnesses(const Permutation& tau, int n) {
  std::vector<Permutation> out;
  for_each_in_class(n, {}, Ambient::Schroeder, [&](const Permutation& pi) {
    if (count_occurrences(pi, tau) == 1) out.push_back(pi);
  });
  return out;
}

BigInt schroder_number(int n) {
  if (n < 0) throw InvalidInput("schroder_number: negative index");
  std::vector<BigInt> r{BigInt(1)};
  for (int m = 1; m <= n; ++m) {
    BigInt v = r[static_cast<std::size_t>(m - 1)];
    for (int k = 0; k < m; ++k) v += r[static_cast<std::size_t>(k)] * r[static_cast<std::size_t>(m - 1 - k)];
    r.push_back(v);
  }
  return r.back();
}

BigInt catalan_number(int n) {
  if (n < 0) throw InvalidInput("catalan_number: negative index");
  std::vector<BigInt> c{BigInt(1)};
  for (int m = 1; m <= n; ++m) {
    BigInt v = 0;
    for (int k = 0; k < m; ++k) v += c[static_cast<std::size_t>(k)] * c[static_cast<std::size_t>(m - 1 - k)];
    c.push_back(v);
  }
  return c.back();
}

}  // namespace schroeder
