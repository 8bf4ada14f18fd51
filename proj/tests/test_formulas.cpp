#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "schroeder/errors.hpp"
#include "schroeder/formulas.hpp"

using namespace schroeder;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

std::vector<BigInt> ints(std::initializer_list<long> v) {
  std::vector<BigInt> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

// Frozen from an itertools enumeration of S_n(1243, 2143), n = 0..8.
const auto kAvoid123 = ints({1, 1, 2, 5, 13, 34, 89, 233, 610});
const auto kAvoid1234 = ints({1, 1, 2, 6, 21, 77, 286, 1066, 3977});
const auto kAvoid231 = ints({1, 1, 2, 5, 12, 28, 64, 144, 320});
const auto kAvoid2314 = ints({1, 1, 2, 6, 21, 76, 276, 1001, 3626});
const auto kAvoid321 = ints({1, 1, 2, 5, 12, 25, 46, 77, 120});
const auto kAvoid3214 = ints({1, 1, 2, 6, 21, 76, 273, 971, 3439});
const auto kOnce12 = ints({0, 0, 1, 2, 3, 4, 5, 6, 7});
const auto kOnce123 = ints({0, 0, 0, 1, 6, 25, 90, 300, 954});
const auto kOnce213 = ints({0, 0, 0, 1, 5, 18, 60, 191, 589});
const auto kOnce1234 = ints({0, 0, 0, 0, 1, 10, 65, 352, 1730});
const auto kOnce2134 = ints({0, 0, 0, 0, 1, 9, 54, 278, 1323});
const auto kTau2Twice = ints({0, 0, 0, 2, 5, 9, 14, 20, 27});
const auto kTau2Thrice = ints({0, 0, 0, 1, 6, 15, 29, 49, 76});
const auto kTau3Twice = ints({0, 0, 0, 0, 2, 14, 67, 273, 1017});
const auto kTau3Thrice = ints({0, 0, 0, 0, 0, 4, 32, 172, 776});

}  // namespace

TEST_CASE("rescaled Chebyshev polynomials") {
  CHECK(cheb_p(-1).is_zero());
  CHECK(cheb_p(0) == IntPoly{1});
  CHECK(cheb_p(1) == IntPoly{1, -1});
  CHECK(cheb_p(2) == IntPoly{1, -3, 1});
  for (int k = 0; k <= 20; ++k) {
    const auto p = cheb_p(k);
    REQUIRE(p.degree() == k);
    for (int i = 0; i <= k; ++i) REQUIRE(sgn(p[i]) == (i % 2 == 0 ? 1 : -1));
  }
}

TEST_CASE("avoidance generating functions") {
  CHECK(gf_avoid_12k(2).expand_integers(8) == ints({1, 1, 1, 1, 1, 1, 1, 1, 1}));
  CHECK(gf_avoid_12k(3).expand_integers(8) == kAvoid123);
  CHECK(gf_avoid_12k(4).expand_integers(8) == kAvoid1234);
  CHECK(gf_avoid_213k(3).expand_integers(8) == kAvoid123);
  CHECK(gf_avoid_213k(4).expand_integers(8) == kAvoid1234);
  CHECK(gf_avoid_2314k(4).expand_integers(8) == kAvoid2314);
  CHECK(gf_avoid_3214k(4).expand_integers(8) == kAvoid3214);
  CHECK(gf_avoid_2314k(3).expand_integers(8) == kAvoid231);
  CHECK(gf_avoid_3214k(3).expand_integers(8) == kAvoid321);
  CHECK(gf_avoid_12k(1) == RationalGF(1));
  CHECK_THROWS_AS(gf_avoid_12k(0), InvalidInput);
}

TEST_CASE("appending a maximum") {
  CHECK(avoid_append_transform(RationalGF(1)) == gf_avoid_12k(2));
  for (int k = 2; k <= 8; ++k) REQUIRE(avoid_append_transform(gf_avoid_12k(k)) == gf_avoid_12k(k + 1));
  CHECK(avoid_append_transform(gf_avoid_2314k(4)) == gf_avoid_2314k(5));
  CHECK(family_f(2) == IntPoly{1, -2, 1});
}

TEST_CASE("avoidance against enumeration") {
  for (int k = 3; k <= 5; ++k) {
    REQUIRE(gf_avoid_2314k(k).expand_integers(7) == brute_avoid_counts(PatternSet{pattern_2314k(k)}, 7));
    REQUIRE(gf_avoid_3214k(k).expand_integers(7) == brute_avoid_counts(PatternSet{pattern_3214k(k)}, 7));
    REQUIRE(gf_avoid_213k(k).expand_integers(7) == brute_avoid_counts(PatternSet{pattern_213k(k)}, 7));
  }
}

TEST_CASE("closed-form counts") {
  for (int n = 2; n <= 8; ++n) CHECK(count_231(n) == kAvoid231[static_cast<std::size_t>(n)]);
  for (int n = 1; n <= 8; ++n) CHECK(count_321(n) == kAvoid321[static_cast<std::size_t>(n)]);
  CHECK(count_321(6) == 46);
  CHECK_THROWS_AS(count_231(1), DomainError);
  CHECK_THROWS_AS(count_321(0), DomainError);
}

TEST_CASE("321-avoiding star products") {
  const PatternSet p321 = PatternSet::parse("321");
  for (int n = 3; n <= 7; ++n) {
    for (int i = 1; i <= n - 2; ++i) {
      for (const auto& a : enumerate_class(i, p321, Ambient::Schroeder))
        for (const auto& b : enumerate_class(n - i, p321, Ambient::Schroeder))
          REQUIRE(star_avoids_321_conditions(a, b) == is_avoiding(star(a, b), p321));
    }
  }
}

TEST_CASE("exactly one occurrence") {
  CHECK(gf_once_12k(2).expand_integers(8) == kOnce12);
  CHECK(gf_once_12k(3).expand_integers(8) == kOnce123);
  CHECK(gf_once_12k(4).expand_integers(8) == kOnce1234);
  CHECK(gf_once_213k(3).expand_integers(8) == kOnce213);
  CHECK(gf_once_213k(4).expand_integers(8) == kOnce2134);

  std::vector<std::string> w;
  for (const auto& p : once_witnesses(P("123"), 4)) w.push_back(p.str());
  CHECK(w == std::vector<std::string>{"1342", "1423", "2314", "2341", "3124", "4123"});
  w.clear();
  for (const auto& p : once_witnesses(P("213"), 4)) w.push_back(p.str());
  CHECK(w == std::vector<std::string>{"1324", "2413", "3142", "3241", "4213"});
}

TEST_CASE("containment transform") {
  CHECK(brute_J(P("21"), 6) == ints({0, 0, 1, 1, 0, 0, 0}));
  for (const char* t : {"1", "12", "21", "213"}) {
    const auto tau = P(t);
    const int n = 7;
    const auto to_gf = [](const std::vector<BigInt>& c) { return RationalGF(IntPoly(std::vector<BigInt>(c))); };
    const auto g = contain_once_transform(to_gf(brute_J(tau, n)), to_gf(brute_H(tau, n)));
    const auto got = g.expand_integers(n);
    REQUIRE(got == brute_G(append_max(tau), n));
  }
  for (int size = 1; size <= 3; ++size)
    for (const auto& tau : enumerate_class(size, {}))
      REQUIRE((brute_G(tau, 7) == brute_J(tau, 7)) == (tau.at(size) == size));
}

TEST_CASE("exactly r increasing subsequences") {
  CHECK(exactly_r_depth(2, 1) == 0);
  CHECK(exactly_r_depth(2, 3) == 1);
  CHECK(exactly_r_solutions(2, 1).size() == 2);
  for (int k = 2; k <= 4; ++k) {
    for (int r = 1; r <= 6; ++r) {
      for (const auto& s : exactly_r_solutions(k, r)) {
        long total = 0;
        for (std::size_t i = 0; i < s.l.size(); ++i)
          total += (s.l[i] + s.m[i]) * binom(k + static_cast<long>(i) - 1, k - 1, BinomMode::Standard).get_si();
        REQUIRE(total == r);
      }
    }
  }

  CHECK(gf_exactly_r_12k(2, 1).expand_integers(8) == kOnce12);
  CHECK(gf_exactly_r_12k(2, 2).expand_integers(8) == kTau2Twice);
  CHECK(gf_exactly_r_12k(2, 3).expand_integers(8) == kTau2Thrice);
  CHECK(gf_exactly_r_12k(3, 1).expand_integers(8) == kOnce123);
  CHECK(gf_exactly_r_12k(3, 2).expand_integers(8) == kTau3Twice);
  CHECK(gf_exactly_r_12k(3, 3).expand_integers(8) == kTau3Thrice);
  for (int k = 2; k <= 6; ++k) REQUIRE(gf_exactly_r_12k(k, 1) == gf_once_12k(k));
  CHECK(gf_exactly_r_12k(2, 4).expand_integers(7) == brute_tau_counts(2, 4, 7));
  CHECK(gf_exactly_r_12k(2, 5, 7).expand_integers(7) == brute_tau_counts(2, 5, 7));
}

TEST_CASE("Schroeder and Catalan numbers") {
  CHECK(schroder_number(0) == 1);
  CHECK(schroder_number(7) == 8558);
  CHECK(catalan_number(4) == 14);
  for (int n = 0; n <= 8; ++n)
    REQUIRE(BigInt(static_cast<unsigned long>(enumerate_class(n, PatternSet::parse("132")).size())) == catalan_number(n));
}
