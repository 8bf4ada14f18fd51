#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "schroeder/errors.hpp"
#include "schroeder/formulas.hpp"
#include "schroeder/permutation.hpp"

using namespace schroeder;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }
std::vector<int> V(std::initializer_list<int> v) { return v; }
}  // namespace

TEST_CASE("construction validates one-line notation") {
  CHECK(P("2143").size() == 4);
  CHECK(P("").empty());
  CHECK(P("10,1,2,3,4,5,6,7,8,9").str() == "10,1,2,3,4,5,6,7,8,9");
  CHECK(P("2 1 3").str() == "213");
  CHECK_THROWS_AS(Permutation(V({1, 1})), InvalidInput);
  CHECK_THROWS_AS(Permutation(V({0, 1})), InvalidInput);
  CHECK_THROWS_AS(Permutation(V({1, 3})), InvalidInput);
  CHECK_THROWS_AS(P("12a"), InvalidInput);
}

TEST_CASE("type of a subsequence") {
  CHECK(type_of(V({2, 8, 6, 9})) == P("1324"));
  CHECK(type_of(V({9})) == P("1"));
  CHECK(type_of(V({2, 5, 8, 6})) == P("1243"));
  CHECK_THROWS_AS(type_of(V({3, 3})), InvalidInput);
}

TEST_CASE("occurrences and avoidance") {
  const auto pi = P("214538769");
  CHECK(count_occurrences(pi, P("1243")) >= 1);
  CHECK(count_occurrences(pi, P("312")) == 0);
  CHECK(count_occurrences(P("4321"), P("21")) == 6);
  CHECK(is_avoiding(pi, PatternSet::parse("312,2413")));
  CHECK(is_avoiding(pi, PatternSet{}));
  CHECK_FALSE(is_avoiding(P("1243"), PatternSet::schroeder()));
  CHECK(count_occurrences(P("12345"), P("123")) == 10);
  CHECK(count_occurrences(P("12"), P("123")) == 0);
}

TEST_CASE("occurrence counts agree with a subsequence scan") {
  // Independent scan over all index subsets.
  auto scan = [](const Permutation& pi, const Permutation& sigma) {
    const int n = pi.size();
    const int k = sigma.size();
    long count = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (__builtin_popcount(mask) != k) continue;
      std::vector<int> sub;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) sub.push_back(pi.at(i + 1));
      if (type_of(sub) == sigma) ++count;
    }
    return count;
  };
  for (const auto& sigma : {P("12"), P("132"), P("2143"), P("321")})
    for (const auto& pi : enumerate_class(6, {}))
      REQUIRE(count_occurrences(pi, sigma) == scan(pi, sigma));
}

TEST_CASE("tau on permutations") {
  const auto pi = P("71824356");
  CHECK(tau(pi, 2) == 16);
  CHECK(tau(pi, 4) == 9);
  CHECK(tau(pi, 5) == 2);
  CHECK(tau(P("54321"), 2) == 0);
  CHECK(tau(P("123456"), 3) == 20);
  CHECK(tau(pi, 0) == 0);
}

TEST_CASE("statistic vectors") {
  const auto v = stat_vector(P("71824356"), 6);
  std::vector<BigInt> want{8, 16, 16, 9, 2, 0};
  CHECK(v.values == want);
  CHECK(stat_vector(Permutation(), 3).values == std::vector<BigInt>{0, 0, 0});
  CHECK(stat_vector(P("1342"), 4).values == std::vector<BigInt>{4, 4, 1, 0});
  CHECK(v.noninversions() == 16);
  CHECK(v.total() == 8 + 16 + 16 + 9 + 2);
}

TEST_CASE("star product and prepending the maximum") {
  CHECK(star(P("3124"), P("15342")) == P("716895342"));
  CHECK(star(P("1"), P("1")) == P("12"));
  CHECK(star(P("1"), P("12")) == P("132"));
  CHECK_THROWS_AS(star(Permutation(), P("1")), InvalidInput);
  CHECK(prepend_max(P("123")) == P("4123"));
  CHECK(prepend_max(Permutation()) == P("1"));
  CHECK(prepend_max(P("15342")) == P("615342"));
  CHECK(tau(P("615342"), 2) == tau(P("15342"), 2));
}

TEST_CASE("decomposition inverts the constructions") {
  CHECK(decompose(P("716895342")) == Decomposition{StarSplit{P("3124"), P("15342")}});
  CHECK(decompose(P("4123")) == Decomposition{Prepend{P("123")}});
  CHECK(decompose(P("132")) == Decomposition{StarSplit{P("1"), P("12")}});
  CHECK_THROWS_AS(decompose(P("1243")), NotInClass);
}

TEST_CASE("star law on the class") {
  for (int n = 2; n <= 7; ++n) {
    for (int i = 1; i < n; ++i) {
      const auto left = enumerate_class(i, {}, Ambient::Schroeder);
      const auto right = enumerate_class(n - i, {}, Ambient::Schroeder);
      for (const auto& a : left) {
        for (const auto& b : right) {
          const auto s = star(a, b);
          REQUIRE(in_schroeder_class(s));
          for (int k = 1; k <= n; ++k)
            REQUIRE(tau(s, k) == tau(a, k) + tau(a, k - 1) + tau(b, k));
          REQUIRE(decompose(s) == Decomposition{StarSplit{a, b}});
        }
      }
    }
  }
}

TEST_CASE("decompose then rebuild is the identity on the class") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& pi : enumerate_class(n, {}, Ambient::Schroeder)) {
      const auto d = decompose(pi);
      if (const auto* p = std::get_if<Prepend>(&d)) {
        REQUIRE(pi.at(1) == n);
        REQUIRE(prepend_max(p->rest) == pi);
        for (int k = 1; k <= n; ++k) REQUIRE(tau(pi, k) == tau(p->rest, k) + (k == 1 ? 1 : 0));
      } else {
        const auto& s = std::get<StarSplit>(d);
        REQUIRE(star(s.left, s.right) == pi);
      }
    }
  }
}

TEST_CASE("class enumeration") {
  CHECK(enumerate_class(4, PatternSet::schroeder()).size() == 22);
  CHECK(enumerate_class(4, {}, Ambient::Schroeder).size() == 22);
  const auto empty = enumerate_class(0, PatternSet::parse("12"));
  REQUIRE(empty.size() == 1);
  CHECK(empty.front().empty());
  CHECK(enumerate_class(3, PatternSet::parse("231"), Ambient::Schroeder).size() == 5);
  CHECK_THROWS_AS(enumerate_class(13, {}), ResourceLimit);

  const auto all = enumerate_class(5, {});
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(all.size() == 120);
}

TEST_CASE("class sizes follow the Schroeder numbers") {
  // Frozen from an itertools enumeration.
  const std::vector<std::uint64_t> want{1, 1, 2, 6, 22, 90, 394, 1806, 8558};
  for (int n = 0; n <= 8; ++n) CHECK(count_class(n, {}, Ambient::Schroeder) == want[static_cast<std::size_t>(n)]);
}

TEST_CASE("tau bounds and the increasing-subsequence total") {
  for (const auto& pi : enumerate_class(6, {}, Ambient::Schroeder)) {
    BigInt total = 0;
    for (int k = 1; k <= 6; ++k) {
      REQUIRE(tau(pi, k) <= binom(6, k, BinomMode::Standard));
      total += tau(pi, k);
    }
    REQUIRE(stat_vector(pi, 6).total() == total);
  }
}
