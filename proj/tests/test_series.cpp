#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "schroeder/errors.hpp"
#include "schroeder/formulas.hpp"
#include "schroeder/series.hpp"
#include "schroeder/verify.hpp"

using namespace schroeder;

namespace {

constexpr int kX = 0;
constexpr int kQ = 1;

TruncSeries poly_in_x(std::initializer_list<long> coefficients, int order) {
  TruncSeries s(kX, order);
  int d = 0;
  for (long c : coefficients) s.add_term(Monomial::var(kX, d++), c);
  return s;
}

std::vector<BigRat> rats(std::initializer_list<long> v) {
  std::vector<BigRat> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("binomial conventions") {
  CHECK(binom(-1, 0, BinomMode::Extended) == 1);
  CHECK(binom(-1, 0, BinomMode::Standard) == 0);
  CHECK(binom(3, -1, BinomMode::Standard) == 0);
  CHECK(binom(3, -1, BinomMode::Extended) == 0);
  CHECK(binom(5, 2, BinomMode::Standard) == 10);
  CHECK(binom(2, 5, BinomMode::Extended) == 0);
  CHECK(binom(60, 30, BinomMode::Standard) == BigInt("118264581564861424"));
}

TEST_CASE("monomials") {
  const auto a = Monomial::var(1) * Monomial::var(2, 2);
  CHECK((a * Monomial::var(1)).exponent(1) == 2);
  CHECK((a * Monomial::var(1)).exponent(2) == 2);
  CHECK((Monomial::var(3, 2) * Monomial::var(3, -2)).is_one());
  CHECK(Monomial({{2, 1}, {1, 3}, {2, -1}}) == Monomial::var(1, 3));
  CHECK(a.pow(3).exponent(2) == 6);
  CHECK(a.str({"x", "y", "z"}) == "y z^2");
}

TEST_CASE("truncated arithmetic") {
  const auto p = poly_in_x({1, 1}, 5) * poly_in_x({1, -1}, 5);
  CHECK(p == poly_in_x({1, 0, -1}, 5));
  CHECK(p.univariate_coefficients() == rats({1, 0, -1, 0, 0, 0}));
  CHECK_THROWS_AS(poly_in_x({1}, 3) + poly_in_x({1}, 4), InvalidInput);
  CHECK_THROWS_AS(TruncSeries(kX, 3).add_term(Monomial::var(kX, -1), 1), InvalidInput);

  TruncSeries s(kX, 2);
  s.add_term(Monomial::var(kX, 3), 7);
  CHECK(s.is_zero());
}

TEST_CASE("ring axioms on random inputs") {
  std::mt19937 gen(11);
  std::uniform_int_distribution<int> coef(-3, 3);
  auto random_series = [&]() {
    TruncSeries s(kX, 4);
    for (int i = 0; i <= 4; ++i)
      for (int j = -1; j <= 2; ++j) s.add_term(Monomial::var(kX, i) * Monomial::var(kQ, j), coef(gen));
    return s;
  };
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_series();
    const auto b = random_series();
    const auto c = random_series();
    REQUIRE(a * b == b * a);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("inversion") {
  const auto inv = poly_in_x({1, -1}, 6).inverse();
  CHECK(inv.univariate_coefficients() == rats({1, 1, 1, 1, 1, 1, 1}));
  CHECK(TruncSeries::constant(2, kX, 3).inverse() == TruncSeries::constant(BigRat(1, 2), kX, 3));
  CHECK_THROWS_AS(poly_in_x({0, 1}, 3).inverse(), DomainError);

  // 1 - x - x q
  TruncSeries s = poly_in_x({1, -1}, 4);
  s.add_term(Monomial::var(kX) * Monomial::var(kQ), -1);
  const auto t = s.inverse();
  CHECK(s * t == TruncSeries::constant(1, kX, 4));
  CHECK(t.coefficient(Monomial::var(kX, 3) * Monomial::var(kQ, 2)) == 3);
  CHECK(t.coefficient(Monomial::var(kX, 4) * Monomial::var(kQ, 2)) == 6);

  std::mt19937 gen(5);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    TruncSeries r = TruncSeries::constant(coef(gen) == 0 ? 1 : 3, kX, 5);
    for (int i = 1; i <= 5; ++i)
      for (int j = -1; j <= 1; ++j) r.add_term(Monomial::var(kX, i) * Monomial::var(kQ, j), coef(gen));
    REQUIRE(r * r.inverse() == TruncSeries::constant(1, kX, 5));
  }
}

TEST_CASE("rational functions expand exactly") {
  const RationalGF x = RationalGF::x();
  const RationalGF west = RationalGF(1) + x * RationalGF(IntPoly{1, -1}) / RationalGF(IntPoly{1, -3, 1});
  CHECK(west.expand_integers(6) == std::vector<BigInt>{1, 1, 2, 5, 13, 34, 89});

  const RationalGF g231 = RationalGF(1) + RationalGF(IntPoly{0, 1, -2, 1}, IntPoly{1, -4, 4});
  CHECK(g231.expand_integers(5) == std::vector<BigInt>{1, 1, 2, 5, 12, 28});

  CHECK(RationalGF(IntPoly{1}, IntPoly{1, -1}).expand_integers(4) == std::vector<BigInt>{1, 1, 1, 1, 1});
  CHECK(RationalGF(IntPoly{1}, IntPoly{2}).expand(1) == std::vector<BigRat>{BigRat(1, 2), BigRat(0)});
  CHECK_THROWS_AS(RationalGF(IntPoly{1}, IntPoly{0, 1}), DomainError);
  CHECK_THROWS_AS(RationalGF(IntPoly{1}, IntPoly{}), DomainError);
  CHECK_THROWS_AS(RationalGF(IntPoly{1}, IntPoly{2}).expand_integers(0), DomainError);
}

TEST_CASE("rational normalization and equality") {
  const RationalGF a(IntPoly{0, 2, 4}, IntPoly{0, -2});
  CHECK(a.num() == IntPoly{-1, -2});
  CHECK(a.den() == IntPoly{1});
  CHECK(RationalGF(IntPoly{1, 1}, IntPoly{1, -1}) == RationalGF(IntPoly{2, 2}, IntPoly{2, -2}));
  CHECK(RationalGF(IntPoly{1, 1}, IntPoly{1, -1}) == RationalGF(IntPoly{1, 2, 1}, IntPoly{1, 0, -1}));
  CHECK_THROWS_AS(RationalGF(1) / RationalGF(), DomainError);
}

TEST_CASE("expansion times denominator gives the numerator") {
  const RationalGF f(IntPoly{3, -1, 4, 1}, IntPoly{2, 5, -7});
  const auto c = f.expand(10);
  for (int n = 0; n <= 10; ++n) {
    BigRat acc = 0;
    for (int i = 0; i <= std::min(n, f.den().degree()); ++i) acc += BigRat(f.den()[i]) * c[static_cast<std::size_t>(n - i)];
    REQUIRE(acc == BigRat(f.num()[n]));
  }
}

TEST_CASE("finite continued fractions") {
  const RationalGF x = RationalGF::x();
  const RationalGF one_minus_x = RationalGF(1) - x;
  CHECK(RationalGF(1) + eval_finite_cf({{x, one_minus_x}}) == RationalGF(IntPoly{1}, IntPoly{1, -1}));
  const RationalGF two = RationalGF(1) + eval_finite_cf({{x, one_minus_x}, {-x, one_minus_x}});
  CHECK(two == RationalGF(1) + x * RationalGF(IntPoly{1, -1}) / RationalGF(IntPoly{1, -3, 1}));
  CHECK_THROWS_AS(eval_finite_cf({}), InvalidInput);
  CHECK_THROWS_AS(eval_finite_cf({{x, RationalGF()}}), DomainError);
  CHECK_THROWS_AS(eval_finite_cf({{x, -x}, {x, RationalGF(1)}}), DomainError);

  for (int k = 2; k <= 8; ++k) {
    std::vector<CfLevel> levels{{x, one_minus_x}};
    for (int i = 1; i < k - 1; ++i) levels.push_back({-x, one_minus_x});
    REQUIRE(RationalGF(1) + eval_finite_cf(levels) == gf_avoid_12k(k));
  }
}

TEST_CASE("Schroeder continued fraction expansion") {
  const auto s = eval_schroder_cf([](int) { return Monomial::var(kX); }, 6, 6, kX);
  CHECK(s.univariate_coefficients() == rats({1, 1, 2, 6, 22, 90, 394}));
  CHECK_THROWS_AS(eval_schroder_cf([](int) { return Monomial::var(kQ); }, 3, 3, kX), InvalidInput);

  const auto shallow = tau_fraction(4, 6, 6);
  CHECK(shallow == tau_fraction(4, 6, 9));
  CHECK(shallow == tau_series(4, 6));
  // Specialization x_1 = x and x_i = 1 recovers the class sizes.
  std::vector<BigRat> by_length(7, BigRat(0));
  for (const auto& [m, c] : shallow.terms()) by_length[static_cast<std::size_t>(m.exponent(1))] += c;
  CHECK(by_length == rats({1, 1, 2, 6, 22, 90, 394}));
}

TEST_CASE("increasing subsequence specializations") {
  // Frozen from an itertools enumeration of S_n(1243, 2143), n <= 5.
  const auto m = increasing_subsequence_fraction(5, 5);
  auto coeff = [&](long n, long e) { return m.coefficient(Monomial({{0, n}, {1, e}})); };
  CHECK(coeff(3, 3) == 1);
  CHECK(coeff(3, 4) == 2);
  CHECK(coeff(3, 5) == 2);
  CHECK(coeff(3, 7) == 1);
  CHECK(coeff(4, 6) == 5);
  CHECK(coeff(4, 15) == 1);
  CHECK(coeff(5, 8) == 12);
  CHECK(coeff(5, 31) == 1);
  CHECK(m == increasing_subsequence_series(5));

  const auto q = length_plus_noninversions_fraction(5, 5);
  CHECK(q.univariate_coefficients() == rats({1, 1, 1, 2, 3, 6}));
  CHECK(q == length_plus_noninversions_series(5));
}
