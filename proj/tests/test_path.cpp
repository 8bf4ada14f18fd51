#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "schroeder/errors.hpp"
#include "schroeder/formulas.hpp"
#include "schroeder/path.hpp"

using namespace schroeder;

namespace {
SchroderPath S(const char* s) { return SchroderPath::parse(s); }
}  // namespace

TEST_CASE("parsing") {
  CHECK(S("NDEDNNNNDNEENEDEEE").size() == 11);
  CHECK(S("").size() == 0);
  CHECK(S("NNEDE").str() == "NNEDE");
  try {
    S("EN");
    FAIL("expected MalformedPath");
  } catch (const MalformedPath& e) {
    CHECK(e.index() == 0);
  }
  CHECK_THROWS_AS(S("NNE"), MalformedPath);
  try {
    S("NDX");
    FAIL("expected MalformedPath");
  } catch (const MalformedPath& e) {
    CHECK(e.index() == 2);
  }
}

TEST_CASE("tau on paths") {
  const auto p = S("NDEDNNNNDNEENEDEEE");
  const std::vector<BigInt> want{12, 28, 35, 24, 8, 1, 0, 0};
  CHECK(tau_vector(p, 8) == want);
  CHECK(tau(S("DDDD"), 1) == 5);
  CHECK(tau(S("DDDD"), 2) == 0);
  CHECK(tau(S(""), 1) == 1);
  CHECK(tau(S(""), 2) == 0);
}

TEST_CASE("heights") {
  CHECK(S("NDNNEEENNDENEE").step_heights() == std::vector<int>{1, 3, 2, 1, 2, 2, 2, 1});
  CHECK(S("NNEE").max_height() == 2);
  CHECK(S("DD").max_height() == 0);
}

TEST_CASE("first-return product and decomposition") {
  CHECK(first_return_product(S(""), S("")).str() == "NE");
  CHECK(first_return_product(S("D"), S("")).str() == "NDE");
  CHECK(decompose_path(S("NDE")) == PathDecomposition{FirstReturn{S("D"), S("")}});
  CHECK(decompose_path(S("DNE")) == PathDecomposition{DiagSplit{S("NE")}});
  CHECK_THROWS_AS(decompose_path(S("")), InvalidInput);
}

TEST_CASE("recursive statistic laws") {
  for (int n = 0; n <= 6; ++n) {
    for (const auto& p : enumerate_paths(n)) {
      REQUIRE(tau(p, 1) == n + 1);
      const auto d = diagonal_prepend(p);
      REQUIRE(tau(d, 1) == tau(p, 1) + 1);
      for (int k = 2; k <= n + 2; ++k) REQUIRE(tau(d, k) == tau(p, k));
    }
  }
  for (int total = 0; total <= 5; ++total) {
    for (int i = 0; i <= total; ++i) {
      for (const auto& a : enumerate_paths(i)) {
        for (const auto& b : enumerate_paths(total - i)) {
          const auto s = first_return_product(a, b);
          for (int k = 1; k <= total + 2; ++k) REQUIRE(tau(s, k) == tau(a, k) + tau(a, k - 1) + tau(b, k));
          REQUIRE(decompose_path(s) == PathDecomposition{FirstReturn{a, b}});
        }
      }
    }
  }
}

TEST_CASE("decomposition round trip") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& p : enumerate_paths(n)) {
      const auto d = decompose_path(p);
      if (const auto* diag = std::get_if<DiagSplit>(&d))
        REQUIRE(diagonal_prepend(diag->rest) == p);
      else
        REQUIRE(first_return_product(std::get<FirstReturn>(d).inner, std::get<FirstReturn>(d).rest) == p);
    }
  }
}

TEST_CASE("path enumeration") {
  CHECK(enumerate_paths(3).size() == 22);
  CHECK(enumerate_paths(0).size() == 1);
  CHECK(enumerate_paths(0).front().empty());
  for (int n = 0; n <= 8; ++n) CHECK(BigInt(static_cast<unsigned long>(enumerate_paths(n).size())) == schroder_number(n));

  std::vector<std::string> flat;
  for (const auto& p : enumerate_paths(2, 0)) flat.push_back(p.str());
  CHECK(flat == std::vector<std::string>{"DD"});
  flat.clear();
  for (const auto& p : enumerate_paths(2, 1)) flat.push_back(p.str());
  CHECK(flat == std::vector<std::string>{"DD", "DNE", "NDE", "NED", "NENE"});
  CHECK(enumerate_paths(3, 1).size() == 13);

  const auto all = enumerate_paths(5);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK_THROWS_AS(enumerate_paths(13), ResourceLimit);
}

TEST_CASE("height-bounded path polynomials") {
  CHECK(gf_between_heights(0, 0, 0, 8) == IntPoly{1, 0, 1, 0, 1, 0, 1, 0, 1});
  const auto odd = gf_between_heights(0, 1, 1, 9);
  for (int d = 0; d <= 9; d += 2) CHECK(odd[d] == 0);
  CHECK(gf_between_heights(0, 0, 8, 8) == IntPoly{1, 0, 2, 0, 6, 0, 22, 0, 90});
  CHECK_THROWS_AS(gf_between_heights(0, 3, 2, 4), InvalidInput);
}
