#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coalg/poly.hpp"

using namespace coalg::poly;

namespace {

AlgebraPtr alg_xy() {
  return std::make_shared<PolyAlgebra>(std::vector<GradedVariable>{
      {"x", {1, 0}, std::nullopt}, {"y", {0, 1}, std::nullopt}});
}

// Count of partitions of n into the given part sizes (with repetition).
std::size_t partition_count(int n, const std::vector<int>& parts) {
  std::vector<std::size_t> dp(static_cast<std::size_t>(n) + 1, 0);
  dp[0] = 1;
  for (int p : parts)
    for (int v = p; v <= n; ++v) dp[static_cast<std::size_t>(v)] += dp[static_cast<std::size_t>(v - p)];
  return dp[static_cast<std::size_t>(n)];
}

Poly random_poly(std::mt19937& rng, const PolyAlgebra& alg, int max_total) {
  auto basis = monomial_basis_upto(alg, max_total);
  std::vector<Monomial> terms;
  std::bernoulli_distribution coin(0.35);
  for (const auto& m : basis)
    if (coin(rng)) terms.push_back(m);
  return from_terms(alg, std::move(terms));
}

}  // namespace

TEST_CASE("monomial counts match partition counts for pure-degree generators") {
  // One generator in each total degree 2 and 3, no caps.
  auto alg = std::make_shared<PolyAlgebra>(std::vector<GradedVariable>{
      {"u", {1, 1}, std::nullopt}, {"v", {1, 2}, std::nullopt}});
  for (int t = 0; t <= 14; ++t)
    CHECK(monomial_basis_total(*alg, t).size() == partition_count(t, {2, 3}));
  // Spot values of the same sequence, derived by listing partitions into 2s and 3s.
  std::vector<std::size_t> expect = {1, 0, 1, 1, 1, 1, 2, 1, 2, 2, 2, 2, 3, 2, 3};
  for (int t = 0; t <= 14; ++t) CHECK(monomial_basis_total(*alg, t).size() == expect[static_cast<std::size_t>(t)]);
}

TEST_CASE("caps truncate enumeration and products") {
  auto alg = std::make_shared<PolyAlgebra>(std::vector<GradedVariable>{
      {"x1", {1, 0}, Exp(1)}, {"x2", {1, 1}, std::nullopt}});
  // Basis in total degree 3: x1 x2 and nothing else (x1^3 is capped away).
  auto b3 = monomial_basis_total(*alg, 3);
  REQUIRE(b3.size() == 1);
  CHECK(to_string(*alg, b3[0]) == "x1 x2");
  // x1^2 = 0.
  Poly x1 = Poly::variable(*alg, 0);
  CHECK(multiply(*alg, x1, x1).is_zero());
  // Bidegree enumeration sees the cap too.
  CHECK(monomial_basis(*alg, {2, 0}).empty());
  CHECK(monomial_basis(*alg, {2, 1}).size() == 1);  // x1 x2
}

TEST_CASE("mod 2 arithmetic: cancellation and the freshman's dream") {
  auto alg = alg_xy();
  Poly x = Poly::variable(*alg, 0), y = Poly::variable(*alg, 1);
  Poly s = add(*alg, x, y);
  CHECK(add(*alg, s, s).is_zero());
  Poly sq = multiply(*alg, s, s);
  Poly expect = add(*alg, multiply(*alg, x, x), multiply(*alg, y, y));
  CHECK(sq == expect);
  CHECK(to_string(*alg, sq) == "y^2 + x^2");
}

TEST_CASE("multiplication is commutative, associative, unital, distributive") {
  auto alg = alg_xy();
  std::mt19937 rng(123);
  for (int trial = 0; trial < 25; ++trial) {
    Poly p = random_poly(rng, *alg, 4), q = random_poly(rng, *alg, 4), r = random_poly(rng, *alg, 4);
    CHECK(multiply(*alg, p, q) == multiply(*alg, q, p));
    CHECK(multiply(*alg, multiply(*alg, p, q), r) == multiply(*alg, p, multiply(*alg, q, r)));
    CHECK(multiply(*alg, p, Poly::one(*alg)) == p);
    Poly lhs = multiply(*alg, p, add(*alg, q, r));
    Poly rhs = add(*alg, multiply(*alg, p, q), multiply(*alg, p, r));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("homogeneity queries") {
  auto alg = alg_xy();
  Poly x = Poly::variable(*alg, 0), y = Poly::variable(*alg, 1);
  Poly mixed = add(*alg, x, multiply(*alg, y, y));
  int t = -1;
  CHECK(!is_homogeneous_total(*alg, mixed, &t));
  BiDegree d;
  CHECK(!is_homogeneous(*alg, mixed, &d));
  Poly h = add(*alg, multiply(*alg, x, y), multiply(*alg, x, y));  // zero
  CHECK(is_homogeneous(*alg, h, &d));
  Poly xy = multiply(*alg, x, y);
  REQUIRE(is_homogeneous(*alg, xy, &d));
  CHECK(d == BiDegree{1, 1});
  REQUIRE(is_homogeneous_total(*alg, xy, &t));
  CHECK(t == 2);
}

TEST_CASE("presented algebra: quotient dimensions against hand counts") {
  auto alg = alg_xy();
  Poly xy = multiply(*alg, Poly::variable(*alg, 0), Poly::variable(*alg, 1));
  PresentedAlgebra quo(alg, {xy});
  // F2[x,y]/(xy) has basis 1, x^d, y^d: dim 1 in degree 0, else 2.
  CHECK(quo.graded_dim_total(0) == 1);
  for (int d = 1; d <= 9; ++d) CHECK(quo.graded_dim_total(d) == 2);
  CHECK(quo.graded_dim({3, 0}) == 1);
  CHECK(quo.graded_dim({2, 1}) == 0);
  auto pc = quo.poincare_coeffs(5);
  CHECK(pc == std::vector<std::size_t>{1, 2, 2, 2, 2, 2});
}

TEST_CASE("presented algebra: relation ideal vs cap gives the same dimensions") {
  auto capped = std::make_shared<PolyAlgebra>(std::vector<GradedVariable>{
      {"x", {1, 0}, Exp(1)}, {"y", {0, 1}, std::nullopt}});
  auto uncapped = alg_xy();
  Poly x = Poly::variable(*uncapped, 0);
  PresentedAlgebra quo(uncapped, {multiply(*uncapped, x, x)});
  for (int t = 0; t <= 10; ++t)
    CHECK(quo.graded_dim_total(t) == monomial_basis_total(*capped, t).size());
}

TEST_CASE("graded_dim is monotone under adding relations") {
  auto alg = alg_xy();
  Poly x = Poly::variable(*alg, 0), y = Poly::variable(*alg, 1);
  Poly r1 = multiply(*alg, x, y);
  Poly r2 = add(*alg, multiply(*alg, x, x), multiply(*alg, y, y));
  PresentedAlgebra one_rel(alg, {r1});
  PresentedAlgebra two_rel(alg, {r1, r2});
  for (int t = 0; t <= 10; ++t) CHECK(two_rel.graded_dim_total(t) <= one_rel.graded_dim_total(t));
}

TEST_CASE("monomial order is graded and deterministic") {
  auto alg = alg_xy();
  auto b = monomial_basis_upto(*alg, 3);
  for (std::size_t i = 1; i < b.size(); ++i) CHECK(mono_less(*alg, b[i - 1], b[i]));
  // Basis enumeration twice gives the identical sequence.
  auto b2 = monomial_basis_upto(*alg, 3);
  CHECK(b == b2);
  // String round trip sanity.
  auto m = make_mono(*alg, {{"x", 2}, {"y", 1}});
  CHECK(to_string(*alg, m) == "x^2 y");
  CHECK(to_string(*alg, Monomial{{0, 0}}) == "1");
}

TEST_CASE("weighted enumeration with weights differing from degree totals") {
  auto alg = alg_xy();
  // Weight x as 3 and y as 1: monomials x^a y^b with 3a + b = 6.
  auto b = monomial_basis_weighted(*alg, {3, 1}, 6, false);
  CHECK(b.size() == 3);  // y^6, x y^3, x^2
  auto upto = monomial_basis_weighted(*alg, {3, 1}, 3, true);
  // 1, y, y^2, y^3, x: five monomials of weight <= 3.
  CHECK(upto.size() == 5);
}
