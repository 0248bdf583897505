#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <vector>

#include "coalg/models.hpp"
#include "coalg/toda.hpp"

using namespace coalg;
using namespace coalg::models;
using namespace coalg::toda;
using hopf::ComoduleAlgebra;
using hopf::Flavor;
using poly::BiDegree;
using poly::Exp;
using poly::Monomial;
using poly::Poly;

namespace {

Poly gen(const ComoduleAlgebra& ca, const std::string& name) {
  long i = ca.algebra()->index_of(name);
  REQUIRE(i >= 0);
  return Poly::variable(*ca.algebra(), static_cast<std::size_t>(i));
}

Poly pb(const ComoduleAlgebra& ca,
        const std::vector<std::vector<std::pair<std::string, Exp>>>& monos) {
  std::vector<Monomial> ms;
  for (const auto& spec : monos) ms.push_back(poly::make_mono(*ca.algebra(), spec));
  return poly::from_terms(*ca.algebra(), std::move(ms));
}

// Rank of a finite set of polynomials, all living in one bidegree.
std::size_t rank_of(const ComoduleAlgebra& ca, BiDegree d, const std::vector<Poly>& ps) {
  auto mons = poly::monomial_basis(*ca.algebra(), d);
  std::map<Monomial, std::size_t, bool (*)(const Monomial&, const Monomial&)> idx(
      [](const Monomial& x, const Monomial& y) { return x.e < y.e; });
  for (std::size_t i = 0; i < mons.size(); ++i) idx.emplace(mons[i], i);
  gf2::BitMatrix m(ps.size(), mons.size());
  for (std::size_t r = 0; r < ps.size(); ++r)
    for (const auto& t : ps[r].terms()) m.set(r, idx.at(t));
  return gf2::rank(m);
}

BiDegree deg_of(const ComoduleAlgebra& ca, const Poly& p) {
  BiDegree d{0, 0};
  REQUIRE(poly::is_homogeneous(*ca.algebra(), p, &d));
  return d;
}

std::size_t pq_dim(const ComoduleAlgebra& ca, const SharpElement& sh, BiDegree d) {
  return pq_basis(ca, sh, d).size();
}

}  // namespace

TEST_CASE("sharp elements of the catalog models are found with their minimal index") {
  auto gl6 = make_gl(6);
  auto sh = find_sharp(gl6, 16);
  REQUIRE(sh.has_value());
  CHECK(sh->q == 2);
  CHECK(sh->element == gen(gl6, "c2"));

  auto gl2 = make_gl(2);
  auto sh2 = find_sharp(gl2, 16);
  REQUIRE(sh2.has_value());
  CHECK(sh2->q == 2);
  CHECK(sh2->element == gen(gl2, "c2"));

  // For width 4 the quadratic candidates all fail and the top generator
  // steps in at index 4.
  auto gl4 = make_gl(4);
  auto sh4 = find_sharp(gl4, 16);
  REQUIRE(sh4.has_value());
  CHECK(sh4->q == 4);
  CHECK(sh4->element == gen(gl4, "c4"));
  CHECK_FALSE(find_sharp(gl4, 2).has_value());

  auto so6 = make_so(6);
  auto shs = find_sharp(so6, 16);
  REQUIRE(shs.has_value());
  CHECK(shs->q == 2);
  CHECK(shs->element == gen(so6, "u2"));

  auto o6 = make_o(6);
  auto sho = find_sharp(o6, 16);
  REQUIRE(sho.has_value());
  CHECK(sho->q == 2);
  CHECK(sho->element == gen(o6, "u2"));

  auto sp6 = make_sp(6);
  auto shp = find_sharp(sp6, 16);
  REQUIRE(shp.has_value());
  CHECK(shp->q == 4);
  CHECK(shp->element == gen(sp6, "q1"));

  auto gm = make_model("gm");
  auto shg = find_sharp(gm, 16);
  REQUIRE(shg.has_value());
  CHECK(shg->q == 1);

  auto mu2 = make_model("mu2");
  auto shm = find_sharp(mu2, 16);
  REQUIRE(shm.has_value());
  CHECK(shm->q == 2);

  CHECK_FALSE(find_sharp(make_model("trivial:lambda1"), 16).has_value());
}

TEST_CASE("a sharp element maps to 1 under its own operator and kills the higher ones") {
  for (const char* id : {"gl:6", "so:6", "sp:6", "gl:4"}) {
    auto ca = make_model(id);
    auto sh = find_sharp(ca, 16);
    REQUIRE(sh.has_value());
    INFO(id);
    CHECK(ca.d_op(sh->q, sh->element) == Poly::one(*ca.algebra()));
    CHECK(max_d_index(ca, sh->element) == sh->q);
    CHECK(in_pq(ca, 2 * sh->q, sh->element));
    CHECK_FALSE(in_pq(ca, sh->q, sh->element));
  }
}

TEST_CASE("pq_basis reproduces the hand-computed low-degree pieces") {
  auto gl6 = make_gl(6);
  auto sh = *find_sharp(gl6, 16);

  auto b00 = pq_basis(gl6, sh, {0, 0});
  REQUIRE(b00.size() == 1);
  CHECK(b00[0] == Poly::one(*gl6.algebra()));

  // (1,1): c1 is primitive and survives.
  auto b11 = pq_basis(gl6, sh, {1, 1});
  REQUIRE(b11.size() == 1);
  CHECK(b11[0] == gen(gl6, "c1"));

  // (2,2): c2 falls out, only c1^2 is annihilated by every d_i with i >= 2.
  auto b22 = pq_basis(gl6, sh, {2, 2});
  REQUIRE(b22.size() == 1);
  CHECK(b22[0] == pb(gl6, {{{"c1", 2}}}));

  // (4,4): three dimensions, containing the canonical lift of c4.
  auto b44 = pq_basis(gl6, sh, {4, 4});
  CHECK(b44.size() == 3);
  Poly bar4 = pb(gl6, {{{"c4", 1}}, {{"c2", 2}}, {{"c1", 2}, {"c2", 1}}});
  CHECK(in_pq(gl6, sh.q, bar4));

  // Off-diagonal bidegrees of a weight-graded algebra are empty.
  CHECK(pq_basis(gl6, sh, {1, 2}).empty());

  auto so6 = make_so(6);
  auto shs = *find_sharp(so6, 16);
  auto s12 = pq_basis(so6, shs, {1, 2});
  REQUIRE(s12.size() == 1);
  CHECK(s12[0] == gen(so6, "u3"));
  CHECK(pq_basis(so6, shs, {1, 1}).empty());

  // Index bound below the sharp index rejects.
  CHECK_THROWS_AS(pq_basis(gl6, SharpElement{gen(gl6, "c2"), 3}, BiDegree{2, 2}),
                  std::invalid_argument);
}

TEST_CASE("pq_basis_total collects the diagonal pieces") {
  auto gl6 = make_gl(6);
  auto sh = *find_sharp(gl6, 16);
  auto t4 = pq_basis_total(gl6, sh, 4);
  REQUIRE(t4.size() == 1);
  CHECK(t4[0] == pb(gl6, {{{"c1", 2}}}));

  auto table = pq_basis_table(gl6, sh, 8);
  CHECK(table.q == 2);
  CHECK(table.basis.at({2, 2}).size() == 1);
  CHECK(table.basis.at({4, 4}).size() == 3);
}

TEST_CASE("the whole algebra decomposes as powers of the sharp element times P_q") {
  // dim A(D) = sum_j dim P_q(D - j * deg(sharp)) in every bidegree.
  for (const char* id : {"gl:6", "so:6", "sp:6"}) {
    auto ca = make_model(id);
    auto sh = *find_sharp(ca, 16);
    BiDegree step = deg_of(ca, sh.element);
    for (int a = 0; a <= 10; ++a)
      for (int b = 0; a + b <= 10; ++b) {
        BiDegree d{a, b};
        std::size_t lhs = poly::monomial_basis(*ca.algebra(), d).size();
        std::size_t rhs = 0;
        BiDegree cur = d;
        while (cur.a >= 0 && cur.b >= 0) {
          rhs += pq_dim(ca, sh, cur);
          cur = {cur.a - step.a, cur.b - step.b};
        }
        INFO(id << " at (" << a << "," << b << ")");
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("P_q meets the principal ideal of the sharp element only in zero") {
  auto gl6 = make_gl(6);
  auto sh = *find_sharp(gl6, 16);
  for (int t = 1; t <= 6; ++t) {
    for (const auto& p : pq_basis(gl6, sh, {t, t})) {
      INFO("total " << 2 * t);
      CHECK_FALSE(in_principal_ideal(gl6, sh.element, p));
    }
  }
}

TEST_CASE("canonical_lift reproduces the printed lift values") {
  auto gl6 = make_gl(6);
  auto sh = *find_sharp(gl6, 16);

  Poly bar4 = canonical_lift(gl6, sh, gen(gl6, "c4"));
  CHECK(bar4 == pb(gl6, {{{"c4", 1}}, {{"c2", 2}}, {{"c1", 2}, {"c2", 1}}}));

  // c3 is already primitive here, so it is its own lift.
  CHECK(gl6.is_primitive(gen(gl6, "c3")));
  CHECK(canonical_lift(gl6, sh, gen(gl6, "c3")) == gen(gl6, "c3"));

  // The sharp element itself peels away completely.
  CHECK(canonical_lift(gl6, sh, gen(gl6, "c2")).is_zero());
  CHECK(canonical_lift(gl6, sh, pb(gl6, {{{"c1", 1}, {"c2", 1}}})).is_zero());

  auto so6 = make_so(6);
  auto shs = *find_sharp(so6, 16);
  CHECK(canonical_lift(so6, shs, gen(so6, "u4")) == pb(so6, {{{"u4", 1}}, {{"u2", 2}}}));
  CHECK(canonical_lift(so6, shs, gen(so6, "u6")) ==
        pb(so6, {{{"u6", 1}}, {{"u2", 1}, {"u4", 1}}}));

  CHECK_THROWS_AS(canonical_lift(gl6, sh, pb(gl6, {{{"c1", 1}}, {{"c2", 1}}})),
                  std::invalid_argument);
}

TEST_CASE("canonical_lift lands in P_q, fixes P_q, and preserves the residue class") {
  auto gl6 = make_gl(6);
  auto sh = *find_sharp(gl6, 16);
  for (const char* name : {"c3", "c4", "c5", "c6"}) {
    Poly v = gen(gl6, name);
    Poly lift = canonical_lift(gl6, sh, v);
    INFO(name);
    CHECK(in_pq(gl6, sh.q, lift));
    CHECK(canonical_lift(gl6, sh, lift) == lift);
    Poly diff = poly::add(*gl6.algebra(), lift, v);
    if (!diff.is_zero()) CHECK(in_principal_ideal(gl6, sh.element, diff));
  }
  // Idempotence on a whole basis slice.
  for (const auto& p : pq_basis(gl6, sh, {5, 5}))
    CHECK(canonical_lift(gl6, sh, p) == p);
}

TEST_CASE("peeling rejects an element that fails the defining identities") {
  auto gl6 = make_gl(6);
  // c1 has d_2(c1) = 0, so peeling c2 against it cannot make progress.
  SharpElement bogus{gen(gl6, "c1"), 2};
  CHECK_THROWS_AS(canonical_lift(gl6, bogus, gen(gl6, "c2")), std::invalid_argument);
}

TEST_CASE("star is the plain product on P_2 for the two-variable coefficient ring") {
  auto so6 = make_so(6);
  auto sh = *find_sharp(so6, 16);
  Poly u3 = gen(so6, "u3");
  Poly bar4 = canonical_lift(so6, sh, gen(so6, "u4"));
  CHECK(star(so6, sh, u3, bar4) == poly::multiply(*so6.algebra(), u3, bar4));
  CHECK(in_pq(so6, 2, star(so6, sh, bar4, bar4)));
}

TEST_CASE("star twists the product by the derivation square over one variable") {
  auto gl6 = make_gl(6);
  auto sh = *find_sharp(gl6, 16);
  const auto& A = *gl6.algebra();
  Poly bar4 = canonical_lift(gl6, sh, gen(gl6, "c4"));
  Poly bar6 = canonical_lift(gl6, sh, gen(gl6, "c6"));
  Poly bar3 = gl6.d_op(1, bar4);
  Poly bar5 = gl6.d_op(1, bar6);

  // a * b = ab + d1(a) d1(b) sharp.
  Poly expect = poly::add(A, poly::multiply(A, bar4, bar4),
                          poly::multiply(A, poly::multiply(A, bar3, bar3), sh.element));
  CHECK(star(gl6, sh, bar4, bar4) == expect);

  // Unit and primitive factors reduce to the plain product.
  CHECK(star(gl6, sh, bar4, Poly::one(A)) == bar4);
  Poly c1 = gen(gl6, "c1");
  CHECK(star(gl6, sh, c1, bar4) == poly::multiply(A, c1, bar4));

  // Every star product stays inside P_2.
  for (const Poly& x : {bar3, bar4, bar5, bar6}) {
    CHECK(in_pq(gl6, 2, star(gl6, sh, x, bar4)));
  }

  // Associativity on a sample.
  CHECK(star(gl6, sh, star(gl6, sh, bar4, bar4), bar6) ==
        star(gl6, sh, bar4, star(gl6, sh, bar4, bar6)));

  // The deviation of d1 from being a star derivation is d1(a) d1(b) d1(sharp lift ...):
  // d1(a*b) + d1(a)*b + a*d1(b) = d1(a) d1(b) a1 with a1 = d1 of the degree-1 lift.
  Poly a1 = gl6.d_op(1, canonical_lift(gl6, sh, sh.element));
  CHECK(a1.is_zero());  // the sharp element lifts to zero, so a1 comes from c2 itself
  a1 = gl6.d_op(1, sh.element);
  CHECK(a1 == c1);
  for (const auto& [x, y] : std::vector<std::pair<Poly, Poly>>{
           {bar4, bar4}, {bar4, bar6}, {bar3, bar4}, {bar5, bar6}}) {
    Poly lhs = gl6.d_op(1, star(gl6, sh, x, y));
    lhs = poly::add(A, lhs, star(gl6, sh, gl6.d_op(1, x), y));
    lhs = poly::add(A, lhs, star(gl6, sh, x, gl6.d_op(1, y)));
    Poly rhs = poly::multiply(A, poly::multiply(A, gl6.d_op(1, x), gl6.d_op(1, y)), a1);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("star rejects operands outside P_2 and sharps of other index") {
  auto gl6 = make_gl(6);
  auto sh = *find_sharp(gl6, 16);
  CHECK_THROWS_AS(star(gl6, sh, gen(gl6, "c2"), gen(gl6, "c1")), std::invalid_argument);

  auto sp6 = make_sp(6);
  auto shp = *find_sharp(sp6, 16);
  CHECK_THROWS_AS(star(sp6, shp, Poly::one(*sp6.algebra()), Poly::one(*sp6.algebra())),
                  std::invalid_argument);
}

TEST_CASE("d1 restricts to P_2 and squares to zero there") {
  for (const char* id : {"gl:6", "so:6"}) {
    auto ca = make_model(id);
    auto sh = *find_sharp(ca, 16);
    for (int a = 0; a <= 5; ++a)
      for (int b = 0; a + b <= 8; ++b)
        for (const auto& p : pq_basis(ca, sh, {a, b})) {
          Poly im = ca.d_op(1, p);
          INFO(id << " (" << a << "," << b << ")");
          if (!im.is_zero()) CHECK(in_pq(ca, 2, im));
          CHECK(ca.d_op(1, im).is_zero());
        }
  }
}

TEST_CASE("d1 cohomology of P_2 matches a polynomial ring on the quadratic classes") {
  auto so6 = make_so(6);
  auto shs = *find_sharp(so6, 16);
  auto hs = d1_cohomology(so6, shs, 14);
  // Free commutative on classes in totals 8 and 12: only the empty product fits below 16.
  for (int t = 0; t <= 14; ++t) {
    std::size_t want = (t == 0 || t == 8 || t == 12) ? 1 : 0;
    INFO("total " << t);
    CHECK(hs.at(t) == want);
  }

  auto gl6 = make_gl(6);
  auto shg = *find_sharp(gl6, 16);
  auto hg = d1_cohomology(gl6, shg, 24);
  // Free commutative on classes in totals 2, 16, 24.
  for (int t = 0; t <= 24; ++t) {
    std::size_t want = 0;
    for (int x = 0; 2 * x <= t; ++x)
      for (int y = 0; 2 * x + 16 * y <= t; ++y)
        if ((t - 2 * x - 16 * y) % 24 == 0) ++want;
    INFO("total " << t);
    CHECK(hg.at(t) == want);
  }

  auto sp6 = make_sp(6);
  auto shp = *find_sharp(sp6, 16);
  CHECK_THROWS_AS(d1_cohomology(sp6, shp, 8), std::invalid_argument);
}

TEST_CASE("d1 cohomology handles degenerate comodules") {
  // Over the full coefficient ring the exterior generator bounds, killing everything.
  auto mu2 = make_model("mu2");
  auto shm = *find_sharp(mu2, 16);
  auto hm = d1_cohomology(mu2, shm, 6);
  for (int t = 0; t <= 6; ++t) CHECK(hm.at(t) == 0);

  // The smallest orthogonal model has P_2 = F2.
  auto so2 = make_so(2);
  auto sh2 = *find_sharp(so2, 16);
  auto h2 = d1_cohomology(so2, sh2, 6);
  CHECK(h2.at(0) == 1);
  for (int t = 1; t <= 6; ++t) CHECK(h2.at(t) == 0);
}

TEST_CASE("bar generators carry the printed lift values for width six") {
  auto gl6 = make_gl(6);
  auto sh = *find_sharp(gl6, 16);
  auto bars = bar_generators(gl6, sh);
  REQUIRE(bars.indices == std::vector<int>{1, 2, 3, 4, 5, 6});
  CHECK(bars.lift.at(1) == gen(gl6, "c1"));
  CHECK(bars.lift.at(2) == gen(gl6, "c2"));
  CHECK(bars.lift.at(3) == pb(gl6, {{{"c3", 1}}, {{"c1", 3}}}));
  CHECK(bars.lift.at(4) == pb(gl6, {{{"c4", 1}}, {{"c2", 2}}, {{"c1", 2}, {"c2", 1}}}));
  CHECK(bars.lift.at(5) ==
        pb(gl6, {{{"c5", 1}}, {{"c2", 1}, {"c3", 1}}, {{"c1", 1}, {"c4", 1}},
                 {{"c1", 2}, {"c3", 1}}}));
  CHECK(bars.lift.at(6) ==
        pb(gl6, {{{"c6", 1}}, {{"c2", 1}, {"c4", 1}}, {{"c1", 1}, {"c2", 1}, {"c3", 1}}}));

  auto so6 = make_so(6);
  auto shs = *find_sharp(so6, 16);
  auto sbars = bar_generators(so6, shs);
  REQUIRE(sbars.indices == std::vector<int>{2, 3, 4, 5, 6});
  CHECK(sbars.lift.at(2) == gen(so6, "u2"));
  CHECK(sbars.lift.at(3) == gen(so6, "u3"));
  CHECK(sbars.lift.at(4) == pb(so6, {{{"u4", 1}}, {{"u2", 2}}}));
  CHECK(sbars.lift.at(5) == pb(so6, {{{"u5", 1}}, {{"u2", 1}, {"u3", 1}}}));
  CHECK(sbars.lift.at(6) == pb(so6, {{{"u6", 1}}, {{"u2", 1}, {"u4", 1}}}));
}

TEST_CASE("bar generators satisfy the membership and pairing clauses") {
  auto gl6 = make_gl(6);
  auto sh = *find_sharp(gl6, 16);
  auto bars = bar_generators(gl6, sh);
  const auto& A = *gl6.algebra();
  for (int idx : bars.indices) {
    if (bars.lift.at(idx) == sh.element) continue;
    INFO("index " << idx);
    CHECK(in_pq(gl6, 2, bars.lift.at(idx)));
    if (idx % 2 == 0) {
      Poly diff = poly::add(A, bars.lift.at(idx), gen(gl6, bars.name.at(idx)));
      if (!diff.is_zero()) CHECK(in_principal_ideal(gl6, sh.element, diff));
    }
  }
  // Odd lifts are d1 of the even partner above them.
  CHECK(bars.lift.at(3) == gl6.d_op(1, bars.lift.at(4)));
  CHECK(bars.lift.at(5) == gl6.d_op(1, bars.lift.at(6)));
  CHECK(bars.lift.at(1) == gl6.d_op(1, bars.lift.at(2)));

  // Two-variable coefficients: every lift is congruent to its generator.
  auto so6 = make_so(6);
  auto shs = *find_sharp(so6, 16);
  auto sbars = bar_generators(so6, shs);
  const auto& S = *so6.algebra();
  for (int idx : sbars.indices) {
    if (sbars.lift.at(idx) == shs.element) continue;
    Poly diff = poly::add(S, sbars.lift.at(idx), gen(so6, sbars.name.at(idx)));
    INFO("index " << idx);
    if (!diff.is_zero()) CHECK(in_principal_ideal(so6, shs.element, diff));
  }
  CHECK(sbars.lift.at(3) == so6.d_op(1, sbars.lift.at(4)));
  CHECK(sbars.lift.at(5) == so6.d_op(1, sbars.lift.at(6)));
}

TEST_CASE("perturbing a lift breaks exactly one of the two defining clauses") {
  auto gl6 = make_gl(6);
  auto sh = *find_sharp(gl6, 16);
  const auto& A = *gl6.algebra();
  Poly bar4 = canonical_lift(gl6, sh, gen(gl6, "c4"));

  // Within P_2 of the right degree, exactly one combination hits the residue
  // class of c4, and it is the canonical lift.
  auto b44 = pq_basis(gl6, sh, {4, 4});
  std::size_t hits = 0;
  for (std::size_t mask = 1; mask < (std::size_t(1) << b44.size()); ++mask) {
    Poly cand = Poly::zero();
    for (std::size_t i = 0; i < b44.size(); ++i)
      if (mask >> i & 1) cand = poly::add(A, cand, b44[i]);
    Poly diff = poly::add(A, cand, gen(gl6, "c4"));
    if (!diff.is_zero() && in_principal_ideal(gl6, sh.element, diff)) {
      ++hits;
      CHECK(cand == bar4);
    }
  }
  CHECK(hits == 1);  // the lift is the unique P_2 member of its residue class

  // Adding an ideal element keeps the residue class but leaves P_2.
  Poly bad = poly::add(A, bar4, poly::multiply(A, sh.element, sh.element));
  CHECK_FALSE(in_pq(gl6, 2, bad));
  Poly diff = poly::add(A, bad, gen(gl6, "c4"));
  CHECK(in_principal_ideal(gl6, sh.element, diff));
}

TEST_CASE("bar generators reject index-4 sharps and colliding generator names") {
  auto sp6 = make_sp(6);
  auto shp = *find_sharp(sp6, 16);
  CHECK_THROWS_AS(bar_generators(sp6, shp), std::invalid_argument);

  auto o2p = make_o2_power(2);
  auto sho = find_sharp(o2p, 16);
  REQUIRE(sho.has_value());
  CHECK(sho->q == 2);
  CHECK_THROWS_AS(bar_generators(o2p, *sho), std::invalid_argument);
}

TEST_CASE("the quadratic classes match their defining polynomials and are primitive") {
  auto gl6 = make_gl(6);
  auto sh = *find_sharp(gl6, 16);
  auto bars = bar_generators(gl6, sh);
  const auto& A = *gl6.algebra();

  for (int h : {2, 3}) {
    Poly even = bars.lift.at(2 * h);
    Poly odd = bars.lift.at(2 * h - 1);
    Poly expect = poly::add(A, poly::multiply(A, even, even),
                            poly::multiply(A, poly::multiply(A, odd, odd), sh.element));
    expect = poly::add(A, expect,
                       poly::multiply(A, poly::multiply(A, bars.lift.at(1), even), odd));
    Poly b = build_b(gl6, sh, bars, h);
    INFO("h = " << h);
    CHECK(b == expect);
    CHECK(gl6.is_primitive(b));
    CHECK(deg_of(gl6, b) == BiDegree{4 * h, 4 * h});
  }

  auto so6 = make_so(6);
  auto shs = *find_sharp(so6, 16);
  auto sbars = bar_generators(so6, shs);
  const auto& S = *so6.algebra();
  Poly b2 = build_b(so6, shs, sbars, 2);
  CHECK(b2 == pb(so6, {{{"u4", 2}}, {{"u2", 4}}}));
  Poly b3 = build_b(so6, shs, sbars, 3);
  CHECK(b3 == poly::multiply(S, sbars.lift.at(6), sbars.lift.at(6)));
  CHECK(so6.is_primitive(b2));
  CHECK(so6.is_primitive(b3));
  CHECK(deg_of(so6, b2) == BiDegree{4, 4});

  CHECK_THROWS_AS(build_b(gl6, sh, bars, 1), std::out_of_range);
  CHECK_THROWS_AS(build_b(gl6, sh, bars, 4), std::out_of_range);
}

TEST_CASE("the odd-degree classes come from d1 of star products of even lifts") {
  auto gl6 = make_gl(6);
  auto sh = *find_sharp(gl6, 16);
  auto bars = bar_generators(gl6, sh);
  const auto& A = *gl6.algebra();

  CHECK(build_y(gl6, sh, bars, {}).is_zero());
  CHECK(build_y(gl6, sh, bars, {2}) == bars.lift.at(3));
  CHECK(build_y(gl6, sh, bars, {3}) == bars.lift.at(5));

  Poly y23 = build_y(gl6, sh, bars, {2, 3});
  Poly prod = star(gl6, sh, bars.lift.at(4), bars.lift.at(6));
  CHECK(y23 == gl6.d_op(1, prod));
  CHECK(gl6.is_primitive(y23));
  CHECK(deg_of(gl6, y23) == BiDegree{9, 9});

  auto so6 = make_so(6);
  auto shs = *find_sharp(so6, 16);
  auto sbars = bar_generators(so6, shs);
  CHECK(build_y(so6, shs, sbars, {2}) == gen(so6, "u3"));
  CHECK(build_y(so6, shs, sbars, {3}) == pb(so6, {{{"u5", 1}}, {{"u2", 1}, {"u3", 1}}}));
  Poly sy23 = build_y(so6, shs, sbars, {2, 3});
  CHECK(sy23 == pb(so6, {{{"u4", 1}, {"u5", 1}},
                         {{"u3", 1}, {"u6", 1}},
                         {{"u2", 2}, {"u5", 1}},
                         {{"u2", 3}, {"u3", 1}}}));
  CHECK(so6.is_primitive(sy23));
  CHECK(deg_of(so6, sy23) == BiDegree{4, 5});

  CHECK_THROWS_AS(build_y(gl6, sh, bars, {1}), std::out_of_range);
  CHECK_THROWS_AS(build_y(gl6, sh, bars, {2, 2}), std::out_of_range);
  CHECK_THROWS_AS(build_y(gl6, sh, bars, {3, 2}), std::out_of_range);
  CHECK_THROWS_AS(build_y(gl6, sh, bars, {5}), std::out_of_range);
}

TEST_CASE("star monomials in the non-sharp lifts span P_2 piece by piece") {
  auto gl6 = make_gl(6);
  auto sh = *find_sharp(gl6, 16);
  auto bars = bar_generators(gl6, sh);

  // Generators c1-bar, c3-bar, ..., c6-bar with diagonal bidegrees 1,3,4,5,6.
  std::vector<int> degs;
  std::vector<Poly> gens;
  for (int idx : bars.indices) {
    if (bars.lift.at(idx) == sh.element) continue;
    degs.push_back(idx);
    gens.push_back(bars.lift.at(idx));
  }

  for (int t = 0; t <= 8; ++t) {
    // Enumerate multisets of generator degrees summing to t.
    std::vector<Poly> prods;
    std::vector<std::size_t> pick;
    auto rec = [&](auto&& self, int rem, std::size_t from) -> void {
      if (rem == 0) {
        Poly acc = Poly::one(*gl6.algebra());
        for (std::size_t g : pick) acc = star(gl6, sh, acc, gens[g]);
        prods.push_back(acc);
        return;
      }
      for (std::size_t g = from; g < gens.size(); ++g)
        if (degs[g] <= rem) {
          pick.push_back(g);
          self(self, rem - degs[g], g);
          pick.pop_back();
        }
    };
    rec(rec, t, 0);
    std::size_t dim = pq_dim(gl6, sh, {t, t});
    INFO("total " << 2 * t << ": " << prods.size() << " star monomials, dim " << dim);
    CHECK(prods.size() == dim);
    if (!prods.empty()) CHECK(rank_of(gl6, {t, t}, prods) == dim);
  }
}

TEST_CASE("relation verification substitutes images and reports residues") {
  auto gl6 = make_gl(6);
  poly::PolyAlgebra pres({{"p", {1, 1}, {}}, {"q", {2, 2}, {}}, {"r", {3, 3}, {}}});
  Poly p = Poly::variable(pres, 0), q = Poly::variable(pres, 1), r = Poly::variable(pres, 2);
  Poly rel = poly::add(pres, poly::multiply(pres, p, p), q);

  std::map<std::string, Poly> images{{"p", gen(gl6, "c1")},
                                     {"q", pb(gl6, {{{"c1", 2}}})}};
  Report good = verify_relations(pres, {rel}, images, gl6);
  CHECK(good.ok());

  images["q"] = gen(gl6, "c2");
  Report bad = verify_relations(pres, {rel}, images, gl6);
  CHECK_FALSE(bad.ok());
  REQUIRE(bad.lines.size() == 1);
  CHECK(bad.lines[0].detail.find("residue") != std::string::npos);

  // A relation touching a class with no image is reported as skipped, not failed.
  Report skipped = verify_relations(pres, {poly::multiply(pres, r, p)}, images, gl6);
  CHECK(skipped.ok());
  REQUIRE(skipped.lines.size() == 1);
  CHECK(skipped.lines[0].detail.find("skipped") != std::string::npos);

  Report empty = verify_relations(pres, {}, images, gl6);
  CHECK(empty.ok());
}

TEST_CASE("the presented relations hold among the constructed classes") {
  for (int m : {0, 1}) {
    for (const char* fam : {"pgl", "pso"}) {
      Report r = verify_family_relations(fam, m);
      INFO(fam << " m=" << m);
      for (const auto& line : r.lines) {
        INFO(line.what << (line.detail.empty() ? "" : (": " + line.detail)));
        CHECK(line.ok);
      }
      CHECK(r.ok());
    }
  }
  CHECK_THROWS_AS(verify_family_relations("psl", 1), std::invalid_argument);
  CHECK_THROWS_AS(verify_family_relations("pgl", -1), std::invalid_argument);
}

TEST_CASE("compute_structure assembles the full package when the index is 2") {
  auto st = compute_structure(make_gl(6));
  CHECK(st.sharp.q == 2);
  CHECK(st.bars.indices.size() == 6);
  REQUIRE(st.b.size() == 2);
  CHECK(st.b[0].first == "b2");
  CHECK(st.b[1].first == "b3");
  REQUIRE(st.y.size() == 3);
  CHECK(st.y[0].first == "y2");
  CHECK(st.y[1].first == "y3");
  CHECK(st.y[2].first == "y23");
  CHECK(st.y[2].second == build_y(make_gl(6), st.sharp, st.bars, {2, 3}));

  auto stso = compute_structure(make_so(6));
  CHECK(stso.b.size() == 2);
  CHECK(stso.y.size() == 3);

  // Index-4 sharps stop after the sharp element.
  auto stsp = compute_structure(make_sp(6));
  CHECK(stsp.sharp.q == 4);
  CHECK(stsp.bars.indices.empty());
  CHECK(stsp.b.empty());
  CHECK(stsp.y.empty());

  // Unparseable generator names stop after the sharp element too.
  auto sto = compute_structure(make_o2_power(2));
  CHECK(sto.sharp.q == 2);
  CHECK(sto.bars.indices.empty());

  CHECK_THROWS_AS(compute_structure(make_model("trivial:lambda1")),
                  std::invalid_argument);
}

TEST_CASE("ideal membership agrees with direct division on samples") {
  auto gl6 = make_gl(6);
  const auto& A = *gl6.algebra();
  Poly c2 = gen(gl6, "c2");
  CHECK(in_principal_ideal(gl6, c2, poly::multiply(A, c2, gen(gl6, "c1"))));
  CHECK_FALSE(in_principal_ideal(gl6, c2, poly::power(A, gen(gl6, "c1"), 3)));
  Poly bar3 = pb(gl6, {{{"c3", 1}}, {{"c1", 3}}});
  CHECK(in_principal_ideal(gl6, bar3, poly::multiply(A, bar3, c2)));
  CHECK_THROWS_AS(
      in_principal_ideal(gl6, c2, poly::add(A, gen(gl6, "c1"), gen(gl6, "c3"))),
      std::invalid_argument);
}
