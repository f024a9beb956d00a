#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "symcrit/driver.hpp"
#include "symcrit/zdsolve.hpp"

using namespace symcrit;

namespace {
const PrimeField F(65521);

UniPoly up(std::vector<long long> c) { return UniPoly::from_ints(F, c); }

MPoly mp(const PolyRingPtr& r,
         std::vector<std::pair<long long, std::vector<int>>> t) {
  return MPoly::from_list(r, t);
}
}  // namespace

TEST_CASE("reduced groebner basis of a circle and a line") {
  PolyRingPtr r = make_x_ring(F, 2);
  std::vector<MPoly> gb = groebner(
      r, {mp(r, {{1, {2, 0}}, {1, {0, 2}}, {-1, {0, 0}}}),
          mp(r, {{1, {1, 0}}, {-1, {0, 1}}})});
  // 2y^2 = 1, so y^2 - inv(2) = y^2 + 32760
  REQUIRE(gb.size() == 2);
  CHECK(gb[0] == mp(r, {{1, {1, 0}}, {-1, {0, 1}}}));
  CHECK(gb[1] == mp(r, {{1, {0, 2}}, {32760, {0, 0}}}));
}

TEST_CASE("inconsistent generators reduce to one") {
  PolyRingPtr r = make_x_ring(F, 2);
  std::vector<MPoly> gb =
      groebner(r, {mp(r, {{1, {1, 0}}}), mp(r, {{1, {1, 0}}, {-1, {0, 0}}})});
  REQUIRE(gb.size() == 1);
  CHECK(gb[0] == MPoly::constant(r, 1));
}

TEST_CASE("normal form is the remainder on division") {
  PolyRingPtr r = make_x_ring(F, 2);
  std::vector<MPoly> gb = groebner(
      r, {mp(r, {{1, {2, 0}}, {1, {0, 2}}, {-1, {0, 0}}}),
          mp(r, {{1, {1, 0}}, {-1, {0, 1}}})});
  // x^3 = x*(x^2) -> reduce: x == y, x^2 == y^2 == inv(2) ...
  MPoly f = mp(r, {{1, {3, 0}}});
  MPoly nf = normal_form(f, gb);
  CHECK(nf == mp(r, {{32761, {0, 1}}}));  // inv(2) * y
  CHECK(normal_form(nf, gb) == nf);
  CHECK(normal_form(gb[0] * gb[1], gb).is_zero());
}

TEST_CASE("staircase basis enumerates the quotient monomials") {
  PolyRingPtr r = make_x_ring(F, 2);
  std::vector<MPoly> gb = groebner(
      r, {mp(r, {{1, {2, 0}}, {1, {0, 2}}, {-1, {0, 0}}}),
          mp(r, {{1, {1, 0}}, {-1, {0, 1}}})});
  auto st = staircase_basis(r, gb);
  REQUIRE(st.has_value());
  REQUIRE(st->size() == 2);
  CHECK((*st)[0].deg == 0);
  CHECK((*st)[1].deg == 1);

  // unit ideal: empty staircase
  auto none = staircase_basis(r, {MPoly::constant(r, 1)});
  REQUIRE(none.has_value());
  CHECK(none->empty());

  // a single principal generator in two variables is not zero dimensional
  CHECK(!staircase_basis(r, {mp(r, {{1, {1, 0}}})}).has_value());
}

TEST_CASE("quotient algebra multiplication and minimal polynomials") {
  PolyRingPtr r = make_x_ring(F, 2);
  std::vector<MPoly> gb = groebner(
      r, {mp(r, {{1, {2, 0}}, {1, {0, 2}}, {-1, {0, 0}}}),
          mp(r, {{1, {1, 0}}, {-1, {0, 1}}})});
  QuotientAlgebra qa(r, gb);
  REQUIRE(qa.dim() == 2);

  std::vector<fp_t> one = qa.one();
  std::vector<fp_t> x0 = qa.mul_by_var(0, one);
  std::vector<fp_t> x1 = qa.mul_by_var(1, one);
  CHECK(x0 == x1);  // x == y in the quotient
  CHECK(qa.reduce(mp(r, {{1, {1, 0}}, {-1, {0, 1}}})) ==
        std::vector<fp_t>(2, 0));
  // x * y == y^2 == inv(2)
  std::vector<fp_t> xy = qa.mul_by_var(0, x1);
  std::vector<fp_t> half = qa.reduce(MPoly::constant(r, 32761));
  CHECK(xy == half);
  CHECK(qa.apply_form({1, 0}, one) == x0);

  // both variables have the same minimal polynomial y^2 - 1/2
  CHECK(qa.var_min_poly(0) == up({32760, 0, 1}));
  CHECK(qa.var_min_poly(1) == up({32760, 0, 1}));

  CHECK_THROWS_AS(QuotientAlgebra(r, groebner(r, {mp(r, {{1, {1, 0}}})})),
                  Error);
}

TEST_CASE("radical generators strip multiplicities") {
  PolyRingPtr r = make_x_ring(F, 2);
  // (x - 1)^2 and y: the point (1, 0) with multiplicity
  std::vector<MPoly> gb = groebner(
      r, {mp(r, {{1, {2, 0}}, {-2, {1, 0}}, {1, {0, 0}}}),
          mp(r, {{1, {0, 1}}})});
  QuotientAlgebra qa(r, gb);
  REQUIRE(qa.dim() == 2);
  std::vector<MPoly> rad = groebner(r, radical_generators(qa));
  QuotientAlgebra reduced(r, rad);
  CHECK(reduced.dim() == 1);
  CHECK(normal_form(mp(r, {{1, {1, 0}}, {-1, {0, 0}}}), rad).is_zero());
}

TEST_CASE("univariate encoding of a single rational point") {
  PolyRingPtr r = make_x_ring(F, 2);
  Rng rng(7);
  std::vector<MPoly> gens = {mp(r, {{1, {1, 0}}, {-3, {0, 0}}}),
                             mp(r, {{1, {0, 1}}, {-5, {0, 0}}})};
  ZeroDimParam p =
      rur_extract(r, gens, rng, std::vector<fp_t>{1, 0});
  CHECK(p.degree() == 1);
  CHECK(p.q() == up({-3, 1}));
  REQUIRE(p.coords() == 2);
  CHECK(p.v()[0] == up({3}));
  CHECK(p.v()[1] == up({5}));
  CHECK(p.mu() == std::vector<fp_t>({1, 0}));
}

TEST_CASE("univariate encoding of a conjugate pair") {
  PolyRingPtr r = make_x_ring(F, 2);
  Rng rng(7);
  // x^2 = 2, y = 1: two points (a, 1) with a^2 = 2
  std::vector<MPoly> gens = {mp(r, {{1, {2, 0}}, {-2, {0, 0}}}),
                             mp(r, {{1, {0, 1}}, {-1, {0, 0}}})};
  ZeroDimParam p =
      rur_extract(r, gens, rng, std::vector<fp_t>{1, 0});
  CHECK(p.degree() == 2);
  CHECK(p.q() == up({-2, 0, 1}));
  CHECK(p.v()[0] == up({0, 1}));
  CHECK(p.v()[1] == up({1}));

  // every generator vanishes at the parametrized points
  MonomialEvaluator ev(p.v(), p.q());
  for (const MPoly& g : gens) CHECK(ev.eval(g).is_zero());
}

TEST_CASE("encoding invariants are enforced at construction") {
  // non-monic modulus
  CHECK_THROWS_AS(ZeroDimParam(up({1, 2}), {up({0})}, {1}), Error);
  // modulus with a repeated root
  CHECK_THROWS_AS(
      ZeroDimParam(up({1, 2, 1}), {up({0, 1}), up({1})}, {1, 0}), Error);
  // coordinate degree too large
  CHECK_THROWS_AS(ZeroDimParam(up({-3, 1}), {up({0, 1})}, {1}), Error);
  // the separating identity sum mu_i v_i == y fails
  CHECK_THROWS_AS(ZeroDimParam(up({-2, 0, 1}), {up({0, 1})}, {2}), Error);
  // good: single coordinate equal to the parameter
  ZeroDimParam ok(up({-2, 0, 1}), {up({0, 1})}, {1});
  CHECK(ok.degree() == 2);
  // empty set: q = 1
  ZeroDimParam none = ZeroDimParam::empty_set(F, 3);
  CHECK(none.empty());
  CHECK(none.degree() == 0);
  CHECK(none.coords() == 3);
}

TEST_CASE("union of encodings is a point-set union") {
  Rng rng(11);
  ZeroDimParam a(up({-1, 1}), {up({1})}, {1});
  ZeroDimParam b(up({-2, 1}), {up({2})}, {1});
  ZeroDimParam u = union_params(a, b, rng);
  CHECK(u.degree() == 2);
  std::vector<std::vector<fp_t>> pts = rational_points(u);
  REQUIRE(pts.size() == 2);
  CHECK(pts[0] == std::vector<fp_t>{1});
  CHECK(pts[1] == std::vector<fp_t>{2});

  // overlapping unions do not double-count
  ZeroDimParam again = union_params(a, a, rng);
  CHECK(again.degree() == 1);
  CHECK(rational_points(again) ==
        std::vector<std::vector<fp_t>>{{1}});

  // empty set is the neutral element
  ZeroDimParam e = ZeroDimParam::empty_set(F, 1);
  CHECK(union_params(a, e, rng).degree() == 1);
  CHECK(union_params(e, e, rng).empty());
}

TEST_CASE("images under new coordinates") {
  Rng rng(13);
  // two points 1 and 2 on the line, coordinate v = y
  ZeroDimParam a(up({2, 65518, 1}), {up({0, 1})}, {1});
  REQUIRE(a.degree() == 2);

  // identity map keeps both points
  ImageResult same = image_from_values(a.q(), {up({0, 1})}, rng);
  CHECK(same.param.degree() == 2);
  CHECK(same.collapsed == 0);

  // constant map collapses them to one
  ImageResult folded = image_from_values(a.q(), {up({9})}, rng);
  CHECK(folded.param.degree() == 1);
  CHECK(folded.collapsed == 1);
  CHECK(rational_points(folded.param) ==
        std::vector<std::vector<fp_t>>{{9}});
}

TEST_CASE("polynomial image of an encoded set") {
  PolyRingPtr r = make_x_ring(F, 2);
  Rng rng(17);
  // points (3, 5): map through (x + y, x * y)
  ZeroDimParam a(up({-3, 1}), {up({3}), up({5})}, {1, 0});
  ImageResult img = image_param(
      a, {mp(r, {{1, {1, 0}}, {1, {0, 1}}}), mp(r, {{1, {1, 1}}})}, rng);
  CHECK(img.param.degree() == 1);
  CHECK(img.collapsed == 0);
  CHECK(rational_points(img.param) ==
        std::vector<std::vector<fp_t>>{{8, 15}});
}

TEST_CASE("monomial evaluator substitutes coordinate values") {
  // modulus y^2 - 2, coordinates (y, 1)
  MonomialEvaluator ev({up({0, 1}), up({1})}, up({-2, 0, 1}));
  PolyRingPtr r = make_x_ring(F, 2);
  // e1^2 * e2 evaluates to y^2 = 2
  CHECK(ev.eval(mp(r, {{1, {2, 1}}})) == up({2}));
  CHECK(ev.eval(mp(r, {{1, {1, 0}}, {1, {0, 1}}})) == up({1, 1}));
  CHECK(ev.eval(MPoly::constant(r, 0)).is_zero());
}

TEST_CASE("prepared system solving matches direct extraction") {
  // the unit-circle critical points of x*y on x^2 + y^2 - 2 via a plain
  // 2-variable system: x^2 + y^2 - 2 and the 2x2 jacobian determinant
  PolyRingPtr r = make_x_ring(F, 2);
  Rng rng(23);
  std::vector<MPoly> gens = {
      mp(r, {{1, {2, 0}}, {1, {0, 2}}, {-2, {0, 0}}}),
      mp(r, {{2, {2, 0}}, {-2, {0, 2}}})};  // det((2x,2y),(y,x)) scaled
  ZeroDimParam p = rur_extract(r, gens, rng);
  CHECK(p.degree() == 4);
  std::vector<std::vector<fp_t>> pts = rational_points(p);
  REQUIRE(pts.size() == 4);
  std::vector<std::vector<fp_t>> want = {
      {1, 1}, {1, F.neg(1)}, {F.neg(1), 1}, {F.neg(1), F.neg(1)}};
  std::sort(want.begin(), want.end());
  CHECK(pts == want);
}
