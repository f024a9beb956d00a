#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "symcrit/driver.hpp"
#include "symcrit/orbit.hpp"

using namespace symcrit;

namespace {
const PrimeField F(65521);

UniPoly up(std::vector<long long> c) { return UniPoly::from_ints(F, c); }

Partition P(std::vector<int> parts) {
  return Partition::from_parts(std::move(parts));
}

ProblemInstance sphere() {
  PolyRingPtr x = make_x_ring(F, 3);
  MPoly f1 = MPoly::from_list(
      x, {{1, {2, 0, 0}}, {1, {0, 2, 0}}, {1, {0, 0, 2}}, {-6, {0, 0, 0}}});
  MPoly phi = MPoly::from_list(x, {{1, {1, 1, 1}},
                                   {-3, {1, 0, 0}},
                                   {-3, {0, 1, 0}},
                                   {-3, {0, 0, 1}}});
  return ProblemInstance({f1}, phi);
}
}  // namespace

TEST_CASE("fiber type over the field merges equal values") {
  FiberTypeField r = type_of_fiber(P({1, 2}), F, {1, 1});
  CHECK(r.type == P({3}));
  CHECK(r.coords == std::vector<fp_t>{1});

  // distinct values keep the type
  FiberTypeField d = type_of_fiber(P({1, 2}), F, {1, 4});
  CHECK(d.type == P({1, 2}));
  CHECK(d.coords == std::vector<fp_t>({1, 4}));
}

TEST_CASE("different value patterns can land on the same fiber") {
  // lambda = (1^2 2^1): values are (e1, e2) of the two singleton slots,
  // then the double slot.  Both of these are the multiset {1, 1, 2, 2}.
  FiberTypeField a = type_of_fiber(P({1, 1, 2}), F, {2, 1, 2});
  FiberTypeField b = type_of_fiber(P({1, 1, 2}), F, {4, 4, 1});
  CHECK(a.type == P({2, 2}));
  CHECK(a.coords == std::vector<fp_t>({3, 2}));
  CHECK(b.type == a.type);
  CHECK(b.coords == a.coords);
}

TEST_CASE("a branch with mixed types reports a factorization") {
  // q has roots 1 and 2; the slot values (1, y - 1) coincide only at y = 2
  UniPoly q = up({2, -3, 1});
  QuotientRingPtr ring = QuotientRing::make(q);
  SplitOr<FiberType> r =
      type_of_fiber(P({1, 1}), ring, {up({0, 1}), up({-1, 1})});
  REQUIRE(std::holds_alternative<SplitEvent>(r));
  const SplitEvent& ev = std::get<SplitEvent>(r);
  CHECK(ev.left * ev.right == q);
  std::set<std::vector<fp_t>> factors = {ev.left.coeffs(), ev.right.coeffs()};
  std::set<std::vector<fp_t>> want = {up({-1, 1}).coeffs(),
                                      up({-2, 1}).coeffs()};
  CHECK(factors == want);
}

TEST_CASE("uniform branches pass through without splitting") {
  UniPoly q = up({2, -3, 1});
  QuotientRingPtr ring = QuotientRing::make(q);
  // block values (e1, e2) = (3, y): T^2 - 3T + y is squarefree at both
  // roots of q, so the whole branch has type (1^2)
  SplitOr<FiberType> r =
      type_of_fiber(P({1, 1}), ring, {up({3}), up({0, 1})});
  REQUIRE(std::holds_alternative<FiberType>(r));
  const FiberType& ft = std::get<FiberType>(r);
  CHECK(ft.type == P({1, 1}));
  REQUIRE(ft.coords.size() == 2);
  CHECK(ft.coords[0] == up({3}));
  CHECK(ft.coords[1] == up({0, 1}));
}

TEST_CASE("sorting a candidate set by exact type") {
  BlockRing br(F, P({1, 1, 2}));
  Rng rng(31);
  // two candidate points, both of exact type (2^2) with values {1, 1, 2, 2}
  ZeroDimParam sol(up({2, -3, 1}),
                   {up({0, 2}), up({-2, 3}), up({3, -1})},
                   {F.neg(3), 3, 2});
  DecomposeResult dec = decompose(br, sol, rng);
  REQUIRE(dec.parts.size() == 1);
  CHECK(dec.parts[0].type == P({2, 2}));
  CHECK(dec.parts[0].param.degree() == 1);
  CHECK(dec.collapsed == 1);
  CHECK(rational_points(dec.parts[0].param) ==
        std::vector<std::vector<fp_t>>{{3, 2}});
}

TEST_CASE("an already exact set survives sorting unchanged") {
  BlockRing br(F, P({1, 2}));
  Rng rng(37);
  ProblemInstance prob = sphere();
  PreparedSystem sys = prepare_f_h(br, prob.f(), prob.phi());
  ZeroDimParam sol = rur_extract(br.ering(), sys.equations, rng);
  REQUIRE(sol.degree() == 4);
  DecomposeResult dec = decompose(br, sol, rng);
  REQUIRE(dec.parts.size() == 1);
  CHECK(dec.parts[0].type == P({1, 2}));
  CHECK(dec.parts[0].param.degree() == 4);
  CHECK(dec.collapsed == 0);

  // empty input: nothing to sort
  DecomposeResult none = decompose(br, ZeroDimParam::empty_set(F, 2), rng);
  CHECK(none.parts.empty());
  CHECK(none.collapsed == 0);
}

TEST_CASE("sorting conserves points and only coarsens types") {
  Rng rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Partition> all = enumerate_partitions(2 + int(rng.below(4)));
    Partition lambda = all[std::size_t(rng.below(all.size()))];
    BlockRing br(F, lambda);
    const int l = lambda.length();
    // a union of random rational points whose first coordinate separates
    const int npts = 1 + int(rng.below(4));
    ZeroDimParam sol = ZeroDimParam::empty_set(F, l);
    std::set<fp_t> used;
    for (int i = 0; i < npts; ++i) {
      fp_t a = fp_t(rng.below(F.p()));
      if (used.count(a)) continue;
      used.insert(a);
      std::vector<UniPoly> v = {UniPoly::constant(F, a)};
      for (int j = 1; j < l; ++j)
        v.push_back(UniPoly::constant(F, fp_t(rng.below(16))));
      std::vector<fp_t> mu(std::size_t(l), 0);
      mu[0] = 1;
      ZeroDimParam pt(up({-(long long)a, 1}), std::move(v), std::move(mu));
      sol = union_params(sol, pt, rng);
    }
    DecomposeResult dec = decompose(br, sol, rng);
    int total = dec.collapsed;
    for (const OrbitEntry& e : dec.parts) {
      total += e.param.degree();
      CHECK(refines(lambda, e.type));
      CHECK(e.param.coords() == e.type.length());
    }
    CHECK(total == sol.degree());
  }
}

TEST_CASE("expanding an orbit lists every arrangement") {
  ZeroDimParam param(up({-1, 1}), {up({5}), up({7})}, {3, F.p() - 2});
  OrbitPoints pts = expand_orbit(P({1, 2}), param, F);
  CHECK(pts.skipped_roots == 0);
  std::vector<std::vector<fp_t>> want = {{5, 7, 7}, {7, 5, 7}, {7, 7, 5}};
  CHECK(pts.points == want);

  // the empty set expands to nothing
  OrbitPoints none = expand_orbit(P({1, 2}), ZeroDimParam::empty_set(F, 2), F);
  CHECK(none.points.empty());
  CHECK(none.skipped_roots == 0);
}

TEST_CASE("roots with irrational block values are counted, not expanded") {
  PrimeField F11(11);
  // block polynomial T^2 + 5 has no roots modulo 11
  ZeroDimParam param(UniPoly::from_ints(F11, {-1, 1}),
                     {UniPoly::constant(F11, 0), UniPoly::constant(F11, 5)},
                     {0, 9});
  OrbitPoints pts = expand_orbit(Partition::from_parts({1, 1}), param, F11);
  CHECK(pts.points.empty());
  CHECK(pts.skipped_roots == 1);
}

TEST_CASE("a multi-slot block expands into distinct values") {
  // type (1^2), point with block values {2, 5}: e1 = 7, e2 = 10
  ZeroDimParam param(up({-7, 1}), {up({7}), up({10})}, {1, 0});
  OrbitPoints pts = expand_orbit(P({1, 1}), param, F);
  CHECK(pts.skipped_roots == 0);
  std::vector<std::vector<fp_t>> want = {{2, 5}, {5, 2}};
  CHECK(pts.points == want);
}

TEST_CASE("membership verification accepts a correct answer") {
  ProblemInstance prob = sphere();
  Rng rng(43);

  std::vector<OrbitEntry> entries;
  entries.push_back(OrbitEntry{P({3}), ZeroDimParam(up({-2, 0, 1}),
                                                    {up({0, 1})}, {1})});
  BlockRing br(F, P({1, 2}));
  PreparedSystem sys = prepare_f_h(br, prob.f(), prob.phi());
  ZeroDimParam sol = rur_extract(br.ering(), sys.equations, rng);
  entries.push_back(OrbitEntry{P({1, 2}), sol});
  entries.push_back(OrbitEntry{P({1, 1, 1}), ZeroDimParam::empty_set(F, 3)});

  CHECK_NOTHROW(verify_membership(prob.f(), prob.phi(), entries));

  SUBCASE("an equation that does not vanish is rejected") {
    std::vector<OrbitEntry> bad = entries;
    bad[0].param = ZeroDimParam(up({-1, 1}), {up({1})}, {1});
    CHECK_THROWS_AS(verify_membership(prob.f(), prob.phi(), bad), Error);
  }
  SUBCASE("duplicate types are rejected") {
    std::vector<OrbitEntry> bad = entries;
    bad.push_back(entries[0]);
    CHECK_THROWS_AS(verify_membership(prob.f(), prob.phi(), bad), Error);
  }
  SUBCASE("hidden coincidences are rejected") {
    std::vector<OrbitEntry> bad = entries;
    // claims type (1^1 2^1) but both block values are 5
    bad[1].param = ZeroDimParam(up({-5, 1}), {up({5}), up({5})}, {1, 0});
    CHECK_THROWS_AS(verify_membership(prob.f(), prob.phi(), bad), Error);
  }
  SUBCASE("coordinate count must match the type") {
    std::vector<OrbitEntry> bad = entries;
    bad[0].param = ZeroDimParam(up({-1, 1}), {up({1}), up({1})}, {1, 0});
    CHECK_THROWS_AS(verify_membership(prob.f(), prob.phi(), bad), Error);
  }
  SUBCASE("types must partition the variable count") {
    std::vector<OrbitEntry> bad = entries;
    bad[0].type = P({1, 1});
    CHECK_THROWS_AS(verify_membership(prob.f(), prob.phi(), bad), Error);
  }
}
