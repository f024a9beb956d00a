#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symcrit/driver.hpp"
#include "symcrit/jacprep.hpp"

using namespace symcrit;

namespace {
const PrimeField F(65521);

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

MPoly e(const BlockRing& br, std::vector<std::pair<long long, std::vector<int>>> t) {
  return MPoly::from_list(br.ering(), t);
}

bool contains(const std::vector<MPoly>& v, const MPoly& g) {
  for (const MPoly& h : v)
    if (h == g || h == -g) return true;
  return false;
}
}  // namespace

TEST_CASE("jacobian layout") {
  ProblemInstance prob = sphere();
  PolyMatrix jac = jacobian(prob.f(), prob.phi());
  REQUIRE(jac.rows() == 2);
  REQUIRE(jac.cols() == 3);
  // defining equations first, objective last
  CHECK(jac.at(0, 0) == prob.f()[0].derivative(0));
  CHECK(jac.at(1, 2) == prob.phi().derivative(2));
}

TEST_CASE("transport rewrites invariants in e-variables") {
  ProblemInstance prob = sphere();
  BlockRing fine(F, Partition::from_parts({1, 1, 1}));
  CHECK(transport(fine, prob.f()[0]) ==
        e(fine, {{1, {2, 0, 0}}, {-2, {0, 1, 0}}, {-6, {0, 0, 0}}}));
  BlockRing top(F, Partition::from_parts({3}));
  CHECK(transport(top, prob.f()[0]) == e(top, {{3, {2}}, {-6, {0}}}));
  // non-invariant input is rejected
  PolyRingPtr x = make_x_ring(F, 3);
  CHECK_THROWS_AS((void)transport(fine, MPoly::var(x, 0)), Error);
}

TEST_CASE("row restriction picks slot representatives") {
  ProblemInstance prob = sphere();
  BlockRing mid(F, Partition::from_parts({1, 2}));
  PolyMatrix jac = jacobian(prob.f(), prob.phi());
  std::vector<MPoly> xrow;
  for (int j = 0; j < 3; ++j) xrow.push_back(jac.at(0, j));
  std::vector<MPoly> row = restrict_row(mid, xrow);
  REQUIRE(row.size() == 2);
  const auto& z = mid.zring();
  CHECK(row[0] == MPoly::var(z, 0).scaled(2));
  CHECK(row[1] == MPoly::var(z, 1).scaled(2));
}

TEST_CASE("length equal to s transports the equations only") {
  ProblemInstance prob = sphere();
  BlockRing top(F, Partition::from_parts({3}));
  PreparedSystem sys = prepare_f(top, prob.f());
  REQUIRE(sys.equations.size() == 1);
  CHECK(sys.equations[0] == e(top, {{3, {2}}, {-6, {0}}}));
  CHECK(sys.minor_rank == 0);
}

TEST_CASE("longer partitions add the symmetrized minors") {
  ProblemInstance prob = sphere();

  BlockRing mid(F, Partition::from_parts({1, 2}));
  PreparedSystem sys = prepare_f_h(mid, prob.f(), prob.phi());
  CHECK(sys.minor_rank == 2);
  REQUIRE(sys.equations.size() == 2);
  CHECK(sys.equations[0] ==
        e(mid, {{1, {2, 0}}, {2, {0, 2}}, {-6, {0, 0}}}));
  // the single 2x2 minor of rows ((-2, 2 e2), (e2, e1 e2 - 3))
  CHECK(contains(sys.equations,
                 e(mid, {{2, {1, 1}}, {2, {0, 2}}, {-6, {0, 0}}})));

  BlockRing fine(F, Partition::from_parts({1, 1, 1}));
  PreparedSystem fs = prepare_f_h(fine, prob.f(), prob.phi());
  // symmetrized rows (0, -4, 2 e1) and (1, e1, e2 - 9) give minors
  // {4, -2 e1, -2 e1^2 - 4 e2 + 36}: a unit ideal.
  REQUIRE(fs.equations.size() == 4);
  CHECK(contains(fs.equations, MPoly::constant(fine.ering(), 4)));
  CHECK(contains(fs.equations, e(fine, {{2, {1, 0, 0}}})));
  CHECK(contains(fs.equations,
                 e(fine, {{2, {2, 0, 0}}, {4, {0, 1, 0}}, {-36, {0, 0, 0}}})));
}

TEST_CASE("prepared systems respect the length contract") {
  ProblemInstance prob = sphere();
  BlockRing top(F, Partition::from_parts({3}));
  BlockRing fine(F, Partition::from_parts({1, 1, 1}));
  CHECK_THROWS_AS((void)prepare_f(fine, prob.f()), Error);
  CHECK_THROWS_AS((void)prepare_f_h(top, prob.f(), prob.phi()), Error);
}

TEST_CASE("minor columns follow subset order on a wider partition") {
  // n = 5, lambda = (1^1 2^2): length 3, so the 2x3 symmetrized matrix has
  // three 2x2 minors; all must be genuine e-ring polynomials.
  PolyRingPtr x = make_x_ring(F, 5);
  Rng rng(99);
  MPoly f1 = random_invariant(x, 2, rng);
  MPoly phi = random_invariant(x, 3, rng);
  ProblemInstance prob({f1}, phi);
  BlockRing br(F, Partition::from_parts({1, 2, 2}));
  PreparedSystem sys = prepare_f_h(br, prob.f(), prob.phi());
  CHECK(sys.minor_rank == 2);
  for (const MPoly& g : sys.equations)
    CHECK(g.ring()->same_as(*br.ering()));
  CHECK(sys.equations.size() >= 1);
}
