#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symcrit/error.hpp"
#include "symcrit/partitions.hpp"

using namespace symcrit;

TEST_CASE("block normal form") {
  Partition a = Partition::from_parts({2, 1, 1});
  CHECK(a.blocks() == std::vector<std::pair<int, int>>{{1, 2}, {2, 1}});
  CHECK(a.n() == 4);
  CHECK(a.length() == 3);
  CHECK(a.nblocks() == 2);
  CHECK(a.part(0) == 1);
  CHECK(a.mult(0) == 2);
  CHECK(a.str() == "1^2 2^1");
  CHECK(a.parts() == std::vector<int>{1, 1, 2});
  CHECK(a.tau() == std::vector<int>{0, 2, 3});
  CHECK(a.block_of_slot(0) == 0);
  CHECK(a.block_of_slot(1) == 0);
  CHECK(a.block_of_slot(2) == 1);
  CHECK(a == Partition({{1, 2}, {2, 1}}));
  CHECK_THROWS_AS(Partition({{2, 1}, {1, 2}}), Error);
  CHECK_THROWS_AS(Partition({{1, 0}}), Error);
}

TEST_CASE("enumeration") {
  auto all3 = enumerate_partitions(3);
  REQUIRE(all3.size() == 3);
  CHECK(all3[0] == Partition::from_parts({1, 1, 1}));
  CHECK(all3[1] == Partition::from_parts({1, 2}));
  CHECK(all3[2] == Partition::from_parts({3}));

  CHECK(enumerate_partitions(6).size() == 11);

  auto exact = enumerate_partitions_exact(4, 2);
  REQUIRE(exact.size() == 2);
  CHECK(exact[0] == Partition::from_parts({1, 3}));
  CHECK(exact[1] == Partition::from_parts({2, 2}));

  auto min2 = enumerate_partitions_min(6, 2);
  CHECK(min2.size() == 10);  // everything but (6^1)
  for (const Partition& p : min2) CHECK(p.length() >= 2);

  // ascending lex on part lists
  auto all5 = enumerate_partitions(5);
  for (std::size_t i = 1; i < all5.size(); ++i)
    CHECK(all5[i - 1] < all5[i]);
}

TEST_CASE("counting helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(3, 5) == 0);

  CHECK(orbit_size(Partition::from_parts({1, 1, 1})) == 6);
  CHECK(orbit_size(Partition::from_parts({1, 2})) == 3);
  CHECK(orbit_size(Partition::from_parts({3})) == 1);
  CHECK(orbit_size(Partition::from_parts({2, 2})) == 6);  // 4!/(2!2!)

  CHECK(block_symmetry(Partition::from_parts({1, 1, 1})) == 6);
  CHECK(block_symmetry(Partition::from_parts({1, 2})) == 1);
  CHECK(block_symmetry(Partition::from_parts({1, 1, 2, 2})) == 4);
}

TEST_CASE("refinement order") {
  Partition fine = Partition::from_parts({1, 1, 1});
  Partition mid = Partition::from_parts({1, 2});
  Partition top = Partition::from_parts({3});
  CHECK(refines(fine, mid));
  CHECK(refines(fine, top));
  CHECK(refines(mid, top));
  CHECK(!refines(mid, fine));
  CHECK(refines(mid, mid));
  // (2,2) does not refine (1,3)
  CHECK(!refines(Partition::from_parts({2, 2}), Partition::from_parts({1, 3})));
  CHECK(refines(Partition::from_parts({2, 2}), Partition::from_parts({4})));
  CHECK(!refines(Partition::from_parts({1, 3}), Partition::from_parts({2, 2})));
}
