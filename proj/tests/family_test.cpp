#include "doctest.h"
#include "famdim/errors.hpp"
#include "famdim/family.hpp"

using famdim::AbelianGroup;
using famdim::Family;
using famdim::IntMatrix;
using famdim::Subgroup;

namespace {

Subgroup line(const AbelianGroup& g, std::vector<famdim::Int> coords) {
  return Subgroup::from_generators(
      g, {famdim::GroupElement(g, std::move(coords))});
}

}  // namespace

TEST_CASE("rank families and their display") {
  const Family f0 = Family::rank_family(0);
  CHECK(f0.kind() == Family::Kind::rank);
  CHECK(f0.rank_bound() == 0);
  CHECK(f0.to_string() == "F_0");
  CHECK(Family::rank_family(3).to_string() == "F_3");
  CHECK(f0 == Family::rank_family(0));
  CHECK(f0 != Family::rank_family(1));
}

TEST_CASE("all-of requires a maximal subgroup") {
  const AbelianGroup z2(2, {});
  const Family a = Family::all_of(line(z2, {1, 2}));
  CHECK(a.kind() == Family::Kind::all_of);
  CHECK(a.subgroup() == line(z2, {1, 2}));
  CHECK(a.to_string() == "All([[1,2]])");
  CHECK_THROWS_AS(Family::all_of(line(z2, {2, 4})), famdim::NotMaximal);
}

TEST_CASE("intersections flatten and combine rank members") {
  const Family f = Family::intersection_of(
      {Family::rank_family(2),
       Family::intersection_of(
           {Family::rank_family(5), Family::rank_family(3)})});
  CHECK(f == Family::rank_family(2));

  const AbelianGroup z3(3, {});
  const Subgroup m = line(z3, {1, 0, 0});
  // A rank bound at or above rank(M) adds nothing to All(M).
  CHECK(Family::intersection_of({Family::rank_family(2), Family::all_of(m)}) ==
        Family::all_of(m));
  // Every finite subgroup lies inside a maximal subgroup.
  CHECK(Family::intersection_of({Family::rank_family(0), Family::all_of(m)}) ==
        Family::rank_family(0));
  // A rank bound strictly between 0 and rank(M) stays.
  const Subgroup plane = Subgroup::from_lift_rows(
      z3, IntMatrix::from_rows({{1, 0, 0}, {0, 1, 0}}));
  const Family mixed =
      Family::intersection_of({Family::rank_family(1), Family::all_of(plane)});
  CHECK(mixed.kind() == Family::Kind::intersection);
  CHECK(mixed.members().size() == 2);
  CHECK(mixed.to_string() == "F_1 \xe2\x88\xa9 All([[1,0,0],[0,1,0]])");
}

TEST_CASE("intersecting two all-of families intersects the subgroups") {
  const AbelianGroup z3(3, {});
  const Subgroup m = Subgroup::from_lift_rows(
      z3, IntMatrix::from_rows({{1, 0, 0}, {0, 1, 0}}));
  const Subgroup n = Subgroup::from_lift_rows(
      z3, IntMatrix::from_rows({{1, 0, 0}, {0, 0, 1}}));
  const Family meet =
      Family::intersection_of({Family::all_of(m), Family::all_of(n)});
  CHECK(meet == Family::all_of(line(z3, {1, 0, 0})));
}

TEST_CASE("finite-subgroup family absorbs all-of over a torsion carrier") {
  const AbelianGroup g(1, {4});
  const Family meet = Family::intersection_of(
      {Family::rank_family(0), Family::all_of(Subgroup::full(g))});
  CHECK(meet == Family::rank_family(0));
}

TEST_CASE("unions flatten, deduplicate, and sort") {
  const Family u = Family::union_of(
      {Family::rank_family(1),
       Family::union_of({Family::rank_family(0), Family::rank_family(1)})});
  CHECK(u.kind() == Family::Kind::union_of);
  REQUIRE(u.members().size() == 2);
  CHECK(u.members()[0] == Family::rank_family(0));
  CHECK(u.members()[1] == Family::rank_family(1));
  CHECK(u.to_string() == "F_0 \xe2\x88\xaa F_1");

  CHECK(Family::union_of({Family::rank_family(2)}) == Family::rank_family(2));
}

TEST_CASE("family ordering is total and stable") {
  const AbelianGroup z2(2, {});
  const Family f1 = Family::rank_family(1);
  const Family a = Family::all_of(line(z2, {1, 0}));
  CHECK(Family::compare(f1, f1) == 0);
  CHECK(Family::compare(Family::rank_family(0), f1) < 0);
  CHECK(Family::compare(f1, a) < 0);  // rank kind sorts before all-of
  CHECK(Family::compare(a, f1) > 0);

  const Family u1 = Family::union_of({f1, a});
  const Family u2 = Family::union_of({a, f1});
  CHECK(u1 == u2);  // member order normalized away
}

TEST_CASE("composite members parenthesize in display") {
  const AbelianGroup z3(3, {});
  const Subgroup m = Subgroup::from_lift_rows(
      z3, IntMatrix::from_rows({{1, 0, 0}, {0, 1, 0}}));
  const Family inner =
      Family::intersection_of({Family::rank_family(1), Family::all_of(m)});
  const Family u = Family::union_of({Family::rank_family(2), inner});
  CHECK(u.to_string() ==
        "F_2 \xe2\x88\xaa (F_1 \xe2\x88\xa9 All([[1,0,0],[0,1,0]]))");
}
