#include <random>

#include "doctest.h"
#include "famdim/abelian.hpp"
#include "famdim/errors.hpp"
#include "oracle.hpp"

using famdim::AbelianGroup;
using famdim::GroupElement;
using famdim::Int;
using famdim::IntMatrix;
using famdim::Subgroup;

namespace {

GroupElement elem(const AbelianGroup& g, std::vector<Int> coords) {
  return GroupElement(g, std::move(coords));
}

Subgroup gens(const AbelianGroup& g,
              const std::vector<std::vector<Int>>& rows) {
  std::vector<GroupElement> es;
  es.reserve(rows.size());
  for (const auto& r : rows) {
    es.push_back(elem(g, r));
  }
  return Subgroup::from_generators(g, es);
}

Subgroup random_subgroup(std::mt19937_64& rng, const AbelianGroup& g,
                         std::size_t count, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  std::vector<GroupElement> es;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Int> c(g.ambient_dim());
    for (auto& x : c) {
      x = dist(rng);
    }
    es.push_back(elem(g, std::move(c)));
  }
  return Subgroup::from_generators(g, es);
}

}  // namespace

TEST_CASE("group construction canonicalizes torsion") {
  CHECK(AbelianGroup(2, {}).to_string() == "Z^2");
  CHECK(AbelianGroup(1, {4}).to_string() == "Z + Z/4");
  const AbelianGroup crt(0, {2, 3});
  CHECK(crt.torsion_orders() == std::vector<Int>{6});
  CHECK(crt.to_string() == "Z/6");
  CHECK(AbelianGroup(0, {4, 6}).torsion_orders() == std::vector<Int>{2, 12});
  CHECK(AbelianGroup(0, {}).to_string() == "Z^0");
  CHECK_THROWS_AS(AbelianGroup(1, {1}), famdim::BadTorsion);
  CHECK_THROWS_AS(AbelianGroup(1, {0}), famdim::BadTorsion);
}

TEST_CASE("group parsing accepts the grammar and round-trips") {
  CHECK(AbelianGroup::parse("Z") == AbelianGroup(1, {}));
  CHECK(AbelianGroup::parse("Z^3") == AbelianGroup(3, {}));
  CHECK(AbelianGroup::parse("Z^2 + Z/2 + Z/4") == AbelianGroup(2, {2, 4}));
  CHECK(AbelianGroup::parse(" Z^1+Z/6 ") == AbelianGroup(1, {6}));
  CHECK(AbelianGroup::parse("Z/6") == AbelianGroup(0, {6}));
  CHECK(AbelianGroup::parse("Z^0") == AbelianGroup(0, {}));
  CHECK_THROWS_AS(AbelianGroup::parse("Q"), famdim::ParseError);
  CHECK_THROWS_AS(AbelianGroup::parse("Z^"), famdim::ParseError);
  CHECK_THROWS_AS(AbelianGroup::parse("Z^2 + 4"), famdim::ParseError);
  CHECK_THROWS_AS(AbelianGroup::parse("Z^2 + Z/1"), famdim::BadTorsion);

  for (const auto& g :
       {AbelianGroup(2, {}), AbelianGroup(1, {4}), AbelianGroup(0, {6}),
        AbelianGroup(3, {2, 4}), AbelianGroup(0, {})}) {
    CHECK(AbelianGroup::parse(g.to_string()) == g);
  }
}

TEST_CASE("relation lattice realizes the torsion") {
  const AbelianGroup g(2, {2, 6});
  const IntMatrix l = g.relation_lattice();
  CHECK(l == IntMatrix::from_rows({{0, 0, 2, 0}, {0, 0, 0, 6}}));
  CHECK(AbelianGroup(2, {}).relation_lattice().rows() == 0);
}

TEST_CASE("elements reduce torsion coordinates") {
  const AbelianGroup g(1, {4});
  CHECK(elem(g, {5, 7}).coords() == std::vector<Int>{5, 3});
  CHECK(elem(g, {0, -1}).coords() == std::vector<Int>{0, 3});
  CHECK_THROWS_AS(elem(g, {1}), famdim::DimensionMismatch);
}

TEST_CASE("subgroup from generators has a canonical lift basis") {
  const AbelianGroup z_z4(1, {4});
  const Subgroup h = gens(z_z4, {{2, 0}});
  CHECK(h.lift_basis() == IntMatrix::from_rows({{2, 0}, {0, 4}}));
  CHECK(h.rank() == 1);

  CHECK(gens(z_z4, {}).lift_basis() == IntMatrix::from_rows({{0, 4}}));
  CHECK(gens(z_z4, {}) == Subgroup::trivial(z_z4));

  const AbelianGroup z2(2, {});
  CHECK(gens(z2, {{2, 4}, {1, 3}}).lift_basis() ==
        IntMatrix::from_rows({{1, 1}, {0, 2}}));

  const AbelianGroup z3(3, {});
  CHECK(gens(z3, {{1, 0, 0}, {2, 0, 0}, {0, 0, 5}}).rank() == 2);
  CHECK(Subgroup::trivial(z3).rank() == 0);

  CHECK_THROWS_AS(Subgroup::from_generators(z2, {elem(z3, {0, 0, 0})}),
                  famdim::DimensionMismatch);
}

TEST_CASE("full and torsion subgroups") {
  const AbelianGroup g(1, {4});
  CHECK(Subgroup::full(g).lift_basis() == IntMatrix::identity(2));
  CHECK(Subgroup::full(g).rank() == 1);
  const Subgroup t = Subgroup::torsion_part(g);
  CHECK(t.lift_basis() == IntMatrix::from_rows({{0, 1}}));
  CHECK(t.rank() == 0);
}

TEST_CASE("canonical basis deserialization validates its input") {
  const AbelianGroup g(1, {4});
  const Subgroup h = gens(g, {{2, 0}});
  CHECK(Subgroup::from_canonical_basis(g, h.lift_basis()) == h);
  // Not in echelon form.
  CHECK_THROWS_AS(
      Subgroup::from_canonical_basis(g, IntMatrix::from_rows({{2, 4}, {1, 3}})),
      famdim::Error);
  // Echelon but missing the relation row (0,4).
  CHECK_THROWS_AS(
      Subgroup::from_canonical_basis(g, IntMatrix::from_rows({{1, 0}})),
      famdim::Error);
  CHECK_THROWS_AS(Subgroup::from_canonical_basis(g, IntMatrix::identity(3)),
                  famdim::DimensionMismatch);
}

TEST_CASE("element membership") {
  const AbelianGroup z_z4(1, {4});
  const Subgroup h = gens(z_z4, {{2, 0}});
  CHECK(h.contains_element(elem(z_z4, {2, 0})));
  CHECK(h.contains_element(elem(z_z4, {-4, 4})));
  CHECK_FALSE(h.contains_element(elem(z_z4, {1, 0})));
  CHECK_FALSE(h.contains_element(elem(z_z4, {2, 1})));
  CHECK_THROWS_AS(h.contains_element(elem(AbelianGroup(1, {}), {2})),
                  famdim::AmbientMismatch);
}

TEST_CASE("intersection and sum of subgroups") {
  const AbelianGroup z2(2, {});
  const Subgroup h2 = gens(z2, {{2, 0}});
  const Subgroup h3 = gens(z2, {{3, 0}});
  CHECK(intersect(h2, h3) == gens(z2, {{6, 0}}));
  CHECK(intersect(h2, h2) == h2);
  CHECK(intersect(gens(z2, {{1, 0}}), gens(z2, {{0, 1}})) ==
        Subgroup::trivial(z2));

  CHECK(sum(h2, h3) == gens(z2, {{1, 0}}));
  CHECK(sum(h2, Subgroup::trivial(z2)) == h2);
  CHECK(sum(gens(z2, {{1, 0}}), gens(z2, {{0, 1}})) == Subgroup::full(z2));

  const AbelianGroup z3(3, {});
  CHECK_THROWS_AS(intersect(h2, Subgroup::full(z3)), famdim::AmbientMismatch);
  CHECK_THROWS_AS(sum(h2, Subgroup::full(z3)), famdim::AmbientMismatch);
}

TEST_CASE("subgroup containment") {
  const AbelianGroup z2(2, {});
  CHECK(contains(gens(z2, {{1, 0}}), gens(z2, {{3, 0}})));
  CHECK_FALSE(contains(gens(z2, {{3, 0}}), gens(z2, {{1, 0}})));
  const AbelianGroup z_z4(1, {4});
  CHECK(contains(Subgroup::full(z_z4), gens(z_z4, {{2, 0}})));
}

TEST_CASE("subgroup index counts cosets exactly") {
  const AbelianGroup z2(2, {});
  const auto three =
      famdim::subgroup_index(gens(z2, {{3, 0}}), gens(z2, {{1, 0}}));
  REQUIRE(three.has_value());
  CHECK(*three == 3);

  const AbelianGroup z_z4(1, {4});
  const Subgroup h = gens(z_z4, {{2, 0}});
  CHECK(*famdim::subgroup_index(h, Subgroup::full(z_z4)) == 8);
  CHECK(*famdim::subgroup_index(h, h) == 1);

  // Rank drop makes the index infinite.
  CHECK_FALSE(famdim::subgroup_index(Subgroup::trivial(z2), gens(z2, {{1, 0}}))
                  .has_value());

  CHECK_THROWS_AS(
      famdim::subgroup_index(gens(z2, {{1, 0}}), gens(z2, {{3, 0}})),
      famdim::ContainmentViolation);
}

TEST_CASE("commensurability on rank-1 subgroups of the plane") {
  const AbelianGroup z2(2, {});
  CHECK(famdim::commensurable(gens(z2, {{2, 0}}), gens(z2, {{3, 0}})));
  CHECK_FALSE(famdim::commensurable(gens(z2, {{1, 0}}), gens(z2, {{0, 1}})));
  const Subgroup h = gens(z2, {{5, 7}});
  CHECK(famdim::commensurable(h, h));

  CHECK_THROWS_AS(
      famdim::commensurable(gens(z2, {{1, 0}}), Subgroup::full(z2)),
      famdim::RankMismatch);
  CHECK_THROWS_AS(
      famdim::commensurable(Subgroup::trivial(z2), Subgroup::trivial(z2)),
      famdim::RankMismatch);
  CHECK_THROWS_AS(famdim::commensurable(gens(z2, {{1, 0}}),
                                        gens(AbelianGroup(3, {}), {{1, 0, 0}})),
                  famdim::AmbientMismatch);
}

TEST_CASE("largest commensurable overgroup") {
  const AbelianGroup z2(2, {});
  CHECK(famdim::max_overgroup(gens(z2, {{2, 4}})) == gens(z2, {{1, 2}}));
  const Subgroup sat = gens(z2, {{1, 2}});
  CHECK(famdim::max_overgroup(sat) == sat);

  const AbelianGroup z_z4(1, {4});
  CHECK(famdim::max_overgroup(gens(z_z4, {{2, 0}})) == Subgroup::full(z_z4));

  CHECK_THROWS_AS(famdim::max_overgroup(Subgroup::trivial(z2)),
                  famdim::RankZero);

  CHECK(famdim::is_maximal(gens(z2, {{1, 2}})));
  CHECK_FALSE(famdim::is_maximal(gens(z2, {{2, 4}})));
  CHECK(famdim::is_maximal(Subgroup::full(z_z4)));
  CHECK_THROWS_AS(famdim::is_maximal(Subgroup::torsion_part(z_z4)),
                  famdim::RankZero);
}

TEST_CASE("quotient invariants") {
  const AbelianGroup z2(2, {});
  CHECK(famdim::quotient_invariants(gens(z2, {{1, 2}})) == AbelianGroup(1, {}));
  CHECK(famdim::quotient_invariants(gens(z2, {{2, 0}, {0, 3}})) ==
        AbelianGroup(0, {6}));
  const AbelianGroup g(1, {4});
  CHECK(famdim::quotient_invariants(Subgroup::trivial(g)) == g);
}

TEST_CASE("commensurable iff equal largest overgroup on random pairs") {
  std::mt19937_64 rng(91);
  const std::vector<AbelianGroup> ambients = {
      AbelianGroup(2, {}), AbelianGroup(3, {}), AbelianGroup(1, {4}),
      AbelianGroup(2, {2, 6})};
  int tested = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const AbelianGroup& g = ambients[trial % ambients.size()];
    const Subgroup h = random_subgroup(rng, g, 1 + trial % 3, 6);
    const Subgroup k = random_subgroup(rng, g, 1 + (trial / 2) % 3, 6);
    if (h.rank() == 0 || h.rank() != k.rank()) {
      continue;
    }
    ++tested;
    CHECK(famdim::commensurable(h, k) ==
          (famdim::max_overgroup(h) == famdim::max_overgroup(k)));
  }
  CHECK(tested > 100);
}

TEST_CASE("containment of equal rank forces commensurability") {
  std::mt19937_64 rng(92);
  for (int trial = 0; trial < 150; ++trial) {
    const AbelianGroup g(2 + trial % 2, {});
    const Subgroup k = random_subgroup(rng, g, 1 + trial % 2, 5);
    if (k.rank() == 0) {
      continue;
    }
    // Scale every generator by the same factor: a finite-index subgroup.
    std::uniform_int_distribution<int> scale(1, 4);
    const int m = scale(rng);
    IntMatrix rows = k.lift_basis();
    for (std::size_t i = 0; i < rows.rows(); ++i) {
      for (std::size_t j = 0; j < rows.cols(); ++j) {
        rows(i, j) *= m;
      }
    }
    const Subgroup h = Subgroup::from_lift_rows(g, rows);
    CHECK(contains(k, h));
    CHECK(h.rank() == k.rank());
    CHECK(famdim::commensurable(h, k));
    CHECK(famdim::subgroup_index(h, k).has_value());
  }
}

TEST_CASE("largest overgroup swallows torsion and has free quotient") {
  std::mt19937_64 rng(93);
  const std::vector<AbelianGroup> ambients = {AbelianGroup(1, {4}),
                                              AbelianGroup(2, {2, 6}),
                                              AbelianGroup(3, {})};
  for (int trial = 0; trial < 200; ++trial) {
    const AbelianGroup& g = ambients[trial % ambients.size()];
    const Subgroup h = random_subgroup(rng, g, 1 + trial % 3, 7);
    if (h.rank() == 0) {
      continue;
    }
    const Subgroup m = famdim::max_overgroup(h);
    CHECK(contains(m, h));
    CHECK(m.rank() == h.rank());
    CHECK(contains(m, Subgroup::torsion_part(g)));
    CHECK(famdim::is_maximal(m));
    const AbelianGroup q = famdim::quotient_invariants(m);
    CHECK(q.torsion_count() == 0);
    CHECK(q.free_rank() == g.free_rank() - h.rank());
  }
}

TEST_CASE("enumeration of maximal classes in the plane at height one") {
  const AbelianGroup z2(2, {});
  const auto e = famdim::enumerate_maximal(z2, 1, 1);
  CHECK(e.ambient == z2);
  CHECK(e.rank == 1);
  CHECK(e.height_bound == 1);
  CHECK(e.exhaustive_within_bound);
  REQUIRE(e.representatives.size() == 4);
  CHECK(e.representatives[0].lift_basis() == IntMatrix::from_rows({{0, 1}}));
  CHECK(e.representatives[1].lift_basis() == IntMatrix::from_rows({{1, -1}}));
  CHECK(e.representatives[2].lift_basis() == IntMatrix::from_rows({{1, 0}}));
  CHECK(e.representatives[3].lift_basis() == IntMatrix::from_rows({{1, 1}}));
}

TEST_CASE("enumeration edge cases") {
  const AbelianGroup z2(2, {});
  const auto full = famdim::enumerate_maximal(z2, 2, 5);
  REQUIRE(full.representatives.size() == 1);
  CHECK(full.representatives[0] == Subgroup::full(z2));

  const AbelianGroup z1(1, {});
  const auto line = famdim::enumerate_maximal(z1, 1, 3);
  REQUIRE(line.representatives.size() == 1);
  CHECK(line.representatives[0] == Subgroup::full(z1));

  CHECK_THROWS_AS(famdim::enumerate_maximal(z2, 0, 1), famdim::BadRank);
  CHECK_THROWS_AS(famdim::enumerate_maximal(z2, 3, 1), famdim::BadRank);
  CHECK_THROWS_AS(famdim::enumerate_maximal(z2, 1, 0), famdim::BadRank);
}

TEST_CASE("enumeration over a torsion ambient pins the torsion rows") {
  const AbelianGroup g(2, {2});
  const auto e = famdim::enumerate_maximal(g, 1, 1);
  REQUIRE(e.representatives.size() == 4);
  for (const auto& rep : e.representatives) {
    CHECK(rep.rank() == 1);
    CHECK(famdim::is_maximal(rep));
    CHECK(contains(rep, Subgroup::torsion_part(g)));
    const IntMatrix& b = rep.lift_basis();
    CHECK(b.rows() == 2);
    CHECK(b(1, 2) == 1);  // unit torsion row
    CHECK(b(0, 2) == 0);
  }
}

TEST_CASE("enumeration output is deterministic, bounded, and maximal") {
  const AbelianGroup z3(3, {});
  const auto e1 = famdim::enumerate_maximal(z3, 2, 2);
  const auto e2 = famdim::enumerate_maximal(z3, 2, 2);
  REQUIRE(e1.representatives.size() == e2.representatives.size());
  for (std::size_t i = 0; i < e1.representatives.size(); ++i) {
    CHECK(e1.representatives[i] == e2.representatives[i]);
  }
  for (const auto& rep : e1.representatives) {
    CHECK(rep.rank() == 2);
    CHECK(famdim::is_maximal(rep));
    const IntMatrix& b = rep.lift_basis();
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) {
        CHECK(abs(b(i, j)) <= 2);
      }
    }
  }
}
