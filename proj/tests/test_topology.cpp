#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "rlw/topology.hpp"

using namespace rlw;

TEST_CASE("filter extremes induce the topology extremes") {
  ResiduatedLattice g3 = goedel_chain(3);
  CHECK(induce_topology(g3, {FilterSet{3, 0b100}}).is_discrete());
  CHECK(induce_topology(g3, {FilterSet{3, 0b111}}).is_antidiscrete());
}

TEST_CASE("the middle upset induces the coset partition") {
  ResiduatedLattice g3 = goedel_chain(3);
  FiniteTopology T = induce_topology(g3, {FilterSet{3, 0b110}});
  CHECK(T.min_nbhd == std::vector<Mask>{0b001, 0b110, 0b110});
  auto opens = all_open_sets(T);
  std::sort(opens.begin(), opens.end());
  CHECK(opens == std::vector<Mask>{0b000, 0b001, 0b110, 0b111});
  CHECK(T.is_open(0b110));
  CHECK(T.is_closed(0b110));
  CHECK_FALSE(T.is_open(0b100));
}

TEST_CASE("empty and non-directed families are rejected") {
  ResiduatedLattice b4 = boolean_algebra(2);
  CHECK_THROWS_AS(induce_topology(b4, {}), std::invalid_argument);
  // the two coatoms have no member below their intersection
  SystemOfFilters coatoms = {FilterSet{4, 0b1010}, FilterSet{4, 0b1100}};
  CHECK(directedness_violation(coatoms).has_value());
  CHECK_THROWS_AS(induce_topology(b4, coatoms), std::invalid_argument);
}

TEST_CASE("separation classes are decided from open sets") {
  ResiduatedLattice g3 = goedel_chain(3);
  CHECK(separation_class(discrete_topology(3)) == SeparationClass::T2);
  CHECK(separation_class(antidiscrete_topology(3)) == SeparationClass::none);
  CHECK(separation_class(induce_topology(g3, {FilterSet{3, 0b110}})) ==
        SeparationClass::none);

  // a non-partition alexandrov topology is T0 without being T1
  FiniteTopology sierpinski{3, {0b001, 0b011, 0b111}};
  REQUIRE(alexandrov_consistent(sierpinski));
  CHECK(satisfies_t0(sierpinski));
  CHECK_FALSE(satisfies_t1(sierpinski));
  CHECK(separation_class(sierpinski) == SeparationClass::T0);
}

TEST_CASE("hausdorff iff the family intersects to top") {
  ResiduatedLattice b4 = boolean_algebra(2);
  CHECK(is_hausdorff(b4, {FilterSet{4, 0b1010}, FilterSet{4, 0b1100},
                          FilterSet{4, 0b1000}}));
  CHECK_FALSE(is_hausdorff(b4, {FilterSet{4, 0b1010}}));
}

TEST_CASE("all four operations are continuous on induced topologies") {
  for (const ResiduatedLattice& A :
       {goedel_chain(4), lukasiewicz_chain(4), boolean_algebra(2)})
    for (const FilterSet& F : enumerate_filters(A))
      CHECK(check_topological_algebra(A, induce_topology(A, {F})).ok);
}

TEST_CASE("a handmade non-linear topology breaks residual continuity") {
  // N(bottom) = {bottom, a}: meet, join and mono stay continuous, impl not
  ResiduatedLattice g3 = goedel_chain(3);
  FiniteTopology T{3, {0b011, 0b010, 0b100}};
  REQUIRE(alexandrov_consistent(T));
  ContinuityReport r = check_topological_algebra(g3, T);
  CHECK_FALSE(r.ok);
  CHECK(r.operation == "impl");
  CHECK(r.x == 0);
  CHECK(r.y == 0);
}

TEST_CASE("zero-dimensional linear topologies of the three-chains") {
  ResiduatedLattice g3 = goedel_chain(3);
  auto zs = enumerate_zltrl(g3);
  CHECK(zs.size() == 3);
  for (const FiniteTopology& T : zs) {
    int hits = 0;
    for (const FilterSet& F : enumerate_filters(g3))
      if (induce_topology(g3, {F}) == T) ++hits;
    CHECK(hits == 1);
  }
  // the nilpotent chain has fewer filters, hence fewer topologies
  CHECK(enumerate_zltrl(lukasiewicz_chain(3)).size() == 2);
}

TEST_CASE("filter openness equals containment of the base filter") {
  ResiduatedLattice b4 = boolean_algebra(2);
  auto fs = enumerate_filters(b4);
  for (const FilterSet& F : fs) {
    FiniteTopology T = induce_topology(b4, {F});
    for (const FilterSet& G : fs) {
      CosetOpennessReport r = coset_openness(b4, T, G);
      CHECK(r.filter_open == ((F.members & ~G.members) == 0));
      CHECK(r.filter_open == r.filter_closed);
      CHECK(r.filter_open == r.all_cosets_open);
    }
  }
}

TEST_CASE("supremum of simple topologies is the intersection topology") {
  ResiduatedLattice g4 = goedel_chain(4);
  auto fs = enumerate_filters(g4);
  for (const FilterSet& F : fs)
    for (const FilterSet& G : fs) {
      FiniteTopology lhs = induce_topology(g4, {filter_meet(g4, F, G)});
      FiniteTopology rhs =
          sup_topologies({induce_topology(g4, {F}), induce_topology(g4, {G})});
      CHECK(lhs == rhs);
    }
}

TEST_CASE("coarser-than agrees with open set containment") {
  ResiduatedLattice g3 = goedel_chain(3);
  FiniteTopology coarse = induce_topology(g3, {FilterSet{3, 0b111}});
  FiniteTopology mid = induce_topology(g3, {FilterSet{3, 0b110}});
  FiniteTopology fine = induce_topology(g3, {FilterSet{3, 0b100}});
  CHECK(topology_coarser_equal(coarse, mid));
  CHECK(topology_coarser_equal(mid, fine));
  CHECK_FALSE(topology_coarser_equal(fine, mid));
  CHECK(topology_coarser_equal(mid, mid));
}

TEST_CASE("systems are equivalent exactly when mutually coinitial") {
  ResiduatedLattice g3 = goedel_chain(3);
  FilterSet top_only{3, 0b100}, up_a{3, 0b110}, full{3, 0b111};
  CHECK(systems_equivalent(g3, {up_a, top_only, full}, {top_only}));
  CHECK_FALSE(systems_equivalent(g3, {up_a}, {top_only}));
  CHECK_FALSE(systems_equivalent(g3, {full}, {up_a}));
}

TEST_CASE("quantifier definition of induced opens matches the shortcut") {
  ResiduatedLattice b4 = boolean_algebra(2);
  auto fs = enumerate_filters(b4);
  for (unsigned sub = 1; sub < (1u << fs.size()); ++sub) {
    SystemOfFilters fam;
    for (size_t i = 0; i < fs.size(); ++i)
      if (sub & (1u << i)) fam.push_back(fs[i]);
    if (directedness_violation(fam)) continue;
    auto shortcut = all_open_sets(induce_topology(b4, fam));
    auto quantified = induced_open_sets_by_definition(b4, fam);
    std::sort(shortcut.begin(), shortcut.end());
    std::sort(quantified.begin(), quantified.end());
    CHECK(shortcut == quantified);
  }
}
