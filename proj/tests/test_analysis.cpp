#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rlw/analysis.hpp"

using namespace rlw;

TEST_CASE("relation algebra basics") {
  Relation d = diagonal_relation(3);
  CHECK(compose(d, d) == d);
  CHECK(inverse(d) == d);

  Relation r{3, {0b010, 0b100, 0b000}};  // 0->1, 1->2
  CHECK(compose(r, r).rows == std::vector<Mask>{0b100, 0b000, 0b000});
  CHECK(inverse(r).rows == std::vector<Mask>{0b000, 0b001, 0b010});
  CHECK(relation_subset(d, transitive_join(d, r)));
}

TEST_CASE("subdirect irreducibility via the minimum nontrivial filter") {
  SubdirectIrreducibility g3 = is_subdirectly_irreducible(goedel_chain(3));
  CHECK(g3.verdict);
  REQUIRE(g3.monolith.has_value());
  CHECK(g3.monolith->members == 0b110);

  SubdirectIrreducibility b4 = is_subdirectly_irreducible(boolean_algebra(2));
  CHECK_FALSE(b4.verdict);
  CHECK_FALSE(b4.monolith.has_value());

  CHECK(is_subdirectly_irreducible(goedel_chain(1)).verdict);  // trivial case
}

TEST_CASE("simplicity means exactly two filters") {
  CHECK(is_simple(lukasiewicz_chain(3)));
  CHECK(is_simple(goedel_chain(2)));
  CHECK_FALSE(is_simple(goedel_chain(3)));
  CHECK_FALSE(is_simple(boolean_algebra(2)));
}

TEST_CASE("the boolean square decomposes, chains do not") {
  IndecomposabilityReport b4 = is_directly_indecomposable(boolean_algebra(2));
  CHECK_FALSE(b4.verdict);
  REQUIRE(b4.product_filters.has_value());
  CHECK(b4.product_filters->first.members == 0b1010);
  CHECK(b4.product_filters->second.members == 0b1100);
  REQUIRE(b4.factor_pair.has_value());

  for (const ResiduatedLattice& A :
       {goedel_chain(2), goedel_chain(3), lukasiewicz_chain(3), goedel_chain(4)}) {
    IndecomposabilityReport r = is_directly_indecomposable(A);
    CHECK(r.verdict);
    CHECK(r.by_down_directedness);
    CHECK(r.by_intersections);
    CHECK(r.by_factor_congruences);
    CHECK(r.by_product_search);
  }

  CHECK_THROWS_AS(is_directly_indecomposable(goedel_chain(1)), std::invalid_argument);
}

TEST_CASE("collapsing intersections do not force a decomposition") {
  // The kite: 0 < c < x,y < 1 with x meet y = c and idempotent mono. The
  // filters above x and y meet in {top}, yet their join stops at the filter
  // above c, so nothing factors a five-element carrier.
  ResiduatedLattice kite{
      5,
      {0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 1, 2, 1, 2, 0, 1, 1, 3, 3, 0, 1, 2, 3, 4},
      {0, 1, 2, 3, 4, 1, 1, 2, 3, 4, 2, 2, 2, 4, 4, 3, 3, 4, 3, 4, 4, 4, 4, 4, 4},
      {0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 1, 2, 1, 2, 0, 1, 1, 3, 3, 0, 1, 2, 3, 4},
      {4, 4, 4, 4, 4, 0, 4, 4, 4, 4, 0, 3, 4, 3, 4, 0, 2, 2, 4, 4, 0, 1, 2, 3, 4},
      0,
      4};
  REQUIRE(validate(kite).ok());
  CHECK(enumerate_filters(kite).size() == 5);

  IndecomposabilityReport r = is_directly_indecomposable(kite);
  CHECK(r.verdict);
  CHECK_FALSE(r.by_down_directedness);
  CHECK_FALSE(r.by_intersections);
  CHECK(r.by_factor_congruences);
  CHECK(r.by_product_search);
  CHECK(r.intersection_gap());
  CHECK_FALSE(r.factor_pair.has_value());
  CHECK_FALSE(r.product_filters.has_value());

  // Two incomparable minimal filters also mean no monolith, and the topology
  // generated by all nontrivial filters is discrete.
  CHECK_FALSE(is_subdirectly_irreducible(kite).verdict);
  GlobalTopologyReport g = global_system_topology_verdict(kite);
  CHECK(g.applicable);
  CHECK_FALSE(g.si);
  CHECK_FALSE(g.global_nondiscrete);
  CHECK_FALSE(g.largest_nondiscrete_exists);
}

TEST_CASE("dimension counts prime chain steps") {
  CHECK(dimension(goedel_chain(1)) == 0);
  CHECK(dimension(goedel_chain(2)) == 0);
  CHECK(dimension(goedel_chain(3)) == 1);
  CHECK(dimension(goedel_chain(4)) == 2);
  // the nilpotent chain has a single proper filter, hence dimension zero
  CHECK(dimension(lukasiewicz_chain(3)) == 0);
  CHECK(dimension(lukasiewicz_chain(4)) == 0);
  CHECK(dimension(boolean_algebra(2)) == 0);
}

TEST_CASE("global system topology matches irreducibility") {
  GlobalTopologyReport g3 = global_system_topology_verdict(goedel_chain(3));
  CHECK(g3.applicable);
  CHECK(g3.si);
  CHECK(g3.global_nondiscrete);
  CHECK(g3.largest_nondiscrete_exists);
  REQUIRE(g3.largest_nondiscrete.has_value());
  // the largest non-discrete member comes from the monolith
  CHECK(*g3.largest_nondiscrete ==
        induce_topology(goedel_chain(3), {FilterSet{3, 0b110}}));

  CHECK_FALSE(global_system_topology_verdict(boolean_algebra(2)).applicable);
  CHECK_FALSE(global_system_topology_verdict(goedel_chain(1)).applicable);

  GlobalTopologyReport simple = global_system_topology_verdict(lukasiewicz_chain(3));
  CHECK(simple.applicable);
  CHECK(simple.si);
}

TEST_CASE("no nontrivial hausdorff linear topology exists") {
  for (const ResiduatedLattice& A :
       {goedel_chain(4), lukasiewicz_chain(4), boolean_algebra(2)}) {
    HausdorffExistenceReport r = hausdorff_existence_verdict(A);
    CHECK(r.applicable);
    CHECK(r.nontrivial_hausdorff_count == 0);
    CHECK(r.finite_index_topology_discrete);
    CHECK(r.finite_index_topology_hausdorff);
  }
}

TEST_CASE("congruence sets form uniformity bases") {
  for (const ResiduatedLattice& A :
       {goedel_chain(4), lukasiewicz_chain(4), boolean_algebra(2)}) {
    std::vector<Relation> rels;
    for (const CongruenceRelation& th : enumerate_congruences(A))
      rels.push_back(relation_of_congruence(th));
    CHECK(uniform_base_check(rels).ok());
  }
}

TEST_CASE("uniform base failures carry witnesses") {
  Relation no_diag{2, {0b10, 0b01}};  // misses (0,0)
  UniformBaseReport r = uniform_base_check({no_diag});
  CHECK_FALSE(r.diagonal_ok);
  CHECK_FALSE(r.witness.empty());

  // a family whose only member is asymmetric has nothing inside its inverse
  Relation asym{2, {0b11, 0b10}};  // contains (0,1) but not (1,0)
  UniformBaseReport s = uniform_base_check({asym});
  CHECK_FALSE(s.symmetry_ok);
  CHECK_FALSE(s.ok());
}

TEST_CASE("congruences permute") {
  for (const ResiduatedLattice& A :
       {goedel_chain(4), lukasiewicz_chain(4), boolean_algebra(2),
        product(goedel_chain(2), lukasiewicz_chain(3))})
    CHECK(permutability_check(A));
}

TEST_CASE("descending chain report on the four-chain") {
  DccReport r = dcc_report(goedel_chain(4));
  CHECK(r.every_chain_stabilizes);
  CHECK(r.every_directed_family_has_minimum);
  // the filter lattice is a 4-chain: one maximal descending chain
  REQUIRE(r.chain_lengths.size() == 1);
  CHECK(r.chain_lengths[0] == 4);
}

TEST_CASE("analysis report for the three-chain") {
  StructureReport s = analyze(goedel_chain(3));
  CHECK(s.size == 3);
  CHECK_FALSE(s.is_simple);
  CHECK(s.is_subdirectly_irreducible);
  CHECK(s.is_directly_indecomposable);
  REQUIRE(s.monolith.has_value());
  CHECK(s.monolith->members == 0b110);
  CHECK(s.dimension == 1);
  CHECK(s.filter_count == 3);
  CHECK(s.prime_count == 2);
  CHECK(s.algebra_key == canonical_form(goedel_chain(3)));
}

TEST_CASE("analysis report for the trivial algebra") {
  StructureReport s = analyze(goedel_chain(1));
  CHECK(s.size == 1);
  CHECK(s.is_subdirectly_irreducible);
  CHECK(s.is_directly_indecomposable);  // vacuously, by convention
  CHECK_FALSE(s.monolith.has_value());
  CHECK(s.dimension == 0);
  CHECK(s.filter_count == 1);
  CHECK(s.prime_count == 0);
}
