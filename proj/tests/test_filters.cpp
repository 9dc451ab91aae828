#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "rlw/filters.hpp"
#include "support/oracles.hpp"

using namespace rlw;

namespace {
std::vector<Mask> member_masks(const std::vector<FilterSet>& fs) {
  std::vector<Mask> out;
  for (const FilterSet& f : fs) out.push_back(f.members);
  return out;
}
}  // namespace

TEST_CASE("goedel three-chain has exactly the three upsets as filters") {
  auto fs = enumerate_filters(goedel_chain(3));
  CHECK(member_masks(fs) == std::vector<Mask>{0b100, 0b110, 0b111});
}

TEST_CASE("lukasiewicz three-chain is simple as a filter lattice") {
  auto fs = enumerate_filters(lukasiewicz_chain(3));
  // the middle squares to bottom, so {middle, top} is not mono-closed
  CHECK(member_masks(fs) == std::vector<Mask>{0b100, 0b111});
}

TEST_CASE("four-element boolean filters are the principal upsets") {
  auto fs = enumerate_filters(boolean_algebra(2));
  CHECK(member_masks(fs) == std::vector<Mask>{0b1000, 0b1010, 0b1100, 0b1111});
}

TEST_CASE("enumeration agrees with the subset scan") {
  for (const ResiduatedLattice& A :
       {goedel_chain(4), lukasiewicz_chain(4), boolean_algebra(2),
        product(goedel_chain(2), goedel_chain(3)),
        product(lukasiewicz_chain(3), goedel_chain(2))}) {
    std::vector<Mask> brute = oracle::brute_filters(A);
    std::vector<Mask> listed = member_masks(enumerate_filters(A));
    std::sort(listed.begin(), listed.end());
    std::sort(brute.begin(), brute.end());
    CHECK(listed == brute);
  }
}

TEST_CASE("filters and deductive systems coincide") {
  for (const ResiduatedLattice& A : {lukasiewicz_chain(4), boolean_algebra(2)})
    for (Mask m = 0; m < (Mask{1} << A.n); ++m)
      CHECK(is_filter(A, m) == is_deductive_system(A, m));
}

TEST_CASE("congruence count matches the partition oracle") {
  for (const ResiduatedLattice& A :
       {goedel_chain(4), lukasiewicz_chain(4), boolean_algebra(2)}) {
    CHECK(enumerate_congruences(A).size() == oracle::brute_congruences(A).size());
  }
}

TEST_CASE("the middle-collapsing congruence of the three-chain") {
  ResiduatedLattice g3 = goedel_chain(3);
  FilterSet up_a{3, 0b110};
  CongruenceRelation th = congruence_of_filter(g3, up_a);
  CHECK(th.block_of == std::vector<int>{0, 1, 1});
  CHECK(filter_of_congruence(g3, th) == up_a);
}

TEST_CASE("round trips are mutually inverse") {
  for (const ResiduatedLattice& A :
       {goedel_chain(4), lukasiewicz_chain(4), boolean_algebra(2)}) {
    for (const FilterSet& F : enumerate_filters(A))
      CHECK(filter_of_congruence(A, congruence_of_filter(A, F)) == F);
    for (const CongruenceRelation& th : enumerate_congruences(A))
      CHECK(congruence_of_filter(A, filter_of_congruence(A, th)) == th);
  }
}

TEST_CASE("filter_of_congruence rejects non-congruences") {
  CongruenceRelation bad{3, {0, 1, 0}};  // glues bottom to top but not the middle
  CHECK_THROWS_AS(filter_of_congruence(goedel_chain(3), bad), std::invalid_argument);
}

TEST_CASE("quotient by the middle upset is the two-chain") {
  ResiduatedLattice g3 = goedel_chain(3);
  QuotientResult q = quotient(g3, FilterSet{3, 0b110});
  CHECK(q.algebra == goedel_chain(2));
  CHECK(is_homomorphism(q.projection));
  CHECK(kernel(q.projection).members == 0b110);
}

TEST_CASE("quotient extremes") {
  ResiduatedLattice b4 = boolean_algebra(2);
  CHECK(quotient(b4, FilterSet{4, 0b1000}).algebra == b4);
  CHECK(quotient(b4, FilterSet{4, 0b1111}).algebra.n == 1);
}

TEST_CASE("generated filters close under the product") {
  // in the goedel chain every upset already is a filter
  CHECK(generated_filter(goedel_chain(4), 0b0010).members == 0b1110);
  // the lukasiewicz middle generates everything once squared
  CHECK(generated_filter(lukasiewicz_chain(3), 0b010).members == 0b111);
  CHECK(generated_filter(lukasiewicz_chain(3), 0).members == 0b100);
}

TEST_CASE("generated filter is the least filter containing the seed") {
  for (const ResiduatedLattice& A : {lukasiewicz_chain(4), boolean_algebra(2)}) {
    auto all = oracle::brute_filters(A);
    for (Mask seed = 0; seed < (Mask{1} << A.n); ++seed) {
      Mask least = full_mask(A.n);
      for (Mask f : all)
        if ((seed & ~f) == 0) least &= f;
      CHECK(generated_filter(A, seed).members == least);
    }
  }
}

TEST_CASE("primes of the four-element boolean algebra are the two coatoms") {
  ResiduatedLattice b4 = boolean_algebra(2);
  CHECK(member_masks(prime_filters(b4)) == std::vector<Mask>{0b1010, 0b1100});
  CHECK_FALSE(is_prime(b4, FilterSet{4, 0b1000}));  // join of the atoms is top
  CHECK_FALSE(is_prime(b4, FilterSet{4, 0b1111}));  // not proper
}

TEST_CASE("on chains every proper filter is prime") {
  for (const ResiduatedLattice& A : {goedel_chain(5), lukasiewicz_chain(5)})
    for (const FilterSet& F : enumerate_filters(A))
      CHECK(is_prime(A, F) == is_proper(A, F));
}

TEST_CASE("filter lattice covers of the boolean square") {
  auto fs = enumerate_filters(boolean_algebra(2));
  auto covers = filter_lattice_covers(fs);
  CHECK(covers == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("join irreducibles and decompositions") {
  ResiduatedLattice b4 = boolean_algebra(2);
  auto jis = join_irreducible_filters(b4);
  CHECK(member_masks(jis) == std::vector<Mask>{0b1010, 0b1100});

  FilterSet full{4, 0b1111};
  CHECK(member_masks(irredundant_decomposition(b4, full)) ==
        std::vector<Mask>{0b1010, 0b1100});
  FilterSet up_a{4, 0b1010};
  CHECK(member_masks(irredundant_decomposition(b4, up_a)) == std::vector<Mask>{0b1010});
  CHECK_THROWS_AS(irredundant_decomposition(b4, FilterSet{4, 0b1000}),
                  std::invalid_argument);
}

TEST_CASE("on a chain every non-minimal filter decomposes as itself") {
  ResiduatedLattice g4 = goedel_chain(4);
  for (const FilterSet& F : enumerate_filters(g4)) {
    if (F.members == bit(g4.top)) continue;
    auto dec = irredundant_decomposition(g4, F);
    REQUIRE(dec.size() == 1);
    CHECK(dec[0] == F);
  }
}

TEST_CASE("filter meet and join are lattice operations") {
  ResiduatedLattice b4 = boolean_algebra(2);
  FilterSet a{4, 0b1010}, b{4, 0b1100};
  CHECK(filter_meet(b4, a, b).members == 0b1000);
  CHECK(filter_join(b4, a, b).members == 0b1111);
}

TEST_CASE("coset partitions the carrier") {
  ResiduatedLattice g3 = goedel_chain(3);
  FilterSet up_a{3, 0b110};
  CHECK(coset(g3, up_a, 0) == 0b001);
  CHECK(coset(g3, up_a, 1) == 0b110);
  CHECK(coset(g3, up_a, 2) == 0b110);
}
