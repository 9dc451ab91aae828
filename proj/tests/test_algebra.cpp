#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rlw/algebra.hpp"
#include "support/oracles.hpp"

using namespace rlw;

TEST_CASE("builders validate through size 8") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(validate(goedel_chain(n)).ok());
    CHECK(validate(lukasiewicz_chain(n)).ok());
  }
  for (int k = 0; k <= 3; ++k) CHECK(validate(boolean_algebra(k)).ok());
  CHECK(validate(product(goedel_chain(3), lukasiewicz_chain(3))).ok());
  CHECK(validate(product(goedel_chain(2), boolean_algebra(2))).ok());
}

TEST_CASE("one-element algebra is ok and flagged trivial") {
  ValidationReport r = validate(goedel_chain(1));
  CHECK(r.ok());
  CHECK(r.trivial);
}

TEST_CASE("size-2 constructions coincide") {
  CHECK(goedel_chain(2) == boolean_algebra(1));
  CHECK(goedel_chain(2) == lukasiewicz_chain(2));
}

TEST_CASE("three-element lukasiewicz middle squares to bottom") {
  ResiduatedLattice l3 = lukasiewicz_chain(3);
  CHECK(l3.mono(1, 1) == 0);
  CHECK(l3.impl(1, 0) == 1);  // residual of the nilpotent middle
}

TEST_CASE("chain square is the four-element boolean algebra") {
  ResiduatedLattice p = product(goedel_chain(2), goedel_chain(2));
  CHECK(validate(p).ok());
  CHECK(find_isomorphism(p, boolean_algebra(2)).has_value());
}

TEST_CASE("mutated residual is caught with a residuation witness") {
  ResiduatedLattice g3 = goedel_chain(3);
  g3.impl_t[static_cast<size_t>(g3.top) * g3.n + g3.bottom] = g3.top;
  ValidationReport r = validate(g3);
  CHECK_FALSE(r.ok());
  bool residuation = false;
  for (const AxiomViolation& v : r.violations)
    if (v.axiom == "residuation") residuation = true;
  CHECK(residuation);
}

TEST_CASE("structural errors are distinct from axiom violations") {
  ResiduatedLattice g3 = goedel_chain(3);
  g3.mono_t[4] = 9;  // out of range
  ValidationReport r = validate(g3);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.structural_errors.empty());
}

TEST_CASE("identity map is a homomorphism with kernel top") {
  ResiduatedLattice b4 = boolean_algebra(2);
  Homomorphism id = identity_homomorphism(b4);
  CHECK(is_homomorphism(id));
  FilterSet k = kernel(id);
  CHECK(k.members == bit(b4.top));
}

TEST_CASE("collapsing the middle of a three-chain fails on impl") {
  // meet, join and mono all survive a |-> bottom; the residual does not.
  Homomorphism h{goedel_chain(3), goedel_chain(2), {0, 0, 1}};
  CHECK_FALSE(is_homomorphism(h));
  auto fail = preservation_failure(h);
  REQUIRE(fail.has_value());
  CHECK(fail->operation == "impl");
}

TEST_CASE("kernel rejects non-homomorphisms") {
  Homomorphism h{goedel_chain(3), goedel_chain(2), {0, 0, 1}};
  CHECK_THROWS_AS(kernel(h), std::invalid_argument);
}

TEST_CASE("goedel and lukasiewicz three-chains are not isomorphic") {
  CHECK_FALSE(find_isomorphism(goedel_chain(3), lukasiewicz_chain(3)).has_value());
  CHECK(canonical_form(goedel_chain(3)) != canonical_form(lukasiewicz_chain(3)));
}

TEST_CASE("self isomorphism always exists") {
  auto h = find_isomorphism(goedel_chain(4), goedel_chain(4));
  REQUIRE(h.has_value());
  CHECK(is_homomorphism(*h));
}

TEST_CASE("relabeling does not change the canonical form") {
  ResiduatedLattice g4 = goedel_chain(4);
  ResiduatedLattice moved = relabel(g4, {2, 0, 3, 1});
  CHECK(canonical_form(moved) == canonical_form(g4));
  CHECK(normalized(moved) == g4);
  CHECK(find_isomorphism(moved, g4).has_value());
}

TEST_CASE("single-entry mutations never pass silently") {
  // every off-value flip of any table entry must break some axiom
  for (const ResiduatedLattice& A :
       {goedel_chain(3), lukasiewicz_chain(3), boolean_algebra(2)}) {
    std::vector<std::vector<Elem> ResiduatedLattice::*> tables = {
        &ResiduatedLattice::meet_t, &ResiduatedLattice::join_t,
        &ResiduatedLattice::mono_t, &ResiduatedLattice::impl_t};
    for (auto table : tables)
      for (size_t cell = 0; cell < (A.*table).size(); ++cell)
        for (Elem w = 0; w < A.n; ++w) {
          if ((A.*table)[cell] == w) continue;
          ResiduatedLattice M = A;
          (M.*table)[cell] = w;
          CHECK_FALSE(validate(M).ok());
        }
  }
}

TEST_CASE("derived laws hold with higher powers") {
  // join-power bound: (x v y)^(mn) <= x^m v y^n for m, n up to 3
  for (const ResiduatedLattice& A :
       {goedel_chain(4), lukasiewicz_chain(4), boolean_algebra(2),
        product(goedel_chain(2), lukasiewicz_chain(3))}) {
    auto power = [&](Elem x, int k) {
      Elem acc = A.top;
      for (int i = 0; i < k; ++i) acc = A.mono(acc, x);
      return acc;
    };
    for (Elem x = 0; x < A.n; ++x)
      for (Elem y = 0; y < A.n; ++y)
        for (int m = 1; m <= 3; ++m)
          for (int n = 1; n <= 3; ++n) {
            Elem lhs = power(A.join(x, y), m * n);
            Elem rhs = A.join(power(x, m), power(y, n));
            CHECK(A.meet(lhs, rhs) == lhs);
          }
  }
}

TEST_CASE("homomorphism listing pins the constants") {
  auto up = all_homomorphism_maps(goedel_chain(2), goedel_chain(3));
  REQUIRE(up.size() == 1);
  CHECK(up[0] == std::vector<Elem>{0, 2});
  auto down = all_homomorphism_maps(goedel_chain(3), goedel_chain(2));
  REQUIRE(down.size() == 1);
  CHECK(down[0] == std::vector<Elem>{0, 1, 1});
}

TEST_CASE("canonical form equality matches isomorphism on small algebras") {
  std::vector<ResiduatedLattice> pool = oracle::naive_generate(3);
  pool.push_back(goedel_chain(3));
  pool.push_back(lukasiewicz_chain(3));
  for (const ResiduatedLattice& A : pool)
    for (const ResiduatedLattice& B : pool)
      CHECK((canonical_form(A) == canonical_form(B)) ==
            find_isomorphism(A, B).has_value());
}
