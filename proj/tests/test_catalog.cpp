#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "rlw/catalog.hpp"
#include "support/oracles.hpp"

using namespace rlw;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// lattice isomorphism = meet/join-table permutation, constants fixed
bool lattices_isomorphic(const oracle::LabeledLattice& A,
                         const oracle::LabeledLattice& B) {
  int n = A.n;
  std::vector<Elem> perm(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
  do {
    if (perm[0] != 0 || perm[static_cast<size_t>(n - 1)] != n - 1) continue;
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y) {
        size_t xy = static_cast<size_t>(x) * n + y;
        size_t pxy = static_cast<size_t>(perm[static_cast<size_t>(x)]) * n +
                     perm[static_cast<size_t>(y)];
        if (perm[static_cast<size_t>(A.meet_t[xy])] != B.meet_t[pxy] ||
            perm[static_cast<size_t>(A.join_t[xy])] != B.join_t[pxy])
          ok = false;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("lattice enumeration matches the labeled oracle up to size 4") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<oracle::LabeledLattice> labeled = oracle::brute_labeled_lattices(n);
    std::vector<oracle::LabeledLattice> reps;
    for (const oracle::LabeledLattice& L : labeled) {
      bool dup = false;
      for (const oracle::LabeledLattice& R : reps)
        if (lattices_isomorphic(L, R)) dup = true;
      if (!dup) reps.push_back(L);
    }
    CHECK(enumerate_bounded_lattices(n).size() == reps.size());
  }
}

TEST_CASE("every completion passes validation and derives its residual") {
  for (const BoundedLattice& L : enumerate_bounded_lattices(4))
    for (const ResiduatedLattice& A : residuated_completions(L)) {
      CHECK(validate(A).ok());
      for (Elem y = 0; y < A.n; ++y)
        for (Elem z = 0; z < A.n; ++z) {
          Elem best = -1;
          for (Elem x = 0; x < A.n; ++x)
            if (A.leq(A.mono(x, y), z) && (best < 0 || A.leq(best, x))) best = x;
          CHECK(A.impl(y, z) == best);
        }
    }
}

TEST_CASE("generation counts match the naive generator") {
  AlgebraCatalog cat = generate(4);
  for (int n = 1; n <= 4; ++n) {
    std::vector<ResiduatedLattice> naive = oracle::naive_generate(n);
    CHECK(cat.stats.algebra_counts[static_cast<size_t>(n - 1)] == naive.size());
  }
  // sizes 1..3 give 1, 1, 2 algebras
  CHECK(cat.stats.algebra_counts[0] == 1);
  CHECK(cat.stats.algebra_counts[1] == 1);
  CHECK(cat.stats.algebra_counts[2] == 2);
}

TEST_CASE("catalog entries are sorted, keyed and self-consistent") {
  AlgebraCatalog cat = generate(4);
  for (size_t i = 1; i < cat.entries.size(); ++i) {
    const CatalogEntry &a = cat.entries[i - 1], &b = cat.entries[i];
    CHECK((a.algebra.n < b.algebra.n ||
           (a.algebra.n == b.algebra.n && a.key < b.key)));
  }
  for (const CatalogEntry& e : cat.entries) {
    CHECK(e.key == canonical_form(e.algebra));
    CHECK(validate(e.algebra).ok());
    CHECK(e.structure.size == e.algebra.n);
  }
}

TEST_CASE("catalog view by size") {
  AlgebraCatalog cat = generate(3);
  CHECK(catalog_algebras(cat, 1).size() == 1);
  CHECK(catalog_algebras(cat, 3).size() == 2);
  CHECK(catalog_algebras(cat, 2).at(0) == goedel_chain(2));
}

TEST_CASE("save and load round-trip byte-identically") {
  AlgebraCatalog cat = generate(3);
  std::string p1 = "catalog_rt_a.jsonl", p2 = "catalog_rt_b.jsonl";
  save_catalog(cat, p1);
  AlgebraCatalog loaded = load_catalog(p1);
  CHECK(loaded.size_bound == cat.size_bound);
  REQUIRE(loaded.entries.size() == cat.entries.size());
  for (size_t i = 0; i < cat.entries.size(); ++i) {
    CHECK(loaded.entries[i].key == cat.entries[i].key);
    CHECK(loaded.entries[i].algebra == cat.entries[i].algebra);
  }
  save_catalog(loaded, p2);
  CHECK(slurp(p1) == slurp(p2));
  std::remove(p1.c_str());
  std::remove(p2.c_str());
}

TEST_CASE("repeated generation is deterministic") {
  AlgebraCatalog a = generate(4), b = generate(4);
  REQUIRE(a.entries.size() == b.entries.size());
  for (size_t i = 0; i < a.entries.size(); ++i) {
    CHECK(a.entries[i].key == b.entries[i].key);
    CHECK(a.entries[i].algebra == b.entries[i].algebra);
  }
}

TEST_CASE("corrupted catalogs are rejected with the offending line") {
  AlgebraCatalog cat = generate(3);
  std::string path = "catalog_corrupt.jsonl";
  save_catalog(cat, path);
  std::string text = slurp(path);
  // break a table value inside the last entry
  size_t pos = text.rfind("\"meet\":[[");
  REQUIRE(pos != std::string::npos);
  text[pos + 9] = '9';
  std::ofstream(path, std::ios::binary) << text;
  CHECK_THROWS_AS(load_catalog(path), std::invalid_argument);
  try {
    load_catalog(path);
  } catch (const std::invalid_argument& ex) {
    CHECK(std::string(ex.what()).find("line") != std::string::npos);
  }
  std::remove(path.c_str());
}

TEST_CASE("keys are globally unique across sizes") {
  AlgebraCatalog cat = generate(4);
  std::vector<std::string> keys;
  for (const CatalogEntry& e : cat.entries) keys.push_back(e.key);
  std::sort(keys.begin(), keys.end());
  CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
}

TEST_CASE("known algebras appear in the catalog") {
  AlgebraCatalog cat = generate(4);
  for (const ResiduatedLattice& A :
       {goedel_chain(3), lukasiewicz_chain(3), goedel_chain(4), lukasiewicz_chain(4),
        boolean_algebra(2)}) {
    bool found = false;
    for (const CatalogEntry& e : cat.entries)
      if (e.key == canonical_form(A)) found = true;
    CHECK(found);
  }
}

TEST_CASE("oversized bounds are refused") {
  CHECK_THROWS_AS(generate(7), std::invalid_argument);
}
