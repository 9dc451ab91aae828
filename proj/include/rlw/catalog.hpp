#ifndef RLW_CATALOG_HPP
#define RLW_CATALOG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rlw/algebra.hpp"
#include "rlw/analysis.hpp"

namespace rlw {

/// Bounded lattice skeleton: meet and join tables only, bottom 0, top n-1.
struct BoundedLattice {
  int n = 0;
  std::vector<Elem> meet_t;
  std::vector<Elem> join_t;

  Elem meet(Elem x, Elem y) const { return meet_t[static_cast<size_t>(x) * n + y]; }
  Elem join(Elem x, Elem y) const { return join_t[static_cast<size_t>(x) * n + y]; }
  bool leq(Elem x, Elem y) const { return meet(x, y) == x; }
};

/// All bounded lattices on n points up to isomorphism, bottom 0 and top n-1,
/// one canonical representative each, deterministically ordered. Scans the
/// 3^C(n-2,2) orientation assignments on the interior and keeps transitive
/// ones with all meets and joins defined.
std::vector<BoundedLattice> enumerate_bounded_lattices(int n);

/// Every residuated multiplication on the given lattice skeleton (labeled,
/// no isomorphism pruning): commutative, associative, top-unital, monotone
/// tables whose residuals exist. The residual table is derived as
/// impl(y,z) = max{x : mono(x,y) <= z} and every output passes validate.
std::vector<ResiduatedLattice> residuated_completions(const BoundedLattice& L);

struct GenerationStats {
  std::vector<std::uint64_t> lattice_counts;  // index 0 holds size 1
  std::vector<std::uint64_t> algebra_counts;
  std::uint64_t tables_accepted = 0;  // labeled completions before dedup
};

struct CatalogEntry {
  std::string key;  // canonical_form
  ResiduatedLattice algebra;
  StructureReport structure;
};

struct AlgebraCatalog {
  int size_bound = 0;
  std::vector<CatalogEntry> entries;  // sorted by (size, key)
  GenerationStats stats;
};

/// Complete up to isomorphism for sizes 1..size_bound. Deterministic:
/// repeated runs produce identical catalogs. Refuses bounds above 6.
AlgebraCatalog generate(int size_bound);

/// Convenience view: the algebras of one size, in catalog order.
std::vector<ResiduatedLattice> catalog_algebras(const AlgebraCatalog& cat, int size);

/// JSON-lines persistence: one metadata header line, then one entry per
/// line. save/load round-trips byte-identically; load re-validates every
/// entry and reports the offending line on failure.
void save_catalog(const AlgebraCatalog& cat, const std::string& path);
AlgebraCatalog load_catalog(const std::string& path);

}  // namespace rlw

#endif
