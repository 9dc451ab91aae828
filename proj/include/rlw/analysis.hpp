#ifndef RLW_ANALYSIS_HPP
#define RLW_ANALYSIS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rlw/algebra.hpp"
#include "rlw/filters.hpp"
#include "rlw/topology.hpp"

namespace rlw {

/// Binary relation on {0,...,n-1} as adjacency rows: rows[x] has bit y set
/// iff (x,y) is in the relation.
struct Relation {
  int n = 0;
  std::vector<Mask> rows;

  bool has(Elem x, Elem y) const { return contains(rows[x], y); }
  bool operator==(const Relation&) const = default;
};

Relation diagonal_relation(int n);
Relation relation_of_congruence(const CongruenceRelation& theta);
Relation compose(const Relation& r, const Relation& s);  // r then s
Relation inverse(const Relation& r);
Relation intersect(const Relation& r, const Relation& s);
bool relation_subset(const Relation& r, const Relation& s);

/// Smallest equivalence containing both; for permuting congruences this is
/// just the composite.
Relation transitive_join(const Relation& r, const Relation& s);

struct SubdirectIrreducibility {
  bool verdict = false;
  std::optional<FilterSet> monolith;  // minimum nontrivial filter, when it exists
};

/// True for the trivial algebra and whenever the nontrivial filters have a
/// minimum (the monolith's filter).
SubdirectIrreducibility is_subdirectly_irreducible(const ResiduatedLattice& A);

bool is_simple(const ResiduatedLattice& A);

struct IndecomposabilityReport {
  bool verdict = false;
  bool by_down_directedness = false;  // nontrivial filters form a directed family
  bool by_intersections = false;      // no intersection of them collapses to {top}
  bool by_factor_congruences = false; // no nontrivial factor-congruence pair
  bool by_product_search = false;     // no isomorphism onto a nontrivial product
  // set when decomposable:
  std::optional<std::pair<CongruenceRelation, CongruenceRelation>> factor_pair;
  std::optional<std::pair<FilterSet, FilterSet>> product_filters;

  // True when the filter tests report a collapse but the algebra still has no
  // decomposition. Five elements suffice for this: two incomparable filters
  // can meet in {top} while their join stays proper, so no factor pair forms.
  bool intersection_gap() const { return verdict && !by_intersections; }
};

/// Runs four decomposability tests. The two filter tests (down-directedness
/// and intersection scan) compute the same fact two ways, as do the two exact
/// tests (factor-congruence pairs and product search); each pair must agree
/// internally, and a collapse-free filter family forces indecomposability,
/// since projection kernels of any factorization intersect trivially. Those
/// three relations are asserted and their violation throws std::logic_error.
/// The converse is not asserted: a collapse does not guarantee a
/// factorization (see IndecomposabilityReport::intersection_gap), so the
/// verdict follows the exact tests. Requires A nontrivial.
IndecomposabilityReport is_directly_indecomposable(const ResiduatedLattice& A);

/// Length of the longest strictly increasing chain of prime filters, counted
/// by steps: a maximal chain with k+1 members yields k.
int dimension(const ResiduatedLattice& A);

struct GlobalTopologyReport {
  bool applicable = false;   // nontrivial and directly indecomposable
  bool si = false;
  bool global_nondiscrete = false;
  bool largest_nondiscrete_exists = false;
  FiniteTopology global_topology;            // generated by all nontrivial filters
  std::optional<FiniteTopology> largest_nondiscrete;
};

/// For directly indecomposable A: builds the topology generated by all
/// nontrivial filters (the intersection filter's topology, since joins of
/// linear topologies intersect their filters) and asserts SI <=>
/// non-discrete <=> a largest non-discrete zero-dimensional linear topology
/// exists (it is the monolith's). Inapplicable algebras are reported, not
/// rejected.
GlobalTopologyReport global_system_topology_verdict(const ResiduatedLattice& A);

struct HausdorffExistenceReport {
  bool applicable = false;                 // false only for the trivial algebra
  int nontrivial_hausdorff_count = 0;      // asserted zero
  bool finite_index_topology_discrete = false;
  bool finite_index_topology_hausdorff = false;
};

/// Scans every zero-dimensional linear topology for Hausdorff members that
/// are neither discrete nor antidiscrete (none exist on a finite carrier)
/// and checks that the topology induced by all filters is discrete and
/// Hausdorff.
HausdorffExistenceReport hausdorff_existence_verdict(const ResiduatedLattice& A);

struct UniformBaseReport {
  bool diagonal_ok = false;      // (a) every member contains the diagonal
  bool directed_ok = false;      // (b) some member below each intersection
  bool symmetry_ok = false;      // (c) some member inside each inverse
  bool composition_ok = false;   // (d) some member whose self-composite fits
  std::string witness;           // first failure, human-readable

  bool ok() const { return diagonal_ok && directed_ok && symmetry_ok && composition_ok; }
};

/// Uniformity base conditions (a)-(d) for a nonempty family of relations on
/// one carrier.
UniformBaseReport uniform_base_check(const std::vector<Relation>& relations);

/// theta o theta' = theta' o theta for every pair of congruences of A.
bool permutability_check(const ResiduatedLattice& A);

struct DccReport {
  std::vector<int> chain_lengths;          // one per maximal descending chain
  bool every_chain_stabilizes = false;     // trivially true at finite scale
  bool every_directed_family_has_minimum = false;
};

/// Walks every maximal strictly descending chain of filters and every
/// down-directed subfamily of the filter lattice (subset scan), confirming
/// stabilization and minima.
DccReport dcc_report(const ResiduatedLattice& A);

struct StructureReport {
  std::string algebra_key;  // canonical form
  int size = 0;
  bool is_simple = false;
  bool is_subdirectly_irreducible = false;
  bool is_directly_indecomposable = false;
  std::optional<FilterSet> monolith;
  int dimension = 0;        // 0 for the trivial algebra
  int filter_count = 0;
  int prime_count = 0;
};

StructureReport analyze(const ResiduatedLattice& A);

}  // namespace rlw

#endif
