#ifndef RLW_FILTERS_HPP
#define RLW_FILTERS_HPP

#include <optional>
#include <vector>

#include "rlw/algebra.hpp"
#include "rlw/subsets.hpp"

namespace rlw {

/// Subset of a carrier that contains top, is closed under mono and upward
/// closed. Value type: `n` is the carrier size of the owning algebra, the
/// algebra itself is passed to each operation.
struct FilterSet {
  int n = 0;
  Mask members = 0;

  bool contains(Elem x) const { return rlw::contains(members, x); }
  int size() const { return popcount(members); }
  std::vector<int> indices() const { return mask_to_indices(members); }

  bool operator==(const FilterSet&) const = default;
};

/// Canonical order used everywhere filters are listed: cardinality first,
/// then the sorted index sequences lexicographically.
bool filter_less(const FilterSet& a, const FilterSet& b);

bool is_filter(const ResiduatedLattice& A, Mask members);

/// Also true when the subset is presented as a deductive system; the two
/// closure conditions are equivalent and both are checked in debug suites.
bool is_deductive_system(const ResiduatedLattice& A, Mask members);

/// Smallest filter containing `seed`.
FilterSet generated_filter(const ResiduatedLattice& A, Mask seed);

FilterSet upset(const ResiduatedLattice& A, Elem x);  // order filter; not always mono-closed

/// Complete, deduplicated, sorted with filter_less. Found by closure search
/// from {top}, adding one generator at a time; complete because every filter
/// is the closure of itself.
std::vector<FilterSet> enumerate_filters(const ResiduatedLattice& A);

/// Partition of the carrier; block ids are dense and numbered by first
/// occurrence, so equal partitions have equal block_of vectors.
struct CongruenceRelation {
  int n = 0;
  std::vector<int> block_of;

  int blocks() const;
  bool same(Elem x, Elem y) const { return block_of[x] == block_of[y]; }
  Mask block_mask(Elem x) const;

  bool operator==(const CongruenceRelation&) const = default;
};

CongruenceRelation identity_congruence(int n);
CongruenceRelation full_congruence(int n);

/// Renumbers blocks by first occurrence so that equality of partitions is
/// vector equality.
CongruenceRelation normalize_blocks(const std::vector<int>& block_of);

bool is_congruence(const ResiduatedLattice& A, const CongruenceRelation& theta);

/// theta_F: x ~ y iff mono(impl(x,y), impl(y,x)) is in F. Compatibility with
/// all four operations is re-verified before returning.
CongruenceRelation congruence_of_filter(const ResiduatedLattice& A, const FilterSet& F);

/// The block of top. Throws std::invalid_argument if theta is not a
/// congruence of A.
FilterSet filter_of_congruence(const ResiduatedLattice& A, const CongruenceRelation& theta);

Mask coset(const ResiduatedLattice& A, const FilterSet& F, Elem x);

struct QuotientResult {
  ResiduatedLattice algebra;    // normalized: bottom 0, top n-1
  Homomorphism projection;      // surjective, kernel F
};

QuotientResult quotient(const ResiduatedLattice& A, const FilterSet& F);

bool is_proper(const ResiduatedLattice& A, const FilterSet& F);

/// Proper and join-splitting: join(x,y) in F implies x in F or y in F.
bool is_prime(const ResiduatedLattice& A, const FilterSet& F);
std::vector<FilterSet> prime_filters(const ResiduatedLattice& A);

// Lattice of filters under inclusion: meet is intersection, join is the
// generated filter of the union.
FilterSet filter_meet(const ResiduatedLattice& A, const FilterSet& F, const FilterSet& G);
FilterSet filter_join(const ResiduatedLattice& A, const FilterSet& F, const FilterSet& G);

/// Cover pairs (i, j) with filters[i] covered by filters[j], for Hasse
/// diagrams and join-irreducibility.
std::vector<std::pair<int, int>> filter_lattice_covers(const std::vector<FilterSet>& filters);

/// Filters with exactly one lower cover in the filter lattice (excludes the
/// minimum {top}).
std::vector<FilterSet> join_irreducible_filters(const ResiduatedLattice& A);

/// The unique irredundant antichain of join-irreducible filters whose join
/// is F: the maximal join-irreducibles below F. Rejects F = {top}.
std::vector<FilterSet> irredundant_decomposition(const ResiduatedLattice& A, const FilterSet& F);

/// All congruences, obtained through the filter correspondence; order matches
/// enumerate_filters.
std::vector<CongruenceRelation> enumerate_congruences(const ResiduatedLattice& A);

/// { x : h(x) = top of target }. Throws std::invalid_argument if h is not a
/// homomorphism.
FilterSet kernel(const Homomorphism& h);

}  // namespace rlw

#endif
