#ifndef RLW_TOPOLOGY_HPP
#define RLW_TOPOLOGY_HPP

#include <optional>
#include <string>
#include <vector>

#include "rlw/algebra.hpp"
#include "rlw/filters.hpp"
#include "rlw/subsets.hpp"

namespace rlw {

/// Finite topology stored as the minimal-neighborhood map of its
/// specialization preorder; lossless since every finite topology is
/// Alexandrov. U is open iff N(x) is contained in U for every x in U.
struct FiniteTopology {
  int n = 0;
  std::vector<Mask> min_nbhd;

  Mask nbhd(Elem x) const { return min_nbhd[x]; }
  bool is_open(Mask u) const;
  bool is_closed(Mask u) const { return is_open(~u & full_mask(n)); }
  bool is_discrete() const;
  bool is_antidiscrete() const;

  bool operator==(const FiniteTopology&) const = default;
};

/// x in N(x), and y in N(x) implies N(y) subset of N(x).
bool alexandrov_consistent(const FiniteTopology& T);

FiniteTopology discrete_topology(int n);
FiniteTopology antidiscrete_topology(int n);

/// All open sets by scanning every subset; guarded to n <= 20. Serves as the
/// from-first-principles route for the separation classifiers.
std::vector<Mask> all_open_sets(const FiniteTopology& T);

/// Nonempty down-directed family of filters of one algebra.
using SystemOfFilters = std::vector<FilterSet>;

/// Witness (i, j) of members with no member below their intersection;
/// nullopt when the family is down-directed.
std::optional<std::pair<int, int>> directedness_violation(const SystemOfFilters& system);

/// nullopt for the empty or non-down-directed family.
std::optional<FilterSet> minimum_member(const SystemOfFilters& system);

/// Linear topology of a system: N(x) is the coset of x under the minimum
/// member (a down-directed finite family always has one). Throws
/// std::invalid_argument with the witness pair when the family is not
/// down-directed or is empty.
FiniteTopology induce_topology(const ResiduatedLattice& A, const SystemOfFilters& system);

/// The quantifier form { U : for all x in U there is F in the system with
/// x/F subset of U }, computed without the minimum-member shortcut; the two
/// routes are compared in the self-test suites.
std::vector<Mask> induced_open_sets_by_definition(const ResiduatedLattice& A,
                                                  const SystemOfFilters& system);

enum class SeparationClass { none, T0, T1, T2 };

/// Strongest axiom satisfied, each axiom decided independently from the full
/// open-set list.
SeparationClass separation_class(const FiniteTopology& T);

bool satisfies_t0(const FiniteTopology& T);
bool satisfies_t1(const FiniteTopology& T);
bool satisfies_t2(const FiniteTopology& T);

/// True iff the family's intersection is {top}; asserts agreement with the
/// open-set classifier on the induced topology.
bool is_hausdorff(const ResiduatedLattice& A, const SystemOfFilters& system);

struct ContinuityReport {
  bool ok = true;
  std::string operation;  // violating op when !ok
  Elem x = -1, y = -1;
};

/// All four operations continuous: op(N(a) x N(b)) subset of N(op(a,b)).
/// For Alexandrov topologies this containment is equivalent to continuity.
ContinuityReport check_topological_algebra(const ResiduatedLattice& A,
                                           const FiniteTopology& T);

/// All zero-dimensional linear topologies making A a topological residuated
/// lattice. Scans every partition of the carrier (zero-dimensional finite
/// spaces are exactly the partition topologies), keeps those whose block of
/// top is a filter and whose operations are continuous. The identification
/// with simple filter topologies is asserted downstream, not used to prune.
std::vector<FiniteTopology> enumerate_zltrl(const ResiduatedLattice& A);

bool is_open_filter(const ResiduatedLattice& A, const FiniteTopology& T, const FilterSet& F);
bool is_closed_filter(const ResiduatedLattice& A, const FiniteTopology& T, const FilterSet& F);

struct CosetOpennessReport {
  bool filter_open = false;
  bool filter_closed = false;
  bool all_cosets_open = false;
  bool all_cosets_closed = false;
};

/// Cross-checks: F open iff every coset open (same for closed), and in the
/// finite case open iff closed. Throws std::logic_error if the equivalences
/// fail.
CosetOpennessReport coset_openness(const ResiduatedLattice& A, const FiniteTopology& T,
                                   const FilterSet& F);

/// Supremum of Alexandrov topologies: N(x) = intersection of the inputs'
/// N(x).
FiniteTopology sup_topologies(const std::vector<FiniteTopology>& topologies);

/// T is coarser than (or equal to) U: every open of T is open in U.
bool topology_coarser_equal(const FiniteTopology& T, const FiniteTopology& U);

/// Mutual coinitiality: every member of each family contains a member of the
/// other. Equivalent systems induce equal topologies (asserted).
bool systems_equivalent(const ResiduatedLattice& A, const SystemOfFilters& s1,
                        const SystemOfFilters& s2);

}  // namespace rlw

#endif
