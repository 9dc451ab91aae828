#ifndef RLW_LIMITS_HPP
#define RLW_LIMITS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rlw/algebra.hpp"
#include "rlw/filters.hpp"
#include "rlw/topology.hpp"

namespace rlw {

/// Finite poset on {0, ..., size-1} where every pair has an upper bound in
/// the set; such a poset always has a maximum element.
struct DirectedPoset {
  int size = 0;
  std::vector<std::vector<bool>> leq_t;  // leq_t[i][j]: i <= j

  bool leq(int i, int j) const { return leq_t[i][j]; }
};

/// Empty list when valid; otherwise human-readable defects (reflexivity,
/// antisymmetry, transitivity, directedness) with witnesses.
std::vector<std::string> poset_defects(const DirectedPoset& P);

/// Greatest element; exists for every valid finite directed poset.
int maximum_of(const DirectedPoset& P);

/// Indices of a linear extension, largest elements first.
std::vector<int> descending_order(const DirectedPoset& P);

/// Algebras over a directed index poset with transition maps downward:
/// transition(i, j) for j <= i maps algebras[i] into algebras[j]. Identity
/// transitions are stored explicitly.
struct InverseSystem {
  DirectedPoset index;
  std::vector<ResiduatedLattice> algebras;
  std::map<std::pair<int, int>, std::vector<Elem>> transitions;  // key (i, j), j <= i

  const std::vector<Elem>& transition(int i, int j) const { return transitions.at({i, j}); }
};

/// Empty list when valid; otherwise defects: missing or non-homomorphic
/// transitions, identity failures, or a failing commuting triangle (i,j,k).
std::vector<std::string> system_defects(const InverseSystem& S);

/// Compatible choice: tuple[i] in algebras[i] with transition(i,j)(tuple[i])
/// = tuple[j] for all j <= i.
struct Thread {
  std::vector<Elem> tuple;

  bool operator==(const Thread&) const = default;
  auto operator<=>(const Thread&) const = default;
};

struct LimitResult {
  ResiduatedLattice algebra;         // carrier indexes `threads`
  std::vector<Thread> threads;       // sorted lexicographically
  std::vector<Homomorphism> projections;  // one per index element
};

/// Threads under componentwise operations. Backtracks over indices largest
/// first, propagating transition constraints. Throws std::invalid_argument
/// on invalid systems and when the full product exceeds `tuple_bound`.
LimitResult inverse_limit(const InverseSystem& S, std::uint64_t tuple_bound = 1000000);

/// Directedness/cofinality check for keep[] as a subset of S's index poset:
/// nullopt when fine, otherwise an index of S with no upper bound in the
/// subset (non-cofinal) or a pair without an upper bound (non-directed).
std::optional<std::string> cofinality_defect(const InverseSystem& S,
                                             const std::vector<int>& keep);

/// Restriction to a directed cofinal subset of indices, reindexed in
/// ascending order of `keep`. Throws std::invalid_argument with the witness
/// when `keep` is not directed or not cofinal.
InverseSystem cofinal_restrict(const InverseSystem& S, const std::vector<int>& keep);

/// Inverse system of the quotients by `filters`, ordered by reverse
/// inclusion (the index for F is below the index for G iff F contains G).
/// The family must be closed enough to be directed; all filters of an
/// algebra always are, as is any family closed under intersection, and any
/// down-directed family.
InverseSystem filter_system(const ResiduatedLattice& A, const std::vector<FilterSet>& filters);

struct CompletionResult {
  std::vector<FilterSet> filters;  // completion index, canonical order
  LimitResult limit;
  Homomorphism e;                  // a |-> (a/F)_F, from A into the limit
};

/// Limit over all filters of A. For finite A the canonical map e is an
/// isomorphism, which is asserted.
CompletionResult profinite_completion(const ResiduatedLattice& A);

struct SubdirectResult {
  // Materialized product target and map, present when the combined carrier
  // fits the subset-mask bound; the componentwise verification does not
  // depend on it.
  std::optional<Homomorphism> embedding;
  bool injective = false;
};

/// Componentwise quotient map into quotient(A,F1) x ... x quotient(A,Fk).
/// Each projection is verified to preserve the operations, which verifies the
/// tuple map as well since product operations act per component; when the
/// combined size allows it, the product is also built outright (nested left
/// to right) and rechecked against the tuples. Injectivity is reported, not
/// required.
SubdirectResult subdirect_embedding(const ResiduatedLattice& A,
                                    const std::vector<FilterSet>& family);

struct CertificateResult {
  bool exists = false;
  std::vector<FilterSet> certificate;  // minimum clopen filter, as a singleton
  std::optional<std::pair<Elem, Elem>> unseparated;  // witness on refutation
};

/// True iff `cert` consists of clopen filters, is down-directed, and
/// separates points by cosets.
bool is_valid_certificate(const ResiduatedLattice& A, const FiniteTopology& T,
                          const std::vector<FilterSet>& cert);

/// Searches for a down-directed point-separating set of clopen filters. The
/// set of all clopen filters is down-directed and separates whatever any
/// subset separates, so scanning it decides existence; the minimum clopen
/// filter alone is returned as the certificate. Cross-checks the finite-case
/// equivalence (certificate <=> Hausdorff <=> discrete <=> subdirect
/// embedding) whenever T makes A a topological algebra, throwing
/// std::logic_error on divergence.
CertificateResult profiniteness_certificate(const ResiduatedLattice& A,
                                            const FiniteTopology& T);

/// Valid random system built as quotients of a random small base algebra by
/// an antitone assignment of filters, with carriers shuffled so transitions
/// are not plain coset maps. Deterministic in the seed.
InverseSystem random_inverse_system(std::mt19937& rng, int max_indices = 4,
                                    int max_algebra_size = 3);

}  // namespace rlw

#endif
