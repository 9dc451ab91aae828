#ifndef RLW_ALGEBRA_HPP
#define RLW_ALGEBRA_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rlw/subsets.hpp"

namespace rlw {

using Elem = int;

/// A finite residuated lattice (L, meet, join, mono, impl, bottom, top)
/// with carrier {0, ..., n-1}. Tables are row-major n*n. Values are
/// immutable after validation and safe to share across threads.
struct ResiduatedLattice {
  int n = 0;
  std::vector<Elem> meet_t;
  std::vector<Elem> join_t;
  std::vector<Elem> mono_t;
  std::vector<Elem> impl_t;
  Elem bottom = 0;
  Elem top = 0;

  Elem meet(Elem x, Elem y) const { return meet_t[static_cast<size_t>(x) * n + y]; }
  Elem join(Elem x, Elem y) const { return join_t[static_cast<size_t>(x) * n + y]; }
  Elem mono(Elem x, Elem y) const { return mono_t[static_cast<size_t>(x) * n + y]; }
  Elem impl(Elem x, Elem y) const { return impl_t[static_cast<size_t>(x) * n + y]; }

  // Lattice order, derived from meet.
  bool leq(Elem x, Elem y) const { return meet(x, y) == x; }

  bool trivial() const { return n == 1; }
  Mask carrier() const { return full_mask(n); }

  bool operator==(const ResiduatedLattice& other) const = default;
};

struct AxiomViolation {
  std::string axiom;             // e.g. "mono-associative", "residuation"
  std::array<Elem, 3> witness;   // unused slots are -1
};

struct ValidationReport {
  std::vector<std::string> structural_errors;
  std::vector<AxiomViolation> violations;
  bool trivial = false;

  bool ok() const { return structural_errors.empty() && violations.empty(); }
};

/// Checks table shape first (structural errors), then every defining axiom
/// plus the derived laws R1..R7 as redundant cross-checks. Each violation
/// names the axiom and a witness tuple.
ValidationReport validate(const ResiduatedLattice& A);

// Standard families; every builder output passes validate().
ResiduatedLattice goedel_chain(int n);
ResiduatedLattice lukasiewicz_chain(int n);
ResiduatedLattice boolean_algebra(int num_atoms);  // 2^k elements
ResiduatedLattice product(const ResiduatedLattice& A, const ResiduatedLattice& B);

/// Relabels the carrier by `perm` (element x becomes perm[x]).
ResiduatedLattice relabel(const ResiduatedLattice& A, const std::vector<Elem>& perm);

/// Normal form: bottom = 0, top = n-1, remaining elements keep their relative
/// order. Inputs with arbitrary constant positions are accepted and mapped.
ResiduatedLattice normalized(const ResiduatedLattice& A);

/// A map between two residuated lattices. `map[x]` is the image of source
/// element x in the target.
struct Homomorphism {
  ResiduatedLattice source;
  ResiduatedLattice target;
  std::vector<Elem> map;

  Elem operator()(Elem x) const { return map[x]; }
};

Homomorphism identity_homomorphism(const ResiduatedLattice& A);

/// True iff the map preserves meet, join, mono, impl and both constants.
bool is_homomorphism(const Homomorphism& h);

/// Optionally reports the first failing equation: operation name and the
/// argument pair (pair.second = -1 for constants).
struct PreservationFailure {
  std::string operation;
  Elem x = -1, y = -1;
};
std::optional<PreservationFailure> preservation_failure(const Homomorphism& h);

/// Constant-fixing bijection search with degree-like pruning; exhaustive for
/// the sizes this project handles.
std::optional<Homomorphism> find_isomorphism(const ResiduatedLattice& A,
                                             const ResiduatedLattice& B);

/// Every homomorphism A -> B, as plain maps in lexicographic order. Simple
/// backtracking; meant for small carriers (universal-property checks).
std::vector<std::vector<Elem>> all_homomorphism_maps(const ResiduatedLattice& A,
                                                     const ResiduatedLattice& B);

/// Hex string, equal for two algebras iff they are isomorphic. Embeds the
/// size, so keys of different sizes never collide.
std::string canonical_form(const ResiduatedLattice& A);

}  // namespace rlw

#endif
