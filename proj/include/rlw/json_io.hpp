#ifndef RLW_JSON_IO_HPP
#define RLW_JSON_IO_HPP

#include <string>

#include "json.hpp"
#include "rlw/algebra.hpp"
#include "rlw/filters.hpp"
#include "rlw/limits.hpp"
#include "rlw/topology.hpp"

namespace rlw {

// ordered_json keeps insertion order, which keeps every emitted file
// byte-reproducible.
using Json = nlohmann::ordered_json;

Json algebra_to_json(const ResiduatedLattice& A);

/// Accepts arbitrary bottom/top positions and returns the algebra in normal
/// form (bottom 0, top n-1). Shape problems throw std::invalid_argument;
/// axioms are not checked here.
ResiduatedLattice algebra_from_json(const Json& j);

Json filter_to_json(const FilterSet& F);  // sorted index array
FilterSet filter_from_json(const Json& j, int carrier_size);

Json topology_to_json(const FiniteTopology& T);
FiniteTopology topology_from_json(const Json& j);

Json system_to_json(const InverseSystem& S);

/// Requires a transition entry for every comparable pair i > j; identity
/// transitions may be omitted and are synthesized.
InverseSystem system_from_json(const Json& j);

/// Hasse diagram of the filter lattice.
std::string filter_lattice_dot(const ResiduatedLattice& A);

/// Specialization preorder of a finite topology: an arrow x -> y whenever y
/// lies in every open set around x.
std::string specialization_dot(const FiniteTopology& T);

}  // namespace rlw

#endif
