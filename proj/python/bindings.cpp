// Python surface over the core: algebra builders and serialization, filter
// and topology queries, completions, structure analysis, catalog counts.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rlw/analysis.hpp"
#include "rlw/catalog.hpp"
#include "rlw/json_io.hpp"
#include "rlw/limits.hpp"
#include "rlw/topology.hpp"

namespace py = pybind11;
using namespace rlw;

namespace {

FilterSet filter_from_indices(const ResiduatedLattice& A, const std::vector<int>& indices) {
  Mask m = 0;
  for (int x : indices) {
    if (x < 0 || x >= A.n) throw std::invalid_argument("filter element out of range");
    m |= bit(x);
  }
  if (!is_filter(A, m)) throw std::invalid_argument("not a filter of this algebra");
  return FilterSet{A.n, m};
}

std::vector<std::vector<int>> filters_as_lists(const std::vector<FilterSet>& filters) {
  std::vector<std::vector<int>> out;
  for (const FilterSet& F : filters) out.push_back(F.indices());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "finite residuated lattice workbench";

  py::class_<ResiduatedLattice>(m, "Algebra")
      .def_readonly("size", &ResiduatedLattice::n)
      .def("to_json", [](const ResiduatedLattice& A) { return algebra_to_json(A).dump(); })
      .def("canonical_key", [](const ResiduatedLattice& A) { return canonical_form(A); })
      .def("__eq__",
           [](const ResiduatedLattice& A, const ResiduatedLattice& B) { return A == B; })
      .def("__repr__", [](const ResiduatedLattice& A) {
        return "<Algebra of size " + std::to_string(A.n) + ">";
      });

  m.def("goedel_chain", &goedel_chain, py::arg("n"));
  m.def("lukasiewicz_chain", &lukasiewicz_chain, py::arg("n"));
  m.def("boolean_algebra", &boolean_algebra, py::arg("num_atoms"));
  m.def("product", &product, py::arg("a"), py::arg("b"));

  m.def("from_json", [](const std::string& text) {
    return algebra_from_json(Json::parse(text, nullptr, true));
  });

  m.def("validate_errors", [](const ResiduatedLattice& A) {
    ValidationReport r = validate(A);
    std::vector<std::string> out = r.structural_errors;
    for (const AxiomViolation& v : r.violations) {
      std::string s = v.axiom + " at (";
      bool first = true;
      for (Elem x : v.witness)
        if (x >= 0) {
          s += (first ? "" : ",") + std::to_string(x);
          first = false;
        }
      out.push_back(s + ")");
    }
    return out;
  });

  m.def("filters",
        [](const ResiduatedLattice& A) { return filters_as_lists(enumerate_filters(A)); });
  m.def("prime_filters",
        [](const ResiduatedLattice& A) { return filters_as_lists(prime_filters(A)); });

  m.def("quotient", [](const ResiduatedLattice& A, const std::vector<int>& filter) {
    return quotient(A, filter_from_indices(A, filter)).algebra;
  });

  m.def("min_neighborhoods",
        [](const ResiduatedLattice& A, const std::vector<std::vector<int>>& system) {
          SystemOfFilters filters;
          for (const std::vector<int>& f : system) filters.push_back(filter_from_indices(A, f));
          FiniteTopology T = induce_topology(A, filters);
          std::vector<std::vector<int>> out;
          for (Elem x = 0; x < A.n; ++x) out.push_back(mask_to_indices(T.min_nbhd[x]));
          return out;
        });

  m.def("zltrl_count",
        [](const ResiduatedLattice& A) { return enumerate_zltrl(A).size(); });

  m.def("completion", [](const ResiduatedLattice& A) {
    CompletionResult c = profinite_completion(A);
    py::dict d;
    d["size"] = c.limit.algebra.n;
    d["filter_count"] = c.filters.size();
    d["algebra"] = c.limit.algebra;
    d["isomorphism"] = !preservation_failure(c.e) && c.limit.algebra.n == A.n;
    return d;
  });

  m.def("analyze", [](const ResiduatedLattice& A) {
    StructureReport s = analyze(A);
    py::dict d;
    d["key"] = s.algebra_key;
    d["size"] = s.size;
    d["simple"] = s.is_simple;
    d["subdirectly_irreducible"] = s.is_subdirectly_irreducible;
    d["directly_indecomposable"] = s.is_directly_indecomposable;
    d["monolith"] = s.monolith ? py::object(py::cast(s.monolith->indices())) : py::none();
    d["dimension"] = s.dimension;
    d["filter_count"] = s.filter_count;
    d["prime_count"] = s.prime_count;
    return d;
  });

  m.def("catalog_counts", [](int size_bound) {
    return generate(size_bound).stats.algebra_counts;
  });
}
