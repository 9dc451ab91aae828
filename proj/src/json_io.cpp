#include "rlw/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace rlw {

namespace {

std::vector<Elem> table_from_json(const Json& j, const char* name, int n) {
  if (!j.contains(name) || !j[name].is_array() || j[name].size() != static_cast<size_t>(n))
    throw std::invalid_argument(std::string("field '") + name + "' must be an " +
                                std::to_string(n) + "x" + std::to_string(n) + " array");
  std::vector<Elem> t;
  t.reserve(static_cast<size_t>(n) * n);
  for (const Json& row : j[name]) {
    if (!row.is_array() || row.size() != static_cast<size_t>(n))
      throw std::invalid_argument(std::string("field '") + name + "' must be an " +
                                  std::to_string(n) + "x" + std::to_string(n) + " array");
    for (const Json& v : row) {
      if (!v.is_number_integer())
        throw std::invalid_argument(std::string("field '") + name + "' has a non-integer entry");
      int x = v.get<int>();
      if (x < 0 || x >= n)
        throw std::invalid_argument(std::string("field '") + name + "' entry out of range");
      t.push_back(x);
    }
  }
  return t;
}

Json table_to_json(const std::vector<Elem>& t, int n) {
  Json rows = Json::array();
  for (int i = 0; i < n; ++i) {
    Json row = Json::array();
    for (int j = 0; j < n; ++j) row.push_back(t[static_cast<size_t>(i) * n + j]);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json algebra_to_json(const ResiduatedLattice& A) {
  Json j;
  j["size"] = A.n;
  j["meet"] = table_to_json(A.meet_t, A.n);
  j["join"] = table_to_json(A.join_t, A.n);
  j["mono"] = table_to_json(A.mono_t, A.n);
  j["impl"] = table_to_json(A.impl_t, A.n);
  j["bottom"] = A.bottom;
  j["top"] = A.top;
  return j;
}

ResiduatedLattice algebra_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("algebra must be a JSON object");
  if (!j.contains("size") || !j["size"].is_number_integer())
    throw std::invalid_argument("field 'size' must be an integer");
  int n = j["size"].get<int>();
  if (n < 1 || n > kMaxSubsetCarrier)
    throw std::invalid_argument("field 'size' out of supported range");
  ResiduatedLattice A;
  A.n = n;
  A.meet_t = table_from_json(j, "meet", n);
  A.join_t = table_from_json(j, "join", n);
  A.mono_t = table_from_json(j, "mono", n);
  A.impl_t = table_from_json(j, "impl", n);
  for (const char* name : {"bottom", "top"})
    if (!j.contains(name) || !j[name].is_number_integer())
      throw std::invalid_argument(std::string("field '") + name + "' must be an integer");
  A.bottom = j["bottom"].get<int>();
  A.top = j["top"].get<int>();
  if (A.bottom < 0 || A.bottom >= n) throw std::invalid_argument("field 'bottom' out of range");
  if (A.top < 0 || A.top >= n) throw std::invalid_argument("field 'top' out of range");
  if (n > 1 && A.bottom == A.top)
    throw std::invalid_argument("bottom and top must differ on a multi-element carrier");
  return normalized(A);
}

Json filter_to_json(const FilterSet& F) {
  Json arr = Json::array();
  for (int i : F.indices()) arr.push_back(i);
  return arr;
}

FilterSet filter_from_json(const Json& j, int carrier_size) {
  if (!j.is_array()) throw std::invalid_argument("filter must be an array of indices");
  Mask m = 0;
  for (const Json& v : j) {
    if (!v.is_number_integer()) throw std::invalid_argument("filter entry must be an integer");
    int x = v.get<int>();
    if (x < 0 || x >= carrier_size) throw std::invalid_argument("filter entry out of range");
    m |= bit(x);
  }
  return FilterSet{carrier_size, m};
}

Json topology_to_json(const FiniteTopology& T) {
  Json j;
  j["n"] = T.n;
  Json nbhd = Json::array();
  for (Elem x = 0; x < T.n; ++x) {
    Json row = Json::array();
    for (int i : mask_to_indices(T.min_nbhd[x])) row.push_back(i);
    nbhd.push_back(std::move(row));
  }
  j["min_nbhd"] = std::move(nbhd);
  return j;
}

FiniteTopology topology_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw std::invalid_argument("topology needs an integer field 'n'");
  int n = j["n"].get<int>();
  if (n < 1 || n > kMaxSubsetCarrier)
    throw std::invalid_argument("field 'n' out of supported range");
  if (!j.contains("min_nbhd") || !j["min_nbhd"].is_array() ||
      j["min_nbhd"].size() != static_cast<size_t>(n))
    throw std::invalid_argument("field 'min_nbhd' must list one neighborhood per element");
  FiniteTopology T{n, std::vector<Mask>(n, 0)};
  for (int x = 0; x < n; ++x) {
    const Json& row = j["min_nbhd"][x];
    if (!row.is_array()) throw std::invalid_argument("neighborhoods must be index arrays");
    for (const Json& v : row) {
      if (!v.is_number_integer()) throw std::invalid_argument("neighborhood entry must be an integer");
      int y = v.get<int>();
      if (y < 0 || y >= n) throw std::invalid_argument("neighborhood entry out of range");
      T.min_nbhd[x] |= bit(y);
    }
  }
  if (!alexandrov_consistent(T))
    throw std::invalid_argument("min_nbhd is not a minimal-neighborhood map");
  return T;
}

Json system_to_json(const InverseSystem& S) {
  Json j;
  Json poset;
  Json elements = Json::array();
  for (int i = 0; i < S.index.size; ++i) elements.push_back(i);
  poset["elements"] = std::move(elements);
  Json leq = Json::array();
  for (int i = 0; i < S.index.size; ++i)
    for (int k = 0; k < S.index.size; ++k)
      if (i != k && S.index.leq(i, k)) leq.push_back(Json::array({i, k}));
  poset["leq"] = std::move(leq);
  j["poset"] = std::move(poset);

  Json algebras;
  for (int i = 0; i < S.index.size; ++i)
    algebras[std::to_string(i)] = algebra_to_json(S.algebras[i]);
  j["algebras"] = std::move(algebras);

  Json transitions = Json::array();
  for (const auto& [key, map] : S.transitions) {
    if (key.first == key.second) continue;
    Json t;
    t["from"] = key.first;
    t["to"] = key.second;
    t["map"] = map;
    transitions.push_back(std::move(t));
  }
  j["transitions"] = std::move(transitions);
  return j;
}

InverseSystem system_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("poset") || !j["poset"].is_object())
    throw std::invalid_argument("system needs an object field 'poset'");
  const Json& poset = j["poset"];
  if (!poset.contains("elements") || !poset["elements"].is_array())
    throw std::invalid_argument("poset needs an array field 'elements'");
  int m = static_cast<int>(poset["elements"].size());
  if (m < 1) throw std::invalid_argument("poset must be non-empty");
  for (int i = 0; i < m; ++i)
    if (!poset["elements"][i].is_number_integer() || poset["elements"][i].get<int>() != i)
      throw std::invalid_argument("poset elements must be 0..size-1 in order");

  InverseSystem S;
  S.index.size = m;
  S.index.leq_t.assign(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i) S.index.leq_t[i][i] = true;
  if (!poset.contains("leq") || !poset["leq"].is_array())
    throw std::invalid_argument("poset needs an array field 'leq'");
  for (const Json& pair : poset["leq"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer())
      throw std::invalid_argument("leq entries must be [i, j] pairs");
    int a = pair[0].get<int>(), b = pair[1].get<int>();
    if (a < 0 || a >= m || b < 0 || b >= m)
      throw std::invalid_argument("leq pair out of range");
    S.index.leq_t[a][b] = true;
  }
  // Transitive closure; defects (antisymmetry, directedness) surface later
  // through poset_defects with their witnesses.
  for (int k = 0; k < m; ++k)
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        if (S.index.leq_t[a][k] && S.index.leq_t[k][b]) S.index.leq_t[a][b] = true;

  if (!j.contains("algebras") || !j["algebras"].is_object())
    throw std::invalid_argument("system needs an object field 'algebras'");
  S.algebras.resize(m);
  for (int i = 0; i < m; ++i) {
    std::string key = std::to_string(i);
    if (!j["algebras"].contains(key))
      throw std::invalid_argument("missing algebra for index " + key);
    S.algebras[i] = algebra_from_json(j["algebras"][key]);
  }

  if (!j.contains("transitions") || !j["transitions"].is_array())
    throw std::invalid_argument("system needs an array field 'transitions'");
  for (const Json& t : j["transitions"]) {
    if (!t.is_object() || !t.contains("from") || !t.contains("to") || !t.contains("map"))
      throw std::invalid_argument("each transition needs 'from', 'to', 'map'");
    int from = t["from"].get<int>(), to = t["to"].get<int>();
    if (from < 0 || from >= m || to < 0 || to >= m)
      throw std::invalid_argument("transition index out of range");
    if (!S.index.leq(to, from))
      throw std::invalid_argument("transition (" + std::to_string(from) + " -> " +
                                  std::to_string(to) + ") does not follow the order");
    if (!t["map"].is_array() || t["map"].size() != static_cast<size_t>(S.algebras[from].n))
      throw std::invalid_argument("transition map size mismatch");
    std::vector<Elem> map;
    for (const Json& v : t["map"]) {
      int x = v.get<int>();
      if (x < 0 || x >= S.algebras[to].n)
        throw std::invalid_argument("transition map value out of range");
      map.push_back(x);
    }
    S.transitions[{from, to}] = std::move(map);
  }
  for (int i = 0; i < m; ++i) {
    std::vector<Elem> id(S.algebras[i].n);
    for (Elem x = 0; x < S.algebras[i].n; ++x) id[x] = x;
    S.transitions.try_emplace({i, i}, std::move(id));
  }
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k)
      if (i != k && S.index.leq(k, i) && !S.transitions.count({i, k}))
        throw std::invalid_argument("missing transition (" + std::to_string(i) + " -> " +
                                    std::to_string(k) + ")");
  return S;
}

std::string filter_lattice_dot(const ResiduatedLattice& A) {
  std::vector<FilterSet> filters = enumerate_filters(A);
  std::ostringstream dot;
  dot << "digraph filters {\n  rankdir=BT;\n  node [shape=box];\n";
  for (size_t i = 0; i < filters.size(); ++i) {
    dot << "  f" << i << " [label=\"{";
    std::vector<int> idx = filters[i].indices();
    for (size_t k = 0; k < idx.size(); ++k) dot << (k ? "," : "") << idx[k];
    dot << "}\"];\n";
  }
  for (auto [lo, hi] : filter_lattice_covers(filters))
    dot << "  f" << lo << " -> f" << hi << ";\n";
  dot << "}\n";
  return dot.str();
}

std::string specialization_dot(const FiniteTopology& T) {
  std::ostringstream dot;
  dot << "digraph specialization {\n";
  for (Elem x = 0; x < T.n; ++x) dot << "  e" << x << " [label=\"" << x << "\"];\n";
  for (Elem x = 0; x < T.n; ++x)
    for (Elem y = 0; y < T.n; ++y)
      if (x != y && contains(T.min_nbhd[x], y)) dot << "  e" << x << " -> e" << y << ";\n";
  dot << "}\n";
  return dot.str();
}

}  // namespace rlw
