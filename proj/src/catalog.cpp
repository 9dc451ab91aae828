#include "rlw/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rlw/json_io.hpp"

namespace rlw {

namespace {

// Orders are carried as upset masks: up[x] = { y : x <= y }.
bool tables_from_order(int n, const std::vector<Mask>& up, BoundedLattice& out) {
  std::vector<Mask> down(n, 0);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (contains(up[x], y)) down[y] |= bit(x);

  out.n = n;
  out.meet_t.assign(static_cast<size_t>(n) * n, -1);
  out.join_t.assign(static_cast<size_t>(n) * n, -1);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      Mask lower = down[x] & down[y];
      Elem glb = -1;
      for (Elem c = 0; c < n; ++c)
        if (contains(lower, c) && (lower & ~down[c]) == 0) {
          glb = c;
          break;
        }
      if (glb == -1) return false;
      Mask upper = up[x] & up[y];
      Elem lub = -1;
      for (Elem c = 0; c < n; ++c)
        if (contains(upper, c) && (upper & ~up[c]) == 0) {
          lub = c;
          break;
        }
      if (lub == -1) return false;
      out.meet_t[static_cast<size_t>(x) * n + y] = glb;
      out.join_t[static_cast<size_t>(x) * n + y] = lub;
    }
  return true;
}

std::string order_key(int n, const std::vector<Mask>& up) {
  std::string s;
  s.reserve(static_cast<size_t>(n) * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) s.push_back(contains(up[x], y) ? '1' : '0');
  return s;
}

// Lexicographically smallest relabeling of the interior; bottom and top are
// fixed by any lattice isomorphism.
std::pair<std::string, std::vector<Mask>> canonical_order(int n, const std::vector<Mask>& up) {
  std::vector<Elem> mid;
  for (Elem x = 1; x < n - 1; ++x) mid.push_back(x);
  std::vector<Elem> perm(n);
  std::string best;
  std::vector<Mask> best_up;
  std::vector<Elem> arrangement = mid;
  std::sort(arrangement.begin(), arrangement.end());
  do {
    perm[0] = 0;
    if (n > 1) perm[n - 1] = n - 1;
    for (size_t k = 0; k < mid.size(); ++k) perm[mid[k]] = arrangement[k];
    std::vector<Mask> relabeled(n, 0);
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (contains(up[x], y)) relabeled[perm[x]] |= bit(perm[y]);
    std::string key = order_key(n, relabeled);
    if (best.empty() || key < best) {
      best = std::move(key);
      best_up = std::move(relabeled);
    }
  } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  return {best, best_up};
}

}  // namespace

std::vector<BoundedLattice> enumerate_bounded_lattices(int n) {
  if (n < 1) throw std::invalid_argument("size must be positive");
  std::vector<BoundedLattice> out;
  if (n == 1) {
    BoundedLattice L;
    L.n = 1;
    L.meet_t = {0};
    L.join_t = {0};
    out.push_back(L);
    return out;
  }

  std::vector<std::pair<Elem, Elem>> middle_pairs;
  for (Elem i = 1; i < n - 1; ++i)
    for (Elem j = i + 1; j < n - 1; ++j) middle_pairs.emplace_back(i, j);

  std::uint64_t assignments = 1;
  for (size_t k = 0; k < middle_pairs.size(); ++k) assignments *= 3;

  std::set<std::string> seen;
  for (std::uint64_t code = 0; code < assignments; ++code) {
    std::vector<Mask> up(n, 0);
    for (Elem x = 0; x < n; ++x) up[x] = bit(x) | bit(n - 1);
    for (Elem y = 0; y < n; ++y) up[0] |= bit(y);
    std::uint64_t c = code;
    for (auto [i, j] : middle_pairs) {
      switch (c % 3) {
        case 1: up[i] |= bit(j); break;
        case 2: up[j] |= bit(i); break;
        default: break;
      }
      c /= 3;
    }
    // Transitivity: interior relations must already be closed.
    bool transitive = true;
    for (Elem x = 1; x < n - 1 && transitive; ++x)
      for (Elem y = 1; y < n - 1 && transitive; ++y)
        if (x != y && contains(up[x], y) && (up[y] & ~up[x]) != 0) transitive = false;
    if (!transitive) continue;

    auto [key, canon_up] = canonical_order(n, up);
    if (!seen.insert(key).second) continue;
    BoundedLattice L;
    if (tables_from_order(n, canon_up, L)) out.push_back(std::move(L));
  }
  return out;
}

namespace {

struct TableSearch {
  const BoundedLattice& L;
  int n;
  std::vector<Elem> cell;  // row-major, -1 while unassigned
  std::vector<std::pair<Elem, Elem>> free_cells;
  std::vector<ResiduatedLattice> found;

  explicit TableSearch(const BoundedLattice& lat) : L(lat), n(lat.n) {
    cell.assign(static_cast<size_t>(n) * n, -1);
    for (Elem x = 0; x < n; ++x) {
      set(x, n - 1, x);  // top is the unit
      set(x, 0, 0);      // bottom annihilates (forced by monotonicity)
    }
    for (Elem i = 1; i < n - 1; ++i)
      for (Elem j = i; j < n - 1; ++j) free_cells.emplace_back(i, j);
  }

  Elem get(Elem x, Elem y) const { return cell[static_cast<size_t>(x) * n + y]; }

  void set(Elem x, Elem y, Elem v) {
    cell[static_cast<size_t>(x) * n + y] = v;
    cell[static_cast<size_t>(y) * n + x] = v;
  }

  bool monotone_with(Elem i, Elem j, Elem v) const {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        Elem w = get(a, b);
        if (w == -1) continue;
        bool ab_below = (L.leq(a, i) && L.leq(b, j)) || (L.leq(a, j) && L.leq(b, i));
        bool ab_above = (L.leq(i, a) && L.leq(j, b)) || (L.leq(i, b) && L.leq(j, a));
        if (ab_below && !L.leq(w, v)) return false;
        if (ab_above && !L.leq(v, w)) return false;
      }
    return true;
  }

  bool associative_so_far(Elem i, Elem j) const {
    auto check3 = [&](Elem a, Elem b, Elem c) {
      Elem ab = get(a, b), bc = get(b, c);
      if (ab == -1 || bc == -1) return true;
      Elem lhs = get(ab, c), rhs = get(a, bc);
      return lhs == -1 || rhs == -1 || lhs == rhs;
    };
    for (Elem k = 0; k < n; ++k)
      if (!check3(i, j, k) || !check3(i, k, j) || !check3(k, i, j)) return false;
    return true;
  }

  void emit() {
    ResiduatedLattice A;
    A.n = n;
    A.bottom = 0;
    A.top = n - 1;
    A.meet_t = L.meet_t;
    A.join_t = L.join_t;
    A.mono_t = cell;
    A.impl_t.assign(static_cast<size_t>(n) * n, -1);
    // Residual: the set {x : x*y <= z} is a downset; its maximum exists iff
    // its join is a member.
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        Elem best = -1;
        for (Elem x = 0; x < n; ++x)
          if (L.leq(get(x, y), z)) best = best == -1 ? x : L.join(best, x);
        if (best == -1 || !L.leq(get(best, y), z)) return;
        A.impl_t[static_cast<size_t>(y) * n + z] = best;
      }
    if (!validate(A).ok()) return;
    found.push_back(std::move(A));
  }

  void run(size_t at) {
    if (at == free_cells.size()) {
      emit();
      return;
    }
    auto [i, j] = free_cells[at];
    Elem bound = L.meet(i, j);
    for (Elem v = 0; v < n; ++v) {
      if (!L.leq(v, bound)) continue;
      if (!monotone_with(i, j, v)) continue;
      set(i, j, v);
      if (associative_so_far(i, j)) run(at + 1);
      set(i, j, -1);
    }
  }
};

}  // namespace

std::vector<ResiduatedLattice> residuated_completions(const BoundedLattice& L) {
  TableSearch search(L);
  if (L.n == 1) {
    ResiduatedLattice A;
    A.n = 1;
    A.meet_t = A.join_t = A.mono_t = A.impl_t = {0};
    return {A};
  }
  search.run(0);
  return std::move(search.found);
}

AlgebraCatalog generate(int size_bound) {
  if (size_bound < 1 || size_bound > 6)
    throw std::invalid_argument("catalog size bound must be between 1 and 6");
  AlgebraCatalog cat;
  cat.size_bound = size_bound;
  for (int n = 1; n <= size_bound; ++n) {
    std::vector<BoundedLattice> lattices = enumerate_bounded_lattices(n);
    cat.stats.lattice_counts.push_back(lattices.size());
    std::map<std::string, ResiduatedLattice> by_key;
    for (const BoundedLattice& L : lattices)
      for (ResiduatedLattice& A : residuated_completions(L)) {
        ++cat.stats.tables_accepted;
        by_key.try_emplace(canonical_form(A), std::move(A));
      }
    cat.stats.algebra_counts.push_back(by_key.size());
    for (auto& [key, algebra] : by_key) {
      CatalogEntry entry;
      entry.key = key;
      entry.structure = analyze(algebra);
      entry.algebra = std::move(algebra);
      cat.entries.push_back(std::move(entry));
    }
  }
  return cat;
}

std::vector<ResiduatedLattice> catalog_algebras(const AlgebraCatalog& cat, int size) {
  std::vector<ResiduatedLattice> out;
  for (const CatalogEntry& e : cat.entries)
    if (e.algebra.n == size) out.push_back(e.algebra);
  return out;
}

namespace {

Json structure_to_json(const StructureReport& s) {
  Json j;
  j["is_simple"] = s.is_simple;
  j["is_subdirectly_irreducible"] = s.is_subdirectly_irreducible;
  j["is_directly_indecomposable"] = s.is_directly_indecomposable;
  if (s.monolith)
    j["monolith"] = filter_to_json(*s.monolith);
  else
    j["monolith"] = nullptr;
  j["dimension"] = s.dimension;
  j["filter_count"] = s.filter_count;
  j["prime_count"] = s.prime_count;
  return j;
}

StructureReport structure_from_json(const Json& j, const std::string& key, int size) {
  StructureReport s;
  s.algebra_key = key;
  s.size = size;
  s.is_simple = j.at("is_simple").get<bool>();
  s.is_subdirectly_irreducible = j.at("is_subdirectly_irreducible").get<bool>();
  s.is_directly_indecomposable = j.at("is_directly_indecomposable").get<bool>();
  if (!j.at("monolith").is_null()) s.monolith = filter_from_json(j.at("monolith"), size);
  s.dimension = j.at("dimension").get<int>();
  s.filter_count = j.at("filter_count").get<int>();
  s.prime_count = j.at("prime_count").get<int>();
  return s;
}

}  // namespace

void save_catalog(const AlgebraCatalog& cat, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open for writing: " + path);
  Json header;
  header["format"] = 1;
  header["size_bound"] = cat.size_bound;
  Json stats;
  stats["lattice_counts"] = cat.stats.lattice_counts;
  stats["algebra_counts"] = cat.stats.algebra_counts;
  stats["tables_accepted"] = cat.stats.tables_accepted;
  header["stats"] = std::move(stats);
  out << header.dump() << '\n';
  for (const CatalogEntry& e : cat.entries) {
    Json line;
    line["key"] = e.key;
    line["algebra"] = algebra_to_json(e.algebra);
    line["structure"] = structure_to_json(e.structure);
    out << line.dump() << '\n';
  }
  if (!out) throw std::invalid_argument("write failed: " + path);
}

AlgebraCatalog load_catalog(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open: " + path);
  std::string line;
  int lineno = 0;
  AlgebraCatalog cat;
  if (!std::getline(in, line)) throw std::invalid_argument("empty catalog file");
  ++lineno;
  try {
    Json header = Json::parse(line);
    if (header.at("format").get<int>() != 1)
      throw std::invalid_argument("unsupported format version");
    cat.size_bound = header.at("size_bound").get<int>();
    const Json& stats = header.at("stats");
    cat.stats.lattice_counts = stats.at("lattice_counts").get<std::vector<std::uint64_t>>();
    cat.stats.algebra_counts = stats.at("algebra_counts").get<std::vector<std::uint64_t>>();
    cat.stats.tables_accepted = stats.at("tables_accepted").get<std::uint64_t>();
  } catch (const Json::exception& ex) {
    throw std::invalid_argument("line 1: malformed header: " + std::string(ex.what()));
  }
  std::set<std::string> keys;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::string where = "line " + std::to_string(lineno) + ": ";
    try {
      Json j = Json::parse(line);
      CatalogEntry e;
      e.key = j.at("key").get<std::string>();
      e.algebra = algebra_from_json(j.at("algebra"));
      e.structure = structure_from_json(j.at("structure"), e.key, e.algebra.n);
      if (!keys.insert(e.key).second)
        throw std::invalid_argument("duplicate canonical key");
      if (!validate(e.algebra).ok())
        throw std::invalid_argument("entry fails validation");
      if (canonical_form(e.algebra) != e.key)
        throw std::invalid_argument("canonical key does not match the algebra");
      cat.entries.push_back(std::move(e));
    } catch (const Json::exception& ex) {
      throw std::invalid_argument(where + ex.what());
    } catch (const std::invalid_argument& ex) {
      throw std::invalid_argument(where + ex.what());
    }
  }
  return cat;
}

}  // namespace rlw
