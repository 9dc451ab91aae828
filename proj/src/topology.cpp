#include "rlw/topology.hpp"

#include <algorithm>
#include <stdexcept>

namespace rlw {

bool FiniteTopology::is_open(Mask u) const {
  for (Elem x = 0; x < n; ++x)
    if (contains(u, x) && (min_nbhd[x] & ~u) != 0) return false;
  return true;
}

bool FiniteTopology::is_discrete() const {
  for (Elem x = 0; x < n; ++x)
    if (min_nbhd[x] != bit(x)) return false;
  return true;
}

bool FiniteTopology::is_antidiscrete() const {
  for (Elem x = 0; x < n; ++x)
    if (min_nbhd[x] != full_mask(n)) return false;
  return true;
}

bool alexandrov_consistent(const FiniteTopology& T) {
  if (T.min_nbhd.size() != static_cast<size_t>(T.n)) return false;
  for (Elem x = 0; x < T.n; ++x) {
    if (!contains(T.min_nbhd[x], x)) return false;
    for (Elem y = 0; y < T.n; ++y)
      if (contains(T.min_nbhd[x], y) && (T.min_nbhd[y] & ~T.min_nbhd[x]) != 0) return false;
  }
  return true;
}

FiniteTopology discrete_topology(int n) {
  FiniteTopology T{n, std::vector<Mask>(n)};
  for (Elem x = 0; x < n; ++x) T.min_nbhd[x] = bit(x);
  return T;
}

FiniteTopology antidiscrete_topology(int n) {
  return FiniteTopology{n, std::vector<Mask>(n, full_mask(n))};
}

std::vector<Mask> all_open_sets(const FiniteTopology& T) {
  if (T.n > 20) throw std::invalid_argument("open-set scan limited to n <= 20");
  std::vector<Mask> open;
  for (Mask u = 0; u < (Mask{1} << T.n); ++u)
    if (T.is_open(u)) open.push_back(u);
  return open;
}

std::optional<std::pair<int, int>> directedness_violation(const SystemOfFilters& system) {
  for (size_t i = 0; i < system.size(); ++i)
    for (size_t j = 0; j < system.size(); ++j) {
      Mask want = system[i].members & system[j].members;
      bool found = false;
      for (const FilterSet& H : system)
        if ((H.members & ~want) == 0) {
          found = true;
          break;
        }
      if (!found) return std::make_pair(static_cast<int>(i), static_cast<int>(j));
    }
  return std::nullopt;
}

std::optional<FilterSet> minimum_member(const SystemOfFilters& system) {
  if (system.empty()) return std::nullopt;
  for (const FilterSet& F : system) {
    bool below_all = true;
    for (const FilterSet& G : system)
      if ((F.members & ~G.members) != 0) {
        below_all = false;
        break;
      }
    if (below_all) return F;
  }
  return std::nullopt;
}

FiniteTopology induce_topology(const ResiduatedLattice& A, const SystemOfFilters& system) {
  if (system.empty()) throw std::invalid_argument("empty system of filters");
  if (auto w = directedness_violation(system))
    throw std::invalid_argument("family not down-directed: members " +
                                std::to_string(w->first) + " and " +
                                std::to_string(w->second) + " have no member below");
  std::optional<FilterSet> fmin = minimum_member(system);
  if (!fmin) throw std::logic_error("down-directed finite family lost its minimum");
  FiniteTopology T{A.n, std::vector<Mask>(A.n)};
  for (Elem x = 0; x < A.n; ++x) T.min_nbhd[x] = coset(A, *fmin, x);
  return T;
}

std::vector<Mask> induced_open_sets_by_definition(const ResiduatedLattice& A,
                                                  const SystemOfFilters& system) {
  if (A.n > 20) throw std::invalid_argument("open-set scan limited to n <= 20");
  std::vector<Mask> open;
  for (Mask u = 0; u < (Mask{1} << A.n); ++u) {
    bool ok = true;
    for (Elem x = 0; x < A.n && ok; ++x) {
      if (!contains(u, x)) continue;
      bool witness = false;
      for (const FilterSet& F : system)
        if ((coset(A, F, x) & ~u) == 0) {
          witness = true;
          break;
        }
      ok = witness;
    }
    if (ok) open.push_back(u);
  }
  return open;
}

bool satisfies_t0(const FiniteTopology& T) {
  std::vector<Mask> open = all_open_sets(T);
  for (Elem x = 0; x < T.n; ++x)
    for (Elem y = x + 1; y < T.n; ++y) {
      bool separated = false;
      for (Mask u : open)
        if (contains(u, x) != contains(u, y)) {
          separated = true;
          break;
        }
      if (!separated) return false;
    }
  return true;
}

bool satisfies_t1(const FiniteTopology& T) {
  std::vector<Mask> open = all_open_sets(T);
  for (Elem x = 0; x < T.n; ++x)
    for (Elem y = 0; y < T.n; ++y) {
      if (x == y) continue;
      bool found = false;
      for (Mask u : open)
        if (contains(u, x) && !contains(u, y)) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  return true;
}

bool satisfies_t2(const FiniteTopology& T) {
  std::vector<Mask> open = all_open_sets(T);
  for (Elem x = 0; x < T.n; ++x)
    for (Elem y = x + 1; y < T.n; ++y) {
      bool found = false;
      for (Mask u : open) {
        if (!contains(u, x)) continue;
        for (Mask v : open)
          if (contains(v, y) && (u & v) == 0) {
            found = true;
            break;
          }
        if (found) break;
      }
      if (!found) return false;
    }
  return true;
}

SeparationClass separation_class(const FiniteTopology& T) {
  if (satisfies_t2(T)) return SeparationClass::T2;
  if (satisfies_t1(T)) return SeparationClass::T1;
  if (satisfies_t0(T)) return SeparationClass::T0;
  return SeparationClass::none;
}

bool is_hausdorff(const ResiduatedLattice& A, const SystemOfFilters& system) {
  Mask inter = A.carrier();
  for (const FilterSet& F : system) inter &= F.members;
  bool trivial_intersection = (inter == bit(A.top));

  FiniteTopology T = induce_topology(A, system);
  bool t0 = satisfies_t0(T), t1 = satisfies_t1(T), t2 = satisfies_t2(T);
  if (t0 != t1 || t1 != t2 || t2 != trivial_intersection)
    throw std::logic_error("separation equivalence failed on an induced topology");
  return trivial_intersection;
}

ContinuityReport check_topological_algebra(const ResiduatedLattice& A,
                                           const FiniteTopology& T) {
  struct Op {
    const char* name;
    Elem (ResiduatedLattice::*fn)(Elem, Elem) const;
  };
  constexpr Op ops[] = {{"meet", &ResiduatedLattice::meet},
                        {"join", &ResiduatedLattice::join},
                        {"mono", &ResiduatedLattice::mono},
                        {"impl", &ResiduatedLattice::impl}};
  for (const Op& op : ops)
    for (Elem a = 0; a < A.n; ++a)
      for (Elem b = 0; b < A.n; ++b) {
        Mask target = T.min_nbhd[(A.*op.fn)(a, b)];
        for (Elem u = 0; u < A.n; ++u) {
          if (!contains(T.min_nbhd[a], u)) continue;
          for (Elem v = 0; v < A.n; ++v)
            if (contains(T.min_nbhd[b], v) && !contains(target, (A.*op.fn)(u, v)))
              return ContinuityReport{false, op.name, a, b};
        }
      }
  return ContinuityReport{};
}

std::vector<FiniteTopology> enumerate_zltrl(const ResiduatedLattice& A) {
  std::vector<FiniteTopology> out;
  for_each_partition(A.n, [&](const std::vector<int>& block_of) {
    std::vector<Mask> block_mask;
    for (Elem x = 0; x < A.n; ++x) {
      int b = block_of[x];
      if (b >= static_cast<int>(block_mask.size())) block_mask.resize(b + 1, 0);
      block_mask[b] |= bit(x);
    }
    FiniteTopology T{A.n, std::vector<Mask>(A.n)};
    for (Elem x = 0; x < A.n; ++x) T.min_nbhd[x] = block_mask[block_of[x]];
    if (!is_filter(A, T.min_nbhd[A.top])) return;
    if (!check_topological_algebra(A, T).ok) return;
    out.push_back(std::move(T));
  });
  std::sort(out.begin(), out.end(),
            [](const FiniteTopology& a, const FiniteTopology& b) {
              return a.min_nbhd < b.min_nbhd;
            });
  return out;
}

bool is_open_filter(const ResiduatedLattice& A, const FiniteTopology& T, const FilterSet& F) {
  (void)A;
  return T.is_open(F.members);
}

bool is_closed_filter(const ResiduatedLattice& A, const FiniteTopology& T, const FilterSet& F) {
  (void)A;
  return T.is_closed(F.members);
}

CosetOpennessReport coset_openness(const ResiduatedLattice& A, const FiniteTopology& T,
                                   const FilterSet& F) {
  CosetOpennessReport r;
  r.filter_open = T.is_open(F.members);
  r.filter_closed = T.is_closed(F.members);
  r.all_cosets_open = true;
  r.all_cosets_closed = true;
  for (Elem x = 0; x < A.n; ++x) {
    Mask c = coset(A, F, x);
    if (!T.is_open(c)) r.all_cosets_open = false;
    if (!T.is_closed(c)) r.all_cosets_closed = false;
  }
  // F is its own coset at top, and cosets partition the carrier, so openness
  // of F propagates to every coset and closure follows from finite index.
  if (r.filter_open != r.all_cosets_open || r.filter_closed != r.all_cosets_closed ||
      r.filter_open != r.filter_closed)
    throw std::logic_error("coset openness equivalences failed");
  return r;
}

FiniteTopology sup_topologies(const std::vector<FiniteTopology>& topologies) {
  if (topologies.empty()) throw std::invalid_argument("empty supremum");
  int n = topologies.front().n;
  FiniteTopology T{n, std::vector<Mask>(n, full_mask(n))};
  for (const FiniteTopology& S : topologies) {
    if (S.n != n) throw std::invalid_argument("carrier mismatch in supremum");
    for (Elem x = 0; x < n; ++x) T.min_nbhd[x] &= S.min_nbhd[x];
  }
  if (!alexandrov_consistent(T))
    throw std::logic_error("supremum of minimal neighborhoods is not a topology");
  return T;
}

bool topology_coarser_equal(const FiniteTopology& T, const FiniteTopology& U) {
  // T's opens are a subset of U's opens iff U's minimal neighborhoods refine
  // T's pointwise.
  for (Elem x = 0; x < T.n; ++x)
    if ((U.min_nbhd[x] & ~T.min_nbhd[x]) != 0) return false;
  return true;
}

bool systems_equivalent(const ResiduatedLattice& A, const SystemOfFilters& s1,
                        const SystemOfFilters& s2) {
  auto coinitial_under = [](const SystemOfFilters& fine, const SystemOfFilters& coarse) {
    for (const FilterSet& F : coarse) {
      bool found = false;
      for (const FilterSet& G : fine)
        if ((G.members & ~F.members) == 0) {
          found = true;
          break;
        }
      if (!found) return false;
    }
    return true;
  };
  bool eq = coinitial_under(s1, s2) && coinitial_under(s2, s1);
  if (eq && induce_topology(A, s1) != induce_topology(A, s2))
    throw std::logic_error("equivalent systems induced different topologies");
  return eq;
}

}  // namespace rlw
