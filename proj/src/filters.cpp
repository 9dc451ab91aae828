#include "rlw/filters.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace rlw {

bool filter_less(const FilterSet& a, const FilterSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.indices() < b.indices();
}

bool is_filter(const ResiduatedLattice& A, Mask members) {
  if (!contains(members, A.top)) return false;
  for (Elem x = 0; x < A.n; ++x) {
    if (!contains(members, x)) continue;
    for (Elem y = 0; y < A.n; ++y) {
      if (contains(members, y) && !contains(members, A.mono(x, y))) return false;
      if (A.leq(x, y) && !contains(members, y)) return false;
    }
  }
  return true;
}

bool is_deductive_system(const ResiduatedLattice& A, Mask members) {
  if (!contains(members, A.top)) return false;
  for (Elem x = 0; x < A.n; ++x) {
    if (!contains(members, x)) continue;
    for (Elem y = 0; y < A.n; ++y)
      if (contains(members, A.impl(x, y)) && !contains(members, y)) return false;
  }
  return true;
}

FilterSet generated_filter(const ResiduatedLattice& A, Mask seed) {
  Mask m = seed | bit(A.top);
  bool grew = true;
  while (grew) {
    grew = false;
    Mask next = m;
    for (Elem x = 0; x < A.n; ++x) {
      if (!contains(m, x)) continue;
      for (Elem y = 0; y < A.n; ++y) {
        if (contains(m, y)) next |= bit(A.mono(x, y));
        if (A.leq(x, y)) next |= bit(y);
      }
    }
    if (next != m) {
      m = next;
      grew = true;
    }
  }
  return FilterSet{A.n, m};
}

FilterSet upset(const ResiduatedLattice& A, Elem x) {
  Mask m = 0;
  for (Elem y = 0; y < A.n; ++y)
    if (A.leq(x, y)) m |= bit(y);
  return FilterSet{A.n, m};
}

std::vector<FilterSet> enumerate_filters(const ResiduatedLattice& A) {
  std::set<Mask> found;
  std::vector<Mask> frontier{generated_filter(A, 0).members};
  found.insert(frontier[0]);
  while (!frontier.empty()) {
    Mask f = frontier.back();
    frontier.pop_back();
    for (Elem x = 0; x < A.n; ++x) {
      if (contains(f, x)) continue;
      Mask g = generated_filter(A, f | bit(x)).members;
      if (found.insert(g).second) frontier.push_back(g);
    }
  }
  std::vector<FilterSet> out;
  out.reserve(found.size());
  for (Mask m : found) out.push_back(FilterSet{A.n, m});
  std::sort(out.begin(), out.end(), filter_less);
  return out;
}

int CongruenceRelation::blocks() const {
  int b = 0;
  for (int v : block_of) b = std::max(b, v + 1);
  return b;
}

Mask CongruenceRelation::block_mask(Elem x) const {
  Mask m = 0;
  for (Elem y = 0; y < n; ++y)
    if (block_of[y] == block_of[x]) m |= bit(y);
  return m;
}

CongruenceRelation identity_congruence(int n) {
  CongruenceRelation t{n, std::vector<int>(n)};
  for (int i = 0; i < n; ++i) t.block_of[i] = i;
  return t;
}

CongruenceRelation full_congruence(int n) {
  return CongruenceRelation{n, std::vector<int>(n, 0)};
}

CongruenceRelation normalize_blocks(const std::vector<int>& block_of) {
  CongruenceRelation t{static_cast<int>(block_of.size()), std::vector<int>(block_of.size())};
  std::map<int, int> renum;
  for (size_t i = 0; i < block_of.size(); ++i) {
    auto [it, fresh] = renum.try_emplace(block_of[i], static_cast<int>(renum.size()));
    (void)fresh;
    t.block_of[i] = it->second;
  }
  return t;
}

bool is_congruence(const ResiduatedLattice& A, const CongruenceRelation& theta) {
  if (theta.n != A.n || theta.block_of.size() != static_cast<size_t>(A.n)) return false;
  for (Elem x1 = 0; x1 < A.n; ++x1)
    for (Elem x2 = 0; x2 < A.n; ++x2) {
      if (!theta.same(x1, x2)) continue;
      for (Elem y1 = 0; y1 < A.n; ++y1)
        for (Elem y2 = 0; y2 < A.n; ++y2) {
          if (!theta.same(y1, y2)) continue;
          if (!theta.same(A.meet(x1, y1), A.meet(x2, y2))) return false;
          if (!theta.same(A.join(x1, y1), A.join(x2, y2))) return false;
          if (!theta.same(A.mono(x1, y1), A.mono(x2, y2))) return false;
          if (!theta.same(A.impl(x1, y1), A.impl(x2, y2))) return false;
        }
    }
  return true;
}

CongruenceRelation congruence_of_filter(const ResiduatedLattice& A, const FilterSet& F) {
  auto related = [&](Elem x, Elem y) {
    return F.contains(A.mono(A.impl(x, y), A.impl(y, x)));
  };
  std::vector<int> block_of(A.n, -1);
  int next = 0;
  for (Elem x = 0; x < A.n; ++x) {
    if (block_of[x] != -1) continue;
    block_of[x] = next;
    for (Elem y = x + 1; y < A.n; ++y)
      if (block_of[y] == -1 && related(x, y)) block_of[y] = next;
    ++next;
  }
  CongruenceRelation theta{A.n, std::move(block_of)};
  if (!is_congruence(A, theta))
    throw std::logic_error("filter failed to induce a congruence");
  return theta;
}

FilterSet filter_of_congruence(const ResiduatedLattice& A, const CongruenceRelation& theta) {
  if (!is_congruence(A, theta))
    throw std::invalid_argument("partition is not a congruence");
  return FilterSet{A.n, theta.block_mask(A.top)};
}

Mask coset(const ResiduatedLattice& A, const FilterSet& F, Elem x) {
  Mask m = 0;
  for (Elem y = 0; y < A.n; ++y)
    if (F.contains(A.mono(A.impl(x, y), A.impl(y, x)))) m |= bit(y);
  return m;
}

QuotientResult quotient(const ResiduatedLattice& A, const FilterSet& F) {
  CongruenceRelation theta = congruence_of_filter(A, F);
  int m = theta.blocks();
  std::vector<Elem> rep(m, -1);
  for (Elem x = 0; x < A.n; ++x)
    if (rep[theta.block_of[x]] == -1) rep[theta.block_of[x]] = x;

  ResiduatedLattice Q;
  Q.n = m;
  Q.bottom = theta.block_of[A.bottom];
  Q.top = theta.block_of[A.top];
  Q.meet_t.resize(static_cast<size_t>(m) * m);
  Q.join_t.resize(static_cast<size_t>(m) * m);
  Q.mono_t.resize(static_cast<size_t>(m) * m);
  Q.impl_t.resize(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      size_t k = static_cast<size_t>(i) * m + j;
      Q.meet_t[k] = theta.block_of[A.meet(rep[i], rep[j])];
      Q.join_t[k] = theta.block_of[A.join(rep[i], rep[j])];
      Q.mono_t[k] = theta.block_of[A.mono(rep[i], rep[j])];
      Q.impl_t[k] = theta.block_of[A.impl(rep[i], rep[j])];
    }

  // Renumber into normal form, then compose the projection with the same
  // renumbering so the map targets the normalized algebra.
  std::vector<Elem> renum(m);
  Elem next = 1;
  for (Elem b = 0; b < m; ++b) {
    if (b == Q.bottom) renum[b] = 0;
    else if (b == Q.top) renum[b] = m - 1;
    else renum[b] = next++;
  }

  QuotientResult r;
  r.algebra = relabel(Q, renum);
  std::vector<Elem> proj(A.n);
  for (Elem x = 0; x < A.n; ++x) proj[x] = renum[theta.block_of[x]];
  r.projection = Homomorphism{A, r.algebra, std::move(proj)};
  if (!is_homomorphism(r.projection))
    throw std::logic_error("quotient projection failed preservation");
  return r;
}

bool is_proper(const ResiduatedLattice& A, const FilterSet& F) {
  return F.members != A.carrier();
}

bool is_prime(const ResiduatedLattice& A, const FilterSet& F) {
  if (!is_proper(A, F)) return false;
  for (Elem x = 0; x < A.n; ++x)
    for (Elem y = 0; y < A.n; ++y)
      if (F.contains(A.join(x, y)) && !F.contains(x) && !F.contains(y)) return false;
  return true;
}

std::vector<FilterSet> prime_filters(const ResiduatedLattice& A) {
  std::vector<FilterSet> out;
  for (const FilterSet& F : enumerate_filters(A))
    if (is_prime(A, F)) out.push_back(F);
  return out;
}

FilterSet filter_meet(const ResiduatedLattice& A, const FilterSet& F, const FilterSet& G) {
  (void)A;
  return FilterSet{F.n, F.members & G.members};
}

FilterSet filter_join(const ResiduatedLattice& A, const FilterSet& F, const FilterSet& G) {
  return generated_filter(A, F.members | G.members);
}

std::vector<std::pair<int, int>> filter_lattice_covers(const std::vector<FilterSet>& filters) {
  std::vector<std::pair<int, int>> covers;
  auto subset = [](Mask a, Mask b) { return (a & ~b) == 0; };
  for (size_t i = 0; i < filters.size(); ++i)
    for (size_t j = 0; j < filters.size(); ++j) {
      if (i == j) continue;
      if (!subset(filters[i].members, filters[j].members)) continue;
      bool covered = true;
      for (size_t k = 0; k < filters.size() && covered; ++k) {
        if (k == i || k == j) continue;
        if (subset(filters[i].members, filters[k].members) &&
            subset(filters[k].members, filters[j].members) &&
            filters[k].members != filters[i].members &&
            filters[k].members != filters[j].members)
          covered = false;
      }
      if (covered) covers.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return covers;
}

std::vector<FilterSet> join_irreducible_filters(const ResiduatedLattice& A) {
  std::vector<FilterSet> filters = enumerate_filters(A);
  std::vector<int> lower_covers(filters.size(), 0);
  for (auto [lo, hi] : filter_lattice_covers(filters)) ++lower_covers[hi];
  std::vector<FilterSet> out;
  for (size_t i = 0; i < filters.size(); ++i)
    if (lower_covers[i] == 1) out.push_back(filters[i]);
  return out;
}

std::vector<FilterSet> irredundant_decomposition(const ResiduatedLattice& A,
                                                 const FilterSet& F) {
  if (F.members == generated_filter(A, 0).members)
    throw std::invalid_argument("the minimum filter has no decomposition");
  std::vector<FilterSet> ji = join_irreducible_filters(A);
  auto below = [&](const FilterSet& G) { return (G.members & ~F.members) == 0; };
  std::vector<FilterSet> maximal;
  for (const FilterSet& G : ji) {
    if (!below(G)) continue;
    bool is_max = true;
    for (const FilterSet& H : ji)
      if (below(H) && H.members != G.members && (G.members & ~H.members) == 0) {
        is_max = false;
        break;
      }
    if (is_max) maximal.push_back(G);
  }
  Mask joined = 0;
  for (const FilterSet& G : maximal) joined |= G.members;
  if (generated_filter(A, joined).members != F.members)
    throw std::logic_error("decomposition does not join back to the filter");
  std::sort(maximal.begin(), maximal.end(), filter_less);
  return maximal;
}

std::vector<CongruenceRelation> enumerate_congruences(const ResiduatedLattice& A) {
  std::vector<CongruenceRelation> out;
  for (const FilterSet& F : enumerate_filters(A))
    out.push_back(congruence_of_filter(A, F));
  return out;
}

FilterSet kernel(const Homomorphism& h) {
  if (!is_homomorphism(h)) throw std::invalid_argument("map is not a homomorphism");
  Mask m = 0;
  for (Elem x = 0; x < h.source.n; ++x)
    if (h.map[x] == h.target.top) m |= bit(x);
  return FilterSet{h.source.n, m};
}

}  // namespace rlw
