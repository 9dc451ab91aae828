#ifndef RLW_TESTS_ORACLES_HPP
#define RLW_TESTS_ORACLES_HPP

// Brute-force reference implementations, written independently of the
// library internals so test comparisons are meaningful. Everything here is
// exponential and meant for carriers of size <= 5.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rlw/algebra.hpp"
#include "rlw/filters.hpp"
#include "rlw/subsets.hpp"

namespace rlw::oracle {

inline bool brute_is_filter(const ResiduatedLattice& A, Mask m) {
  if (!contains(m, A.top)) return false;
  for (Elem x = 0; x < A.n; ++x) {
    if (!contains(m, x)) continue;
    for (Elem y = 0; y < A.n; ++y) {
      if (contains(m, y) && !contains(m, A.mono(x, y))) return false;
      if (A.meet(x, y) == x && !contains(m, y)) return false;  // x <= y
    }
  }
  return true;
}

inline std::vector<Mask> brute_filters(const ResiduatedLattice& A) {
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask{1} << A.n); ++m)
    if (brute_is_filter(A, m)) out.push_back(m);
  return out;
}

inline std::vector<std::vector<int>> brute_congruences(const ResiduatedLattice& A) {
  std::vector<std::vector<int>> out;
  int n = A.n;
  const std::vector<Elem>* tabs[4] = {&A.meet_t, &A.join_t, &A.mono_t, &A.impl_t};
  for_each_partition(n, [&](const std::vector<int>& blocks) {
    for (const std::vector<Elem>* tab : tabs)
      for (Elem x = 0; x < n; ++x)
        for (Elem u = 0; u < n; ++u) {
          if (blocks[x] != blocks[u]) continue;
          for (Elem y = 0; y < n; ++y)
            for (Elem v = 0; v < n; ++v) {
              if (blocks[y] != blocks[v]) continue;
              if (blocks[(*tab)[static_cast<size_t>(x) * n + y]] !=
                  blocks[(*tab)[static_cast<size_t>(u) * n + v]])
                return;
            }
        }
    out.push_back(blocks);
  });
  return out;
}

// Labeled bounded lattices on {0..n-1} with bottom 0 and top n-1, found by
// scanning every reflexive relation on the off-diagonal pairs. No
// canonicalization; isomorphic duplicates are kept on purpose.
struct LabeledLattice {
  int n = 0;
  std::vector<Elem> meet_t;
  std::vector<Elem> join_t;
};

inline std::vector<LabeledLattice> brute_labeled_lattices(int n) {
  std::vector<LabeledLattice> out;
  if (n == 1) {
    out.push_back({1, {0}, {0}});
    return out;
  }
  std::vector<std::pair<int, int>> offdiag;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) offdiag.push_back({i, j});
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << offdiag.size()); ++code) {
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) leq[i][i] = true;
    for (size_t p = 0; p < offdiag.size(); ++p)
      if (code & (std::uint64_t{1} << p)) leq[offdiag[p].first][offdiag[p].second] = true;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (!leq[0][i] || !leq[i][n - 1]) ok = false;  // bounds
      for (int j = 0; j < n && ok; ++j) {
        if (leq[i][j] && leq[j][i] && i != j) ok = false;  // antisymmetry
        for (int k = 0; k < n && ok; ++k)
          if (leq[i][j] && leq[j][k] && !leq[i][k]) ok = false;  // transitivity
      }
    }
    if (!ok) continue;
    LabeledLattice L{n, std::vector<Elem>(static_cast<size_t>(n) * n, -1),
                     std::vector<Elem>(static_cast<size_t>(n) * n, -1)};
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y) {
        Elem glb = -1, lub = -1;
        for (int c = 0; c < n; ++c) {
          if (leq[c][x] && leq[c][y] && (glb < 0 || leq[glb][c])) glb = c;
          if (leq[x][c] && leq[y][c] && (lub < 0 || leq[c][lub])) lub = c;
        }
        // candidate must actually dominate every common bound
        bool glb_ok = glb >= 0, lub_ok = lub >= 0;
        for (int c = 0; c < n; ++c) {
          if (glb_ok && leq[c][x] && leq[c][y] && !leq[c][glb]) glb_ok = false;
          if (lub_ok && leq[x][c] && leq[y][c] && !leq[lub][c]) lub_ok = false;
        }
        if (!glb_ok || !lub_ok) {
          ok = false;
          break;
        }
        L.meet_t[static_cast<size_t>(x) * n + y] = glb;
        L.join_t[static_cast<size_t>(x) * n + y] = lub;
      }
    if (ok) out.push_back(std::move(L));
  }
  return out;
}

// The independent catalog generator: labeled lattices, then multiplication
// tables (full scan at n <= 3; commutativity and the unit row assumed at
// n = 4 to keep the scan finite, both being direct axiom content), residual
// derived, validate as the only judge, and plain pairwise isomorphism
// filtering at the end.
inline std::vector<ResiduatedLattice> naive_generate(int n) {
  if (n > 4) throw std::invalid_argument("naive generator is exponential; n <= 4 only");
  std::vector<ResiduatedLattice> found;
  for (const LabeledLattice& L : brute_labeled_lattices(n)) {
    std::vector<std::pair<int, int>> cells;
    if (n <= 3) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cells.push_back({i, j});
    } else {
      for (int i = 0; i < n - 1; ++i)
        for (int j = i; j < n - 1; ++j) cells.push_back({i, j});
    }
    std::uint64_t total = 1;
    for (size_t c = 0; c < cells.size(); ++c) total *= static_cast<std::uint64_t>(n);
    for (std::uint64_t code = 0; code < total; ++code) {
      ResiduatedLattice A;
      A.n = n;
      A.bottom = 0;
      A.top = n - 1;
      A.meet_t = L.meet_t;
      A.join_t = L.join_t;
      A.mono_t.assign(static_cast<size_t>(n) * n, -1);
      std::uint64_t rem = code;
      for (const auto& [i, j] : cells) {
        Elem v = static_cast<Elem>(rem % n);
        rem /= n;
        A.mono_t[static_cast<size_t>(i) * n + j] = v;
        if (n == 4) A.mono_t[static_cast<size_t>(j) * n + i] = v;
      }
      if (n == 4)
        for (int i = 0; i < n; ++i) {
          A.mono_t[static_cast<size_t>(i) * n + (n - 1)] = i;
          A.mono_t[static_cast<size_t>(n - 1) * n + i] = i;
        }
      // residual: impl(y,z) = max{x : mono(x,y) <= z}, if the set has a max
      A.impl_t.assign(static_cast<size_t>(n) * n, -1);
      bool residuated = true;
      for (int y = 0; y < n && residuated; ++y)
        for (int z = 0; z < n && residuated; ++z) {
          Elem best = -1;
          for (int x = 0; x < n; ++x) {
            Elem xy = A.mono_t[static_cast<size_t>(x) * n + y];
            if (A.meet(xy, z) != xy) continue;  // not xy <= z
            if (best < 0 || A.meet(best, x) == best) best = x;
          }
          if (best < 0) {
            residuated = false;
            break;
          }
          for (int x = 0; x < n; ++x) {
            Elem xy = A.mono_t[static_cast<size_t>(x) * n + y];
            if (A.meet(xy, z) == xy && A.meet(x, best) != x) residuated = false;
          }
          A.impl_t[static_cast<size_t>(y) * n + z] = best;
        }
      if (!residuated) continue;
      if (!validate(A).ok()) continue;
      bool duplicate = false;
      for (const ResiduatedLattice& B : found)
        if (find_isomorphism(A, B)) {
          duplicate = true;
          break;
        }
      if (!duplicate) found.push_back(std::move(A));
    }
  }
  return found;
}

}  // namespace rlw::oracle

#endif
