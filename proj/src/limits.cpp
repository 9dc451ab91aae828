#include "rlw/limits.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rlw {

std::vector<std::string> poset_defects(const DirectedPoset& P) {
  std::vector<std::string> out;
  if (P.size <= 0) {
    out.push_back("index set must be non-empty");
    return out;
  }
  if (P.leq_t.size() != static_cast<size_t>(P.size)) {
    out.push_back("relation table shape mismatch");
    return out;
  }
  for (const auto& row : P.leq_t)
    if (row.size() != static_cast<size_t>(P.size)) {
      out.push_back("relation table shape mismatch");
      return out;
    }
  for (int i = 0; i < P.size; ++i)
    if (!P.leq(i, i)) out.push_back("not reflexive at " + std::to_string(i));
  for (int i = 0; i < P.size; ++i)
    for (int j = 0; j < P.size; ++j) {
      if (i != j && P.leq(i, j) && P.leq(j, i))
        out.push_back("antisymmetry fails on (" + std::to_string(i) + "," +
                      std::to_string(j) + ")");
      for (int k = 0; k < P.size; ++k)
        if (P.leq(i, j) && P.leq(j, k) && !P.leq(i, k))
          out.push_back("transitivity fails on (" + std::to_string(i) + "," +
                        std::to_string(j) + "," + std::to_string(k) + ")");
    }
  for (int i = 0; i < P.size && out.empty(); ++i)
    for (int j = 0; j < P.size; ++j) {
      bool bounded = false;
      for (int k = 0; k < P.size; ++k)
        if (P.leq(i, k) && P.leq(j, k)) {
          bounded = true;
          break;
        }
      if (!bounded) {
        out.push_back("pair (" + std::to_string(i) + "," + std::to_string(j) +
                      ") has no upper bound");
        return out;
      }
    }
  return out;
}

int maximum_of(const DirectedPoset& P) {
  for (int m = 0; m < P.size; ++m) {
    bool above_all = true;
    for (int i = 0; i < P.size; ++i)
      if (!P.leq(i, m)) {
        above_all = false;
        break;
      }
    if (above_all) return m;
  }
  throw std::invalid_argument("directed poset without maximum");
}

std::vector<int> descending_order(const DirectedPoset& P) {
  std::vector<int> order;
  std::vector<bool> placed(P.size, false);
  while (static_cast<int>(order.size()) < P.size) {
    for (int i = 0; i < P.size; ++i) {
      if (placed[i]) continue;
      bool is_max = true;
      for (int j = 0; j < P.size; ++j)
        if (!placed[j] && j != i && P.leq(i, j)) {
          is_max = false;
          break;
        }
      if (is_max) {
        order.push_back(i);
        placed[i] = true;
        break;
      }
    }
  }
  return order;
}

std::vector<std::string> system_defects(const InverseSystem& S) {
  std::vector<std::string> out = poset_defects(S.index);
  if (!out.empty()) return out;
  if (S.algebras.size() != static_cast<size_t>(S.index.size)) {
    out.push_back("algebra count does not match index size");
    return out;
  }
  for (int i = 0; i < S.index.size; ++i)
    for (int j = 0; j < S.index.size; ++j) {
      if (!S.index.leq(j, i)) continue;
      auto it = S.transitions.find({i, j});
      if (it == S.transitions.end()) {
        out.push_back("missing transition (" + std::to_string(i) + " -> " +
                      std::to_string(j) + ")");
        continue;
      }
      Homomorphism h{S.algebras[i], S.algebras[j], it->second};
      if (!is_homomorphism(h))
        out.push_back("transition (" + std::to_string(i) + " -> " + std::to_string(j) +
                      ") is not a homomorphism");
      if (i == j) {
        for (Elem x = 0; x < S.algebras[i].n; ++x)
          if (it->second[x] != x) {
            out.push_back("transition (" + std::to_string(i) + " -> " +
                          std::to_string(i) + ") is not the identity");
            break;
          }
      }
    }
  if (!out.empty()) return out;
  for (int i = 0; i < S.index.size; ++i)
    for (int j = 0; j < S.index.size; ++j)
      for (int k = 0; k < S.index.size; ++k) {
        if (!(S.index.leq(k, j) && S.index.leq(j, i))) continue;
        const auto& ij = S.transition(i, j);
        const auto& jk = S.transition(j, k);
        const auto& ik = S.transition(i, k);
        for (Elem x = 0; x < S.algebras[i].n; ++x)
          if (jk[ij[x]] != ik[x]) {
            out.push_back("triangle (" + std::to_string(i) + "," + std::to_string(j) +
                          "," + std::to_string(k) + ") does not commute");
            goto next_triangle;
          }
      next_triangle:;
      }
  return out;
}

LimitResult inverse_limit(const InverseSystem& S, std::uint64_t tuple_bound) {
  {
    std::vector<std::string> defects = system_defects(S);
    if (!defects.empty()) throw std::invalid_argument("invalid system: " + defects.front());
  }
  std::uint64_t product_size = 1;
  for (const ResiduatedLattice& A : S.algebras) {
    product_size *= static_cast<std::uint64_t>(A.n);
    if (product_size > tuple_bound)
      throw std::invalid_argument("candidate tuple count exceeds bound");
  }

  int m = S.index.size;
  std::vector<int> order = descending_order(S.index);
  std::vector<Thread> threads;
  std::vector<Elem> tuple(m, -1);
  auto search = [&](auto&& self, int pos) -> void {
    if (pos == m) {
      threads.push_back(Thread{tuple});
      return;
    }
    int i = order[pos];
    for (Elem v = 0; v < S.algebras[i].n; ++v) {
      bool ok = true;
      for (int q = 0; q < pos && ok; ++q) {
        int k = order[q];
        if (S.index.leq(i, k) && S.transition(k, i)[tuple[k]] != v) ok = false;
        if (S.index.leq(k, i) && S.transition(i, k)[v] != tuple[k]) ok = false;
      }
      if (!ok) continue;
      tuple[i] = v;
      self(self, pos + 1);
      tuple[i] = -1;
    }
  };
  search(search, 0);
  std::sort(threads.begin(), threads.end());
  if (threads.empty()) throw std::logic_error("inverse limit of non-empty algebras is empty");

  int N = static_cast<int>(threads.size());
  auto thread_index = [&](const Thread& t) {
    auto it = std::lower_bound(threads.begin(), threads.end(), t);
    if (it == threads.end() || !(*it == t))
      throw std::logic_error("componentwise image is not a thread");
    return static_cast<Elem>(it - threads.begin());
  };

  LimitResult r;
  r.threads = threads;
  ResiduatedLattice& L = r.algebra;
  L.n = N;
  L.meet_t.resize(static_cast<size_t>(N) * N);
  L.join_t.resize(static_cast<size_t>(N) * N);
  L.mono_t.resize(static_cast<size_t>(N) * N);
  L.impl_t.resize(static_cast<size_t>(N) * N);
  Thread tmp{std::vector<Elem>(m)};
  for (int s = 0; s < N; ++s)
    for (int t = 0; t < N; ++t) {
      size_t key = static_cast<size_t>(s) * N + t;
      for (int i = 0; i < m; ++i)
        tmp.tuple[i] = S.algebras[i].meet(threads[s].tuple[i], threads[t].tuple[i]);
      L.meet_t[key] = thread_index(tmp);
      for (int i = 0; i < m; ++i)
        tmp.tuple[i] = S.algebras[i].join(threads[s].tuple[i], threads[t].tuple[i]);
      L.join_t[key] = thread_index(tmp);
      for (int i = 0; i < m; ++i)
        tmp.tuple[i] = S.algebras[i].mono(threads[s].tuple[i], threads[t].tuple[i]);
      L.mono_t[key] = thread_index(tmp);
      for (int i = 0; i < m; ++i)
        tmp.tuple[i] = S.algebras[i].impl(threads[s].tuple[i], threads[t].tuple[i]);
      L.impl_t[key] = thread_index(tmp);
    }
  for (int i = 0; i < m; ++i) tmp.tuple[i] = S.algebras[i].bottom;
  L.bottom = thread_index(tmp);
  for (int i = 0; i < m; ++i) tmp.tuple[i] = S.algebras[i].top;
  L.top = thread_index(tmp);

  if (!validate(L).ok()) throw std::logic_error("limit algebra failed validation");

  for (int i = 0; i < m; ++i) {
    std::vector<Elem> proj(N);
    for (int s = 0; s < N; ++s) proj[s] = threads[s].tuple[i];
    Homomorphism phi{L, S.algebras[i], std::move(proj)};
    if (!is_homomorphism(phi)) throw std::logic_error("limit projection failed preservation");
    r.projections.push_back(std::move(phi));
  }
  return r;
}

std::optional<std::string> cofinality_defect(const InverseSystem& S,
                                             const std::vector<int>& keep) {
  if (keep.empty()) return "empty index subset";
  for (int i : keep)
    if (i < 0 || i >= S.index.size) return "index out of range: " + std::to_string(i);
  for (int a : keep)
    for (int b : keep) {
      bool bounded = false;
      for (int c : keep)
        if (S.index.leq(a, c) && S.index.leq(b, c)) {
          bounded = true;
          break;
        }
      if (!bounded)
        return "subset not directed: pair (" + std::to_string(a) + "," +
               std::to_string(b) + ") unbounded";
    }
  for (int i = 0; i < S.index.size; ++i) {
    bool dominated = false;
    for (int c : keep)
      if (S.index.leq(i, c)) {
        dominated = true;
        break;
      }
    if (!dominated) return "not cofinal: index " + std::to_string(i) + " has no upper bound";
  }
  return std::nullopt;
}

InverseSystem cofinal_restrict(const InverseSystem& S, const std::vector<int>& keep_raw) {
  std::vector<int> keep = keep_raw;
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (auto defect = cofinality_defect(S, keep)) throw std::invalid_argument(*defect);

  InverseSystem R;
  int m = static_cast<int>(keep.size());
  R.index.size = m;
  R.index.leq_t.assign(m, std::vector<bool>(m, false));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) R.index.leq_t[a][b] = S.index.leq(keep[a], keep[b]);
  for (int a = 0; a < m; ++a) R.algebras.push_back(S.algebras[keep[a]]);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (R.index.leq(b, a)) R.transitions[{a, b}] = S.transition(keep[a], keep[b]);
  return R;
}

InverseSystem filter_system(const ResiduatedLattice& A, const std::vector<FilterSet>& filters) {
  if (filters.empty()) throw std::invalid_argument("empty filter family");
  for (size_t i = 0; i < filters.size(); ++i)
    for (size_t j = i + 1; j < filters.size(); ++j)
      if (filters[i].members == filters[j].members)
        throw std::invalid_argument("duplicate filter in family");
  InverseSystem S;
  int m = static_cast<int>(filters.size());
  S.index.size = m;
  S.index.leq_t.assign(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      S.index.leq_t[i][j] = (filters[j].members & ~filters[i].members) == 0;  // F_i contains F_j

  std::vector<QuotientResult> quots;
  quots.reserve(filters.size());
  for (const FilterSet& F : filters) quots.push_back(quotient(A, F));
  for (int i = 0; i < m; ++i) S.algebras.push_back(quots[i].algebra);

  // transition (i -> j) for j <= i sends x/F_i to x/F_j; well-defined since
  // F_j contains F_i.
  for (int i = 0; i < m; ++i) {
    std::vector<Elem> rep(quots[i].algebra.n, -1);
    for (Elem x = 0; x < A.n; ++x) {
      Elem q = quots[i].projection.map[x];
      if (rep[q] == -1) rep[q] = x;
    }
    for (int j = 0; j < m; ++j) {
      if (!S.index.leq(j, i)) continue;
      std::vector<Elem> t(quots[i].algebra.n);
      for (Elem q = 0; q < quots[i].algebra.n; ++q) t[q] = quots[j].projection.map[rep[q]];
      S.transitions[{i, j}] = std::move(t);
    }
  }
  {
    std::vector<std::string> defects = system_defects(S);
    if (!defects.empty()) throw std::logic_error("filter system invalid: " + defects.front());
  }
  return S;
}

CompletionResult profinite_completion(const ResiduatedLattice& A) {
  CompletionResult r;
  r.filters = enumerate_filters(A);
  InverseSystem S = filter_system(A, r.filters);
  r.limit = inverse_limit(S);

  std::vector<QuotientResult> quots;
  quots.reserve(r.filters.size());
  for (const FilterSet& F : r.filters) quots.push_back(quotient(A, F));
  std::vector<Elem> e_map(A.n);
  for (Elem a = 0; a < A.n; ++a) {
    Thread t{std::vector<Elem>(r.filters.size())};
    for (size_t i = 0; i < r.filters.size(); ++i) t.tuple[i] = quots[i].projection.map[a];
    auto it = std::lower_bound(r.limit.threads.begin(), r.limit.threads.end(), t);
    if (it == r.limit.threads.end() || !(*it == t))
      throw std::logic_error("canonical image is not a thread");
    e_map[a] = static_cast<Elem>(it - r.limit.threads.begin());
  }
  r.e = Homomorphism{A, r.limit.algebra, std::move(e_map)};
  if (!is_homomorphism(r.e)) throw std::logic_error("canonical map is not a homomorphism");
  std::vector<bool> hit(r.limit.algebra.n, false);
  for (Elem a = 0; a < A.n; ++a) {
    if (hit[r.e.map[a]]) throw std::logic_error("canonical map is not injective");
    hit[r.e.map[a]] = true;
  }
  if (r.limit.algebra.n != A.n)
    throw std::logic_error("canonical map is not surjective onto the completion");
  return r;
}

SubdirectResult subdirect_embedding(const ResiduatedLattice& A,
                                    const std::vector<FilterSet>& family) {
  if (family.empty()) throw std::invalid_argument("empty filter family");
  std::vector<QuotientResult> quots;
  quots.reserve(family.size());
  long long combined = 1;
  for (const FilterSet& F : family) {
    quots.push_back(quotient(A, F));
    if (!is_homomorphism(quots.back().projection))
      throw std::logic_error("a quotient projection failed preservation");
    if (combined <= kMaxSubsetCarrier) combined *= quots.back().algebra.n;
  }

  // Product operations act per component, so verified projections make the
  // tuple map a homomorphism into the product without building its tables.
  std::vector<std::vector<Elem>> tuples(A.n, std::vector<Elem>(quots.size()));
  for (Elem a = 0; a < A.n; ++a)
    for (size_t i = 0; i < quots.size(); ++i)
      tuples[a][i] = quots[i].projection.map[a];
  SubdirectResult r;
  r.injective = true;
  for (Elem a = 0; a < A.n && r.injective; ++a)
    for (Elem b = a + 1; b < A.n && r.injective; ++b)
      if (tuples[a] == tuples[b]) r.injective = false;

  // When the combined carrier fits the subset-mask bound, build the product
  // outright and recheck preservation and injectivity against it.
  if (combined <= kMaxSubsetCarrier) {
    ResiduatedLattice target = quots[0].algebra;
    for (size_t i = 1; i < quots.size(); ++i) target = product(target, quots[i].algebra);
    std::vector<Elem> map(A.n);
    for (Elem a = 0; a < A.n; ++a) {
      Elem enc = quots[0].projection.map[a];
      for (size_t i = 1; i < quots.size(); ++i)
        enc = enc * quots[i].algebra.n + quots[i].projection.map[a];
      map[a] = enc;
    }
    r.embedding = Homomorphism{A, std::move(target), std::move(map)};
    if (!is_homomorphism(*r.embedding))
      throw std::logic_error("componentwise quotient map failed preservation");
    std::vector<bool> seen(r.embedding->target.n, false);
    bool encoded_injective = true;
    for (Elem a = 0; a < A.n; ++a) {
      if (seen[r.embedding->map[a]]) encoded_injective = false;
      seen[r.embedding->map[a]] = true;
    }
    if (encoded_injective != r.injective)
      throw std::logic_error("tuple and encoded injectivity disagree");
  }
  return r;
}

bool is_valid_certificate(const ResiduatedLattice& A, const FiniteTopology& T,
                          const std::vector<FilterSet>& cert) {
  if (cert.empty()) return false;
  for (const FilterSet& F : cert) {
    if (!is_filter(A, F.members)) return false;
    if (!T.is_open(F.members) || !T.is_closed(F.members)) return false;
  }
  if (directedness_violation(cert)) return false;
  for (Elem x = 0; x < A.n; ++x)
    for (Elem y = x + 1; y < A.n; ++y) {
      bool separated = false;
      for (const FilterSet& F : cert)
        if (coset(A, F, x) != coset(A, F, y)) {
          separated = true;
          break;
        }
      if (!separated) return false;
    }
  return true;
}

CertificateResult profiniteness_certificate(const ResiduatedLattice& A,
                                            const FiniteTopology& T) {
  CertificateResult r;
  std::vector<FilterSet> clopen;
  for (const FilterSet& F : enumerate_filters(A))
    if (T.is_open(F.members) && T.is_closed(F.members)) clopen.push_back(F);

  // Clopen filters are intersection-closed, so this family is down-directed;
  // if it fails to separate points, no subfamily can.
  for (Elem x = 0; x < A.n; ++x)
    for (Elem y = x + 1; y < A.n; ++y) {
      bool separated = false;
      for (const FilterSet& F : clopen)
        if (coset(A, F, x) != coset(A, F, y)) {
          separated = true;
          break;
        }
      if (!separated) {
        r.unseparated = std::make_pair(x, y);
        break;
      }
    }

  if (!r.unseparated) {
    // The minimum clopen filter separates whatever the whole family does,
    // so it alone is the smallest certificate.
    auto minimum = minimum_member(clopen);
    if (!minimum) throw std::logic_error("clopen filter family lost directedness");
    r.certificate = {*minimum};
    if (!is_valid_certificate(A, T, r.certificate))
      throw std::logic_error("minimum clopen filter failed certificate validation");
    r.exists = true;
  }

  // Finite-case equivalence: certificate exists iff T is Hausdorff iff T is
  // discrete iff A embeds subdirectly via the certificate quotients. The
  // topological directions need the operations to be continuous.
  if (check_topological_algebra(A, T).ok) {
    bool t2 = satisfies_t2(T);
    bool discrete = T.is_discrete();
    if (r.exists != t2 || t2 != discrete)
      throw std::logic_error("certificate existence diverged from Hausdorff/discreteness");
    if (r.exists && !subdirect_embedding(A, r.certificate).injective)
      throw std::logic_error("certificate quotients failed to embed the algebra");
  }
  return r;
}

InverseSystem random_inverse_system(std::mt19937& rng, int max_indices,
                                    int max_algebra_size) {
  auto pick = [&rng](int bound) {
    return std::uniform_int_distribution<int>(0, bound - 1)(rng);
  };

  ResiduatedLattice base;
  switch (max_algebra_size < 3 ? pick(max_algebra_size) : pick(4)) {
    case 0: base = goedel_chain(1); break;
    case 1: base = goedel_chain(2); break;
    case 2: base = goedel_chain(3); break;
    default: base = lukasiewicz_chain(3); break;
  }

  int m = 1 + pick(max_indices);
  DirectedPoset P;
  P.size = m;
  P.leq_t.assign(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i) P.leq_t[i][i] = true;
  for (int i = 0; i < m - 1; ++i)
    for (int j = i + 1; j < m; ++j)
      if (pick(2) == 0) P.leq_t[i][j] = true;
  for (int i = 0; i < m; ++i) P.leq_t[i][m - 1] = true;  // force a maximum
  for (int j = 0; j < m; ++j)  // relations only point numerically upward
    for (int i = 0; i < j; ++i)
      if (P.leq_t[i][j])
        for (int k = j + 1; k < m; ++k)
          if (P.leq_t[j][k]) P.leq_t[i][k] = true;

  // Antitone filter assignment: i <= j forces F_i to contain F_j.
  std::vector<FilterSet> filters = enumerate_filters(base);
  std::vector<FilterSet> assigned(m, FilterSet{base.n, 0});
  std::vector<int> order = descending_order(P);
  for (int pos = 0; pos < m; ++pos) {
    int i = order[pos];
    Mask must_contain = 0;
    for (int q = 0; q < pos; ++q)
      if (P.leq(i, order[q])) must_contain |= assigned[order[q]].members;
    std::vector<FilterSet> candidates;
    for (const FilterSet& F : filters)
      if ((must_contain & ~F.members) == 0) candidates.push_back(F);
    assigned[i] = candidates[pick(static_cast<int>(candidates.size()))];
  }

  std::vector<QuotientResult> quots;
  quots.reserve(assigned.size());
  for (const FilterSet& F : assigned) quots.push_back(quotient(base, F));

  // Random relabelings (bottom and top may move) keep transitions from being
  // plain coset maps and exercise non-normalized carriers downstream.
  std::vector<std::vector<Elem>> proj(m);
  InverseSystem S;
  S.index = P;
  for (int i = 0; i < m; ++i) {
    int k = quots[i].algebra.n;
    std::vector<Elem> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    S.algebras.push_back(relabel(quots[i].algebra, perm));
    proj[i].resize(base.n);
    for (Elem x = 0; x < base.n; ++x) proj[i][x] = perm[quots[i].projection.map[x]];
  }
  for (int i = 0; i < m; ++i) {
    std::vector<Elem> rep(S.algebras[i].n, -1);
    for (Elem x = 0; x < base.n; ++x)
      if (rep[proj[i][x]] == -1) rep[proj[i][x]] = x;
    for (int j = 0; j < m; ++j) {
      if (!P.leq(j, i)) continue;
      std::vector<Elem> t(S.algebras[i].n);
      for (Elem q = 0; q < S.algebras[i].n; ++q) t[q] = proj[j][rep[q]];
      S.transitions[{i, j}] = std::move(t);
    }
  }
  {
    std::vector<std::string> defects = system_defects(S);
    if (!defects.empty())
      throw std::logic_error("random system invalid: " + defects.front());
  }
  return S;
}

}  // namespace rlw
