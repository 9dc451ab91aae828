#include "rlw/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rlw {

namespace {

bool table_ok(const std::vector<Elem>& t, int n) {
  if (t.size() != static_cast<size_t>(n) * n) return false;
  return std::all_of(t.begin(), t.end(), [n](Elem v) { return 0 <= v && v < n; });
}

struct Checker {
  const ResiduatedLattice& A;
  ValidationReport& rep;

  void fail(const char* axiom, Elem x = -1, Elem y = -1, Elem z = -1) {
    rep.violations.push_back({axiom, {x, y, z}});
  }

  // Binary op laws checked pointwise so each failure carries a witness.
  void commutative(const char* name, Elem (ResiduatedLattice::*op)(Elem, Elem) const) {
    for (Elem x = 0; x < A.n; ++x)
      for (Elem y = x + 1; y < A.n; ++y)
        if ((A.*op)(x, y) != (A.*op)(y, x)) return fail(name, x, y);
  }

  void associative(const char* name, Elem (ResiduatedLattice::*op)(Elem, Elem) const) {
    for (Elem x = 0; x < A.n; ++x)
      for (Elem y = 0; y < A.n; ++y)
        for (Elem z = 0; z < A.n; ++z)
          if ((A.*op)((A.*op)(x, y), z) != (A.*op)(x, (A.*op)(y, z)))
            return fail(name, x, y, z);
  }

  void idempotent(const char* name, Elem (ResiduatedLattice::*op)(Elem, Elem) const) {
    for (Elem x = 0; x < A.n; ++x)
      if ((A.*op)(x, x) != x) return fail(name, x);
  }

  void run() {
    commutative("meet-commutative", &ResiduatedLattice::meet);
    commutative("join-commutative", &ResiduatedLattice::join);
    associative("meet-associative", &ResiduatedLattice::meet);
    associative("join-associative", &ResiduatedLattice::join);
    idempotent("meet-idempotent", &ResiduatedLattice::meet);
    idempotent("join-idempotent", &ResiduatedLattice::join);

    for (Elem x = 0; x < A.n; ++x)
      for (Elem y = 0; y < A.n; ++y) {
        if (A.meet(x, A.join(x, y)) != x) { fail("absorption-meet-join", x, y); goto absorbed; }
        if (A.join(x, A.meet(x, y)) != x) { fail("absorption-join-meet", x, y); goto absorbed; }
      }
  absorbed:

    for (Elem x = 0; x < A.n; ++x) {
      if (A.meet(x, A.bottom) != A.bottom) { fail("bottom-least", x); break; }
    }
    for (Elem x = 0; x < A.n; ++x) {
      if (A.join(x, A.top) != A.top) { fail("top-greatest", x); break; }
    }

    commutative("mono-commutative", &ResiduatedLattice::mono);
    associative("mono-associative", &ResiduatedLattice::mono);
    for (Elem x = 0; x < A.n; ++x)
      if (A.mono(x, A.top) != x) { fail("mono-unit", x); break; }

    // Residuation: x*y <= z  iff  x <= y->z, quantified over all triples.
    for (Elem x = 0; x < A.n; ++x)
      for (Elem y = 0; y < A.n; ++y)
        for (Elem z = 0; z < A.n; ++z) {
          bool lhs = A.leq(A.mono(x, y), z);
          bool rhs = A.leq(x, A.impl(y, z));
          if (lhs != rhs) return fail("residuation", x, y, z);
        }

    derived_laws();
  }

  // Redundant consequences of the axioms; they catch table corruption that
  // happens to slip past a single quantifier order.
  void derived_laws() {
    for (Elem x = 0; x < A.n; ++x) {
      if (!A.leq(A.bottom, x)) { fail("bottom-below-all", x); break; }
      if (!A.leq(x, A.top)) { fail("top-above-all", x); break; }
      if (A.impl(x, x) != A.top) { fail("impl-reflexive", x); break; }
      if (A.impl(A.top, x) != x) { fail("impl-from-top", x); break; }
      if (A.mono(x, A.bottom) != A.bottom) { fail("mono-annihilator", x); break; }
    }
    for (Elem x = 0; x < A.n; ++x)
      for (Elem y = 0; y < A.n; ++y) {
        if (A.leq(x, y) != (A.impl(x, y) == A.top)) return fail("order-by-impl", x, y);
        if (!A.leq(A.mono(x, A.impl(x, y)), y)) return fail("modus-ponens", x, y);
        if (!A.leq(A.mono(x, y), A.meet(x, y))) return fail("mono-below-meet", x, y);
        if (A.join(x, y) != A.join(y, x)) return fail("join-commutative", x, y);
      }
    for (Elem x = 0; x < A.n; ++x)
      for (Elem y = 0; y < A.n; ++y)
        for (Elem z = 0; z < A.n; ++z) {
          if (A.impl(x, A.impl(y, z)) != A.impl(A.mono(x, y), z))
            return fail("impl-currying", x, y, z);
          if (A.leq(x, y)) {
            if (!A.leq(A.mono(x, z), A.mono(y, z))) return fail("mono-monotone", x, y, z);
            if (!A.leq(A.impl(z, x), A.impl(z, y))) return fail("impl-monotone-right", x, y, z);
            if (!A.leq(A.impl(y, z), A.impl(x, z))) return fail("impl-antitone-left", x, y, z);
          }
        }
    // Power law: (x v y)^(m*n) <= x^m v y^n for small exponents.
    auto pw = [&](Elem x, int k) {
      Elem r = A.top;
      for (int i = 0; i < k; ++i) r = A.mono(r, x);
      return r;
    };
    for (Elem x = 0; x < A.n; ++x)
      for (Elem y = 0; y < A.n; ++y)
        for (int m = 1; m <= 2; ++m)
          for (int k = 1; k <= 2; ++k)
            if (!A.leq(pw(A.join(x, y), m * k), A.join(pw(x, m), pw(y, k))))
              return fail("join-power", x, y);
  }
};

}  // namespace

ValidationReport validate(const ResiduatedLattice& A) {
  ValidationReport rep;
  if (A.n <= 0) {
    rep.structural_errors.push_back("carrier must be non-empty");
    return rep;
  }
  if (A.n > kMaxSubsetCarrier)
    rep.structural_errors.push_back("carrier exceeds supported size");
  if (!table_ok(A.meet_t, A.n)) rep.structural_errors.push_back("meet table malformed");
  if (!table_ok(A.join_t, A.n)) rep.structural_errors.push_back("join table malformed");
  if (!table_ok(A.mono_t, A.n)) rep.structural_errors.push_back("mono table malformed");
  if (!table_ok(A.impl_t, A.n)) rep.structural_errors.push_back("impl table malformed");
  if (A.bottom < 0 || A.bottom >= A.n) rep.structural_errors.push_back("bottom out of range");
  if (A.top < 0 || A.top >= A.n) rep.structural_errors.push_back("top out of range");
  if (!rep.structural_errors.empty()) return rep;

  rep.trivial = (A.n == 1);
  Checker{A, rep}.run();
  return rep;
}

ResiduatedLattice goedel_chain(int n) {
  if (n < 1) throw std::invalid_argument("chain size must be positive");
  ResiduatedLattice A;
  A.n = n;
  A.bottom = 0;
  A.top = n - 1;
  A.meet_t.resize(static_cast<size_t>(n) * n);
  A.join_t.resize(static_cast<size_t>(n) * n);
  A.mono_t.resize(static_cast<size_t>(n) * n);
  A.impl_t.resize(static_cast<size_t>(n) * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      size_t k = static_cast<size_t>(x) * n + y;
      A.meet_t[k] = std::min(x, y);
      A.join_t[k] = std::max(x, y);
      A.mono_t[k] = std::min(x, y);
      A.impl_t[k] = (x <= y) ? n - 1 : y;
    }
  return A;
}

ResiduatedLattice lukasiewicz_chain(int n) {
  if (n < 1) throw std::invalid_argument("chain size must be positive");
  ResiduatedLattice A;
  A.n = n;
  A.bottom = 0;
  A.top = n - 1;
  A.meet_t.resize(static_cast<size_t>(n) * n);
  A.join_t.resize(static_cast<size_t>(n) * n);
  A.mono_t.resize(static_cast<size_t>(n) * n);
  A.impl_t.resize(static_cast<size_t>(n) * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      size_t k = static_cast<size_t>(x) * n + y;
      A.meet_t[k] = std::min(x, y);
      A.join_t[k] = std::max(x, y);
      A.mono_t[k] = std::max(0, x + y - (n - 1));
      A.impl_t[k] = std::min(n - 1, n - 1 - x + y);
    }
  return A;
}

ResiduatedLattice boolean_algebra(int num_atoms) {
  if (num_atoms < 0 || num_atoms > 6)
    throw std::invalid_argument("atom count out of range");
  int n = 1 << num_atoms;
  Elem full = n - 1;
  ResiduatedLattice A;
  A.n = n;
  A.bottom = 0;
  A.top = full;
  A.meet_t.resize(static_cast<size_t>(n) * n);
  A.join_t.resize(static_cast<size_t>(n) * n);
  A.mono_t.resize(static_cast<size_t>(n) * n);
  A.impl_t.resize(static_cast<size_t>(n) * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      size_t k = static_cast<size_t>(x) * n + y;
      A.meet_t[k] = x & y;
      A.join_t[k] = x | y;
      A.mono_t[k] = x & y;
      A.impl_t[k] = (~x | y) & full;
    }
  return A;
}

ResiduatedLattice product(const ResiduatedLattice& A, const ResiduatedLattice& B) {
  int n = A.n * B.n;
  if (n > kMaxSubsetCarrier) throw std::invalid_argument("product too large");
  ResiduatedLattice P;
  P.n = n;
  auto enc = [&](Elem a, Elem b) { return a * B.n + b; };
  P.bottom = enc(A.bottom, B.bottom);
  P.top = enc(A.top, B.top);
  P.meet_t.resize(static_cast<size_t>(n) * n);
  P.join_t.resize(static_cast<size_t>(n) * n);
  P.mono_t.resize(static_cast<size_t>(n) * n);
  P.impl_t.resize(static_cast<size_t>(n) * n);
  for (Elem a1 = 0; a1 < A.n; ++a1)
    for (Elem b1 = 0; b1 < B.n; ++b1)
      for (Elem a2 = 0; a2 < A.n; ++a2)
        for (Elem b2 = 0; b2 < B.n; ++b2) {
          size_t k = static_cast<size_t>(enc(a1, b1)) * n + enc(a2, b2);
          P.meet_t[k] = enc(A.meet(a1, a2), B.meet(b1, b2));
          P.join_t[k] = enc(A.join(a1, a2), B.join(b1, b2));
          P.mono_t[k] = enc(A.mono(a1, a2), B.mono(b1, b2));
          P.impl_t[k] = enc(A.impl(a1, a2), B.impl(b1, b2));
        }
  return P;
}

ResiduatedLattice relabel(const ResiduatedLattice& A, const std::vector<Elem>& perm) {
  if (perm.size() != static_cast<size_t>(A.n))
    throw std::invalid_argument("permutation size mismatch");
  ResiduatedLattice R;
  R.n = A.n;
  R.bottom = perm[A.bottom];
  R.top = perm[A.top];
  size_t nn = static_cast<size_t>(A.n) * A.n;
  R.meet_t.resize(nn);
  R.join_t.resize(nn);
  R.mono_t.resize(nn);
  R.impl_t.resize(nn);
  for (Elem x = 0; x < A.n; ++x)
    for (Elem y = 0; y < A.n; ++y) {
      size_t k = static_cast<size_t>(perm[x]) * A.n + perm[y];
      R.meet_t[k] = perm[A.meet(x, y)];
      R.join_t[k] = perm[A.join(x, y)];
      R.mono_t[k] = perm[A.mono(x, y)];
      R.impl_t[k] = perm[A.impl(x, y)];
    }
  return R;
}

ResiduatedLattice normalized(const ResiduatedLattice& A) {
  if (A.bottom == 0 && A.top == A.n - 1) return A;
  std::vector<Elem> perm(A.n);
  Elem next = 1;
  for (Elem x = 0; x < A.n; ++x) {
    if (x == A.bottom) perm[x] = 0;
    else if (x == A.top) perm[x] = A.n - 1;
    else perm[x] = next++;
  }
  return relabel(A, perm);
}

Homomorphism identity_homomorphism(const ResiduatedLattice& A) {
  Homomorphism h{A, A, std::vector<Elem>(A.n)};
  std::iota(h.map.begin(), h.map.end(), 0);
  return h;
}

std::optional<PreservationFailure> preservation_failure(const Homomorphism& h) {
  const auto& S = h.source;
  const auto& T = h.target;
  if (h.map.size() != static_cast<size_t>(S.n)) return PreservationFailure{"shape"};
  for (Elem v : h.map)
    if (v < 0 || v >= T.n) return PreservationFailure{"shape"};
  if (h.map[S.bottom] != T.bottom) return PreservationFailure{"bottom", S.bottom};
  if (h.map[S.top] != T.top) return PreservationFailure{"top", S.top};
  for (Elem x = 0; x < S.n; ++x)
    for (Elem y = 0; y < S.n; ++y) {
      if (h.map[S.meet(x, y)] != T.meet(h.map[x], h.map[y]))
        return PreservationFailure{"meet", x, y};
      if (h.map[S.join(x, y)] != T.join(h.map[x], h.map[y]))
        return PreservationFailure{"join", x, y};
      if (h.map[S.mono(x, y)] != T.mono(h.map[x], h.map[y]))
        return PreservationFailure{"mono", x, y};
      if (h.map[S.impl(x, y)] != T.impl(h.map[x], h.map[y]))
        return PreservationFailure{"impl", x, y};
    }
  return std::nullopt;
}

bool is_homomorphism(const Homomorphism& h) { return !preservation_failure(h); }

namespace {

// Invariants preserved by isomorphism, used to prune the bijection search.
struct ElementProfile {
  int downset = 0;
  int upset = 0;
  bool mono_idempotent = false;
  int mono_rank = 0;  // |{y : x*y == bottom}|

  auto operator<=>(const ElementProfile&) const = default;
};

ElementProfile profile_of(const ResiduatedLattice& A, Elem x) {
  ElementProfile p;
  for (Elem y = 0; y < A.n; ++y) {
    if (A.leq(y, x)) ++p.downset;
    if (A.leq(x, y)) ++p.upset;
    if (A.mono(x, y) == A.bottom) ++p.mono_rank;
  }
  p.mono_idempotent = (A.mono(x, x) == x);
  return p;
}

bool extend(const ResiduatedLattice& A, const ResiduatedLattice& B,
            std::vector<Elem>& map, std::vector<bool>& used,
            const std::vector<ElementProfile>& pa,
            const std::vector<ElementProfile>& pb, Elem x) {
  while (x < A.n && map[x] != -1) ++x;
  if (x == A.n) return true;
  for (Elem y = 0; y < B.n; ++y) {
    if (used[y] || pa[x] != pb[y]) continue;
    // Partial consistency: every already-assigned pair must commute with x.
    bool ok = true;
    for (Elem z = 0; z < A.n && ok; ++z) {
      if (map[z] == -1) continue;
      auto chk = [&](Elem sa, Elem ta) {
        if (map[sa] != -1 && map[sa] != ta) ok = false;
        if (map[sa] == -1 && used[ta] && ta != y) ok = false;
      };
      chk(A.meet(x, z), B.meet(y, map[z]));
      chk(A.join(x, z), B.join(y, map[z]));
      chk(A.mono(x, z), B.mono(y, map[z]));
      chk(A.impl(x, z), B.impl(y, map[z]));
      chk(A.impl(z, x), B.impl(map[z], y));
    }
    if (!ok) continue;
    map[x] = y;
    used[y] = true;
    if (extend(A, B, map, used, pa, pb, x + 1)) return true;
    map[x] = -1;
    used[y] = false;
  }
  return false;
}

}  // namespace

std::optional<Homomorphism> find_isomorphism(const ResiduatedLattice& A,
                                             const ResiduatedLattice& B) {
  if (A.n != B.n) return std::nullopt;
  std::vector<ElementProfile> pa(A.n), pb(B.n);
  for (Elem x = 0; x < A.n; ++x) pa[x] = profile_of(A, x);
  for (Elem y = 0; y < B.n; ++y) pb[y] = profile_of(B, y);
  {
    auto sa = pa, sb = pb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::vector<Elem> map(A.n, -1);
  std::vector<bool> used(B.n, false);
  map[A.bottom] = B.bottom;
  used[B.bottom] = true;
  if (A.top != A.bottom) {
    map[A.top] = B.top;
    used[B.top] = true;
  }
  if (!extend(A, B, map, used, pa, pb, 0)) return std::nullopt;
  Homomorphism h{A, B, map};
  if (!is_homomorphism(h)) return std::nullopt;  // guards the pruning logic
  return h;
}

std::vector<std::vector<Elem>> all_homomorphism_maps(const ResiduatedLattice& A,
                                                     const ResiduatedLattice& B) {
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> map(A.n, -1);
  map[A.bottom] = B.bottom;
  map[A.top] = B.top;
  auto consistent = [&](Elem x) {
    for (Elem z = 0; z < A.n; ++z) {
      if (map[z] == -1) continue;
      auto chk = [&](Elem sa, Elem ta) { return map[sa] == -1 || map[sa] == ta; };
      if (!chk(A.meet(x, z), B.meet(map[x], map[z]))) return false;
      if (!chk(A.join(x, z), B.join(map[x], map[z]))) return false;
      if (!chk(A.mono(x, z), B.mono(map[x], map[z]))) return false;
      if (!chk(A.impl(x, z), B.impl(map[x], map[z]))) return false;
      if (!chk(A.impl(z, x), B.impl(map[z], map[x]))) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, Elem x) -> void {
    while (x < A.n && map[x] != -1) ++x;
    if (x == A.n) {
      Homomorphism h{A, B, map};
      if (is_homomorphism(h)) out.push_back(map);
      return;
    }
    for (Elem y = 0; y < B.n; ++y) {
      map[x] = y;
      if (consistent(x)) self(self, x + 1);
      map[x] = -1;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::string serialize_tables(const ResiduatedLattice& A) {
  std::string s;
  s.reserve(4 * static_cast<size_t>(A.n) * A.n + 2);
  auto push = [&](Elem v) { s.push_back(static_cast<char>(v)); };
  push(A.n);
  for (const auto* t : {&A.meet_t, &A.join_t, &A.mono_t, &A.impl_t})
    for (Elem v : *t) push(v);
  return s;
}

void permute_smallest(const ResiduatedLattice& A, std::vector<Elem>& perm,
                      std::vector<bool>& used, Elem x, std::string& best) {
  while (x < A.n && perm[x] != -1) ++x;
  if (x == A.n) {
    std::string cur = serialize_tables(relabel(A, perm));
    if (best.empty() || cur < best) best = std::move(cur);
    return;
  }
  for (Elem y = 0; y < A.n; ++y) {
    if (used[y]) continue;
    perm[x] = y;
    used[y] = true;
    permute_smallest(A, perm, used, x + 1, best);
    perm[x] = -1;
    used[y] = false;
  }
}

}  // namespace

std::string canonical_form(const ResiduatedLattice& A) {
  ResiduatedLattice N = normalized(A);
  std::vector<Elem> perm(N.n, -1);
  std::vector<bool> used(N.n, false);
  perm[N.bottom] = 0;
  used[0] = true;
  if (N.top != N.bottom) {
    perm[N.top] = N.n - 1;
    used[N.n - 1] = true;
  }
  std::string best;
  permute_smallest(N, perm, used, 0, best);
  std::ostringstream hex;
  hex << std::hex;
  for (unsigned char c : best) {
    hex.width(2);
    hex.fill('0');
    hex << static_cast<int>(c);
  }
  return hex.str();
}

}  // namespace rlw
