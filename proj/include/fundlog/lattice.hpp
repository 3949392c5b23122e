// Finite bounded lattices with a dually self-adjoint negation, filters and
// ideals, lattice homomorphisms, products, and exhaustive enumeration of
// small lattices and negation tables.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "fundlog/core.hpp"

namespace fundlog {

// Bounded lattice on carrier indices 0..n-1. leq rows are up-sets:
// leq.row(a) = {b | a <= b}. Meet/join tables are total once validated.
struct FiniteLattice {
  int n = 0;
  BoolMat leq;       // leq.at(a,b) iff a <= b
  BoolMat geq;       // transpose, geq.row(a) = down-set of a
  int bottom = -1;
  int top = -1;
  std::vector<std::uint8_t> meet_tab; // n*n
  std::vector<std::uint8_t> join_tab;

  bool le(int a, int b) const { return leq.at(a, b); }
  int meet(int a, int b) const { return meet_tab[a * n + b]; }
  int join(int a, int b) const { return join_tab[a * n + b]; }
  SmallSet up(int a) const { return leq.row(a); }
  SmallSet down(int a) const { return geq.row(a); }

  int meet_of(SmallSet s) const { // empty set meets to top
    int acc = top;
    s.for_each([&](int a) { acc = meet(acc, a); });
    return acc;
  }
  int join_of(SmallSet s) const {
    int acc = bottom;
    s.for_each([&](int a) { acc = join(acc, a); });
    return acc;
  }
};

struct FundamentalLattice {
  FiniteLattice lat;
  std::vector<std::uint8_t> neg;

  int n() const { return lat.n; }
  int nneg(int a) const { return neg[a]; }
};

struct Filter {
  SmallSet members;
};
struct Ideal {
  SmallSet members;
};

// ---------------------------------------------------------------------------
// Validation

// Checks poset axioms, boundedness and totality of meets/joins; fills the
// meet/join tables. Throws ValidationError with codes NotAPoset, NotBounded,
// NoMeet, NoJoin.
inline FiniteLattice validate_lattice(int n, const BoolMat& leq) {
  if (n <= 0) throw ValidationError("NotAPoset", {}, "empty carrier");
  FiniteLattice L;
  L.n = n;
  L.leq = leq;
  for (int a = 0; a < n; ++a)
    if (!leq.at(a, a))
      throw ValidationError("NotAPoset", {a}, "not reflexive at " + std::to_string(a));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a != b && leq.at(a, b) && leq.at(b, a))
        throw ValidationError("NotAPoset", {a, b}, "antisymmetry fails");
      if (leq.at(a, b) && !leq.row(b).subset_of(leq.row(a)))
        throw ValidationError("NotAPoset", {a, b}, "transitivity fails");
    }
  L.geq = leq.transposed();
  for (int a = 0; a < n; ++a) {
    if (leq.row(a) == SmallSet::full(n)) L.bottom = a;
    if (L.geq.row(a) == SmallSet::full(n)) L.top = a;
  }
  if (L.bottom < 0 || L.top < 0)
    throw ValidationError("NotBounded", {}, "no least or no greatest element");

  L.meet_tab.assign(n * n, 0);
  L.join_tab.assign(n * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      SmallSet lower = L.geq.row(a) & L.geq.row(b);
      int glb = -1;
      lower.for_each([&](int g) {
        if (lower.subset_of(L.geq.row(g))) glb = (glb < 0) ? g : glb;
      });
      if (glb < 0)
        throw ValidationError("NoMeet", {a, b}, "pair has no greatest lower bound");
      L.meet_tab[a * n + b] = static_cast<std::uint8_t>(glb);

      SmallSet upper = L.leq.row(a) & L.leq.row(b);
      int lub = -1;
      upper.for_each([&](int u) {
        if (upper.subset_of(L.leq.row(u))) lub = (lub < 0) ? u : lub;
      });
      if (lub < 0)
        throw ValidationError("NoJoin", {a, b}, "pair has no least upper bound");
      L.join_tab[a * n + b] = static_cast<std::uint8_t>(lub);
    }
  return L;
}

// Verdict of the fundamental-negation axioms. Scan order: dual
// self-adjunction, meet-with-negation, antitonicity.
struct FundamentalVerdict {
  bool ok = true;
  std::string code; // NotDuallySelfAdjoint | MeetWithNegNotBottom | NotAntitone
  int a = -1, b = -1;
  explicit operator bool() const { return ok; }
};

inline FundamentalVerdict check_fundamental(const FiniteLattice& L,
                                            const std::vector<std::uint8_t>& neg) {
  for (int a = 0; a < L.n; ++a)
    for (int b = 0; b < L.n; ++b)
      if (L.le(a, neg[b]) != L.le(b, neg[a]))
        return {false, "NotDuallySelfAdjoint", a, b};
  for (int a = 0; a < L.n; ++a)
    if (L.meet(a, neg[a]) != L.bottom)
      return {false, "MeetWithNegNotBottom", a, -1};
  for (int a = 0; a < L.n; ++a)
    for (int b = 0; b < L.n; ++b)
      if (L.le(a, b) && !L.le(neg[b], neg[a]))
        return {false, "NotAntitone", a, b};
  return {};
}

inline FundamentalLattice validate_fundamental(const FiniteLattice& L,
                                               const std::vector<std::uint8_t>& neg) {
  if (static_cast<int>(neg.size()) != L.n)
    throw ValidationError("NotTotal", {}, "negation table size mismatch");
  auto v = check_fundamental(L, neg);
  if (!v.ok) throw ValidationError(v.code, {v.a, v.b}, "negation axiom fails");
  return FundamentalLattice{L, neg};
}

// ---------------------------------------------------------------------------
// Filters and ideals. In a finite lattice every proper filter is a principal
// up-set of a non-bottom element, and dually for ideals; the enumeration
// exploits that while keeping the explicit bit-vector representation.

inline bool is_proper_filter(const FiniteLattice& L, SmallSet s) {
  if (s.empty() || s.test(L.bottom)) return false;
  bool ok = true;
  s.for_each([&](int a) {
    if (!L.up(a).subset_of(s)) ok = false;
    s.for_each([&](int b) {
      if (!s.test(L.meet(a, b))) ok = false;
    });
  });
  return ok;
}

inline bool is_proper_ideal(const FiniteLattice& L, SmallSet s) {
  if (s.empty() || s.test(L.top)) return false;
  bool ok = true;
  s.for_each([&](int a) {
    if (!L.down(a).subset_of(s)) ok = false;
    s.for_each([&](int b) {
      if (!s.test(L.join(a, b))) ok = false;
    });
  });
  return ok;
}

inline std::vector<Filter> enumerate_filters(const FiniteLattice& L) {
  std::vector<Filter> out;
  for (int a = 0; a < L.n; ++a)
    if (a != L.bottom) out.push_back({L.up(a)});
  std::sort(out.begin(), out.end(),
            [](const Filter& x, const Filter& y) { return x.members < y.members; });
  return out;
}

inline std::vector<Ideal> enumerate_ideals(const FiniteLattice& L) {
  std::vector<Ideal> out;
  for (int a = 0; a < L.n; ++a)
    if (a != L.top) out.push_back({L.down(a)});
  std::sort(out.begin(), out.end(),
            [](const Ideal& x, const Ideal& y) { return x.members < y.members; });
  return out;
}

// ---------------------------------------------------------------------------
// Homomorphisms

struct LatticeHom {
  FundamentalLattice source;
  FundamentalLattice target;
  std::vector<std::uint8_t> map;

  int apply(int a) const { return map[a]; }
  bool injective() const {
    SmallSet seen;
    for (int a = 0; a < source.n(); ++a) {
      if (seen.test(map[a])) return false;
      seen.set(map[a]);
    }
    return true;
  }
  bool surjective() const {
    SmallSet seen;
    for (int a = 0; a < source.n(); ++a) seen.set(map[a]);
    return seen.count() == target.n();
  }
};

// First violated preservation equation in scan order meet, join, bottom,
// top, negation.
struct HomVerdict {
  bool ok = true;
  std::string equation; // "meet" | "join" | "bottom" | "top" | "neg"
  int a = -1, b = -1;
  explicit operator bool() const { return ok; }
};

inline HomVerdict check_hom(const LatticeHom& f) {
  const auto& L = f.source;
  const auto& M = f.target;
  if (static_cast<int>(f.map.size()) != L.n())
    throw ValidationError("SourceTargetMismatch", {}, "map size mismatch");
  for (int a = 0; a < L.n(); ++a)
    if (f.map[a] >= M.n())
      throw ValidationError("SourceTargetMismatch", {a}, "map value out of range");
  for (int a = 0; a < L.n(); ++a)
    for (int b = 0; b < L.n(); ++b)
      if (f.map[L.lat.meet(a, b)] != M.lat.meet(f.map[a], f.map[b]))
        return {false, "meet", a, b};
  for (int a = 0; a < L.n(); ++a)
    for (int b = 0; b < L.n(); ++b)
      if (f.map[L.lat.join(a, b)] != M.lat.join(f.map[a], f.map[b]))
        return {false, "join", a, b};
  if (f.map[L.lat.bottom] != M.lat.bottom) return {false, "bottom", -1, -1};
  if (f.map[L.lat.top] != M.lat.top) return {false, "top", -1, -1};
  for (int a = 0; a < L.n(); ++a)
    if (f.map[L.nneg(a)] != M.nneg(f.map[a])) return {false, "neg", a, -1};
  return {};
}

// ---------------------------------------------------------------------------
// Products. Tuple index: first factor is most significant.

inline FundamentalLattice product(const std::vector<FundamentalLattice>& Ls) {
  if (Ls.empty()) throw ValidationError("EmptyFamily", {}, "product of no lattices");
  std::size_t total = 1;
  for (const auto& L : Ls) total *= L.n();
  SmallSet::check_size(static_cast<int>(total));
  int n = static_cast<int>(total);

  auto decompose = [&](int idx) {
    std::vector<int> t(Ls.size());
    for (int k = static_cast<int>(Ls.size()) - 1; k >= 0; --k) {
      t[k] = idx % Ls[k].n();
      idx /= Ls[k].n();
    }
    return t;
  };

  BoolMat leq(n);
  for (int i = 0; i < n; ++i) {
    auto ti = decompose(i);
    for (int j = 0; j < n; ++j) {
      auto tj = decompose(j);
      bool le = true;
      for (std::size_t k = 0; k < Ls.size(); ++k)
        le = le && Ls[k].lat.le(ti[k], tj[k]);
      leq.set(i, j, le);
    }
  }
  FiniteLattice pl = validate_lattice(n, leq);
  std::vector<std::uint8_t> neg(n);
  for (int i = 0; i < n; ++i) {
    auto t = decompose(i);
    int idx = 0;
    for (std::size_t k = 0; k < Ls.size(); ++k)
      idx = idx * Ls[k].n() + Ls[k].nneg(t[k]);
    neg[i] = static_cast<std::uint8_t>(idx);
  }
  return validate_fundamental(pl, neg);
}

inline std::vector<LatticeHom> product_projections(
    const FundamentalLattice& prod, const std::vector<FundamentalLattice>& Ls) {
  std::vector<LatticeHom> out;
  int stride = prod.n();
  for (std::size_t k = 0; k < Ls.size(); ++k) {
    stride /= Ls[k].n();
    LatticeHom h{prod, Ls[k], std::vector<std::uint8_t>(prod.n())};
    for (int i = 0; i < prod.n(); ++i)
      h.map[i] = static_cast<std::uint8_t>((i / stride) % Ls[k].n());
    out.push_back(std::move(h));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Isomorphism (brute-force bijection search; carriers stay tiny).

inline bool lattices_isomorphic(const FiniteLattice& A, const FiniteLattice& B,
                                const std::vector<std::uint8_t>* negA = nullptr,
                                const std::vector<std::uint8_t>* negB = nullptr) {
  if (A.n != B.n) return false;
  std::vector<int> perm(A.n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < A.n && ok; ++i)
      for (int j = 0; j < A.n && ok; ++j)
        if (A.le(i, j) != B.le(perm[i], perm[j])) ok = false;
    if (ok && negA && negB)
      for (int i = 0; i < A.n && ok; ++i)
        if (perm[(*negA)[i]] != (*negB)[perm[i]]) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// ---------------------------------------------------------------------------
// Enumeration of all lattices on exactly n elements up to isomorphism.
// Candidates are generated with an ascending linear extension (leq only on
// index-increasing pairs), then reduced by a minimal relabelled encoding.

inline std::uint64_t lattice_encoding(const FiniteLattice& L,
                                      const std::vector<int>& perm) {
  std::uint64_t code = 0;
  for (int i = 0; i < L.n; ++i)
    for (int j = 0; j < L.n; ++j)
      if (L.le(perm[i], perm[j])) code |= 1ull << (i * L.n + j);
  return code;
}

inline std::vector<FiniteLattice> enumerate_lattices(int n, int cap = 6) {
  if (n < 1 || n > cap)
    throw CapExceeded("lattice size " + std::to_string(n) +
                      " outside the configured cap " + std::to_string(cap));
  std::vector<FiniteLattice> reps;
  std::set<std::uint64_t> seen;
  int bits = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (1ull << bits); ++mask) {
    BoolMat leq(n);
    int b = 0;
    for (int i = 0; i < n; ++i) {
      leq.set(i, i);
      for (int j = i + 1; j < n; ++j, ++b)
        if ((mask >> b) & 1) leq.set(i, j);
    }
    FiniteLattice L;
    try {
      L = validate_lattice(n, leq);
    } catch (const ValidationError&) {
      continue;
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t canon = ~0ull;
    do {
      canon = std::min(canon, lattice_encoding(L, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (seen.insert(canon).second) reps.push_back(std::move(L));
  }
  return reps;
}

// All negation tables turning L into a fundamental lattice, in
// lexicographic table order.
inline std::vector<FundamentalLattice> enumerate_neg_maps(const FiniteLattice& L) {
  std::vector<FundamentalLattice> out;
  std::vector<std::uint8_t> neg(L.n, 0);
  while (true) {
    if (check_fundamental(L, neg)) out.push_back({L, neg});
    int k = L.n - 1;
    while (k >= 0 && neg[k] == L.n - 1) neg[k--] = 0;
    if (k < 0) break;
    ++neg[k];
  }
  return out;
}

inline std::vector<FundamentalLattice> enumerate_fundamental_lattices(int n,
                                                                      int cap = 6) {
  std::vector<FundamentalLattice> out;
  for (const auto& L : enumerate_lattices(n, cap))
    for (auto& F : enumerate_neg_maps(L)) out.push_back(std::move(F));
  return out;
}

} // namespace fundlog
