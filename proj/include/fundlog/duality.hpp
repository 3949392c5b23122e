// Canonical frames of fundamental lattices, the hat embedding into the
// positive algebra, filter extensions of frames, and the completion checks
// (double density, compactness, the negation formula) that identify the
// positive algebra of the canonical frame as the canonical extension.
#pragma once

#include "fundlog/core.hpp"
#include "fundlog/frame.hpp"
#include "fundlog/lattice.hpp"

namespace fundlog {

// A point of a canonical frame: a compatible proper-filter/proper-ideal
// pair over the origin lattice. Compatible: a in F implies neg(a) in I.
struct FilterIdealPair {
  SmallSet filter;
  SmallSet ideal;
};

struct CanonicalFrame {
  FundamentalFrame frame;
  std::vector<FilterIdealPair> labels;
  FundamentalLattice origin;

  int n() const { return frame.n(); }
};

inline bool pair_compatible(const FundamentalLattice& L, SmallSet filter,
                            SmallSet ideal) {
  bool ok = true;
  filter.for_each([&](int a) {
    if (!ideal.test(L.nneg(a))) ok = false;
  });
  return ok;
}

// Points are all compatible pairs in (filter, ideal) bit-vector order;
// (F,I) relates to (G,J) exactly when G avoids I.
inline CanonicalFrame canonical_frame(const FundamentalLattice& L) {
  std::vector<FilterIdealPair> pts;
  for (const auto& F : enumerate_filters(L.lat))
    for (const auto& I : enumerate_ideals(L.lat))
      if (pair_compatible(L, F.members, I.members))
        pts.push_back({F.members, I.members});
  // enumerate_filters is sorted, so pairs come out in canonical order
  SmallSet::check_size(static_cast<int>(pts.size()));
  int n = static_cast<int>(pts.size());
  BoolMat rel(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      rel.set(i, j, !pts[j].filter.intersects(pts[i].ideal));
  CanonicalFrame out;
  if (n == 0) {
    out.frame = FundamentalFrame{RelFrame{0, BoolMat(0), BoolMat(0)}};
  } else {
    out.frame = is_fundamental_or_throw(make_frame(n, rel));
  }
  out.labels = std::move(pts);
  out.origin = L;
  return out;
}

// hat(a) = points whose filter contains a.
inline SmallSet hat(const CanonicalFrame& cf, int a) {
  SmallSet s;
  for (int i = 0; i < cf.n(); ++i)
    if (cf.labels[i].filter.test(a)) s.set(i);
  return s;
}

// check(b) = points whose ideal contains b.
inline SmallSet check_set(const CanonicalFrame& cf, int b) {
  SmallSet s;
  for (int i = 0; i < cf.n(); ++i)
    if (cf.labels[i].ideal.test(b)) s.set(i);
  return s;
}

// ---------------------------------------------------------------------------
// Embedding report: injectivity and preservation of meet, join, bounds and
// negation by the hat map into the positive algebra of the canonical frame.

struct EmbeddingReport {
  bool injective = true;
  bool members = true; // every hat image is an algebra member
  bool meets = true;
  bool joins = true;
  bool bounds = true;
  bool negs = true;
  std::string witness;
  bool all() const {
    return injective && members && meets && joins && bounds && negs;
  }
};

inline EmbeddingReport hat_embedding(const FundamentalLattice& L,
                                     const CanonicalFrame& cf) {
  EmbeddingReport r;
  const RelFrame& f = cf.frame.frame;
  SetAlgebra alg = positive_algebra(f);
  std::vector<SmallSet> h(L.n());
  for (int a = 0; a < L.n(); ++a) h[a] = hat(cf, a);

  for (int a = 0; a < L.n(); ++a)
    for (int b = 0; b < a; ++b)
      if (h[a] == h[b]) {
        r.injective = false;
        r.witness = "hat collision " + std::to_string(a) + "," + std::to_string(b);
      }
  for (int a = 0; a < L.n(); ++a)
    if (!alg.contains(h[a])) {
      r.members = false;
      r.witness = "hat image escapes algebra at " + std::to_string(a);
    }
  for (int a = 0; a < L.n(); ++a)
    for (int b = 0; b < L.n(); ++b) {
      if (h[L.lat.meet(a, b)] != (h[a] & h[b])) {
        r.meets = false;
        r.witness = "meet " + std::to_string(a) + "," + std::to_string(b);
      }
      if (h[L.lat.join(a, b)] != closure(f, h[a] | h[b])) {
        r.joins = false;
        r.witness = "join " + std::to_string(a) + "," + std::to_string(b);
      }
    }
  if (h[L.lat.bottom] != SmallSet{} || h[L.lat.top] != f.universe())
    r.bounds = false;
  for (int a = 0; a < L.n(); ++a)
    if (h[L.nneg(a)] != neg_pos(f, h[a])) {
      r.negs = false;
      r.witness = "neg " + std::to_string(a);
    }
  return r;
}

inline EmbeddingReport hat_embedding(const FundamentalLattice& L) {
  return hat_embedding(L, canonical_frame(L));
}

// ---------------------------------------------------------------------------
// Filter extension: the canonical frame of the positive algebra.

inline CanonicalFrame filter_extension(const FundamentalFrame& f) {
  return canonical_frame(algebra_lattice(f.frame).fundamental());
}

// ---------------------------------------------------------------------------
// Canonical-extension report. Over the positive algebra C of the canonical
// frame of L, checks that the hat embedding is doubly dense and compact and
// that the frame negation agrees with the filter-indexed extension formula.

struct ExtensionReport {
  bool join_of_meets = true;
  bool meet_of_joins = true;
  bool compact = true;
  bool neg_formula = true;
  std::string witness;
  bool all() const {
    return join_of_meets && meet_of_joins && compact && neg_formula;
  }
};

inline ExtensionReport verify_canonical_extension(const FundamentalLattice& L) {
  ExtensionReport r;
  CanonicalFrame cf = canonical_frame(L);
  const RelFrame& f = cf.frame.frame;
  SetAlgebra alg = positive_algebra(f);
  std::vector<SmallSet> h(L.n());
  for (int a = 0; a < L.n(); ++a) h[a] = hat(cf, a);

  for (const auto& A : alg.members) {
    // join over points of A of the meets of their filter's hat images
    SmallSet jm;
    A.for_each([&](int x) {
      SmallSet m = f.universe();
      cf.labels[x].filter.for_each([&](int a) { m = m & h[a]; });
      jm = jm | m;
    });
    if (closure(f, jm) != A || jm != A) {
      r.join_of_meets = false;
      r.witness = "join-of-meets";
    }
    // meet over points of the complementary negative member of the joins
    // of their ideal's hat images
    SmallSet B = neg_neg(f, A);
    SmallSet mj = f.universe();
    B.for_each([&](int x) {
      SmallSet u;
      cf.labels[x].ideal.for_each([&](int b) { u = u | h[b]; });
      mj = mj & closure(f, u);
    });
    if (mj != A) {
      r.meet_of_joins = false;
      r.witness = "meet-of-joins";
    }
    // negation formula: neg A as intersection of joins of negated filters
    SmallSet nf = f.universe();
    A.for_each([&](int x) {
      SmallSet u;
      cf.labels[x].filter.for_each([&](int a) { u = u | h[L.nneg(a)]; });
      nf = nf & closure(f, u);
    });
    if (nf != neg_pos(f, A)) {
      r.neg_formula = false;
      r.witness = "neg-formula";
    }
  }

  // compactness: a meet of hat images below a join of hat images must
  // already be witnessed inside the lattice
  for (std::uint64_t am = 0; am < (1ull << L.n()); ++am)
    for (std::uint64_t bm = 0; bm < (1ull << L.n()); ++bm) {
      SmallSet A = SmallSet::from_low_bits(am);
      SmallSet B = SmallSet::from_low_bits(bm);
      SmallSet meeth = f.universe();
      A.for_each([&](int a) { meeth = meeth & h[a]; });
      SmallSet joinh;
      B.for_each([&](int b) { joinh = joinh | h[b]; });
      joinh = closure(f, joinh);
      bool alg_le = meeth.subset_of(joinh);
      bool lat_le = L.lat.le(L.lat.meet_of(A), L.lat.join_of(B));
      if (alg_le != lat_le) {
        r.compact = false;
        r.witness = "compactness A=" + std::to_string(am) + " B=" + std::to_string(bm);
      }
    }
  return r;
}

} // namespace fundlog
