// Frame morphisms and their strength hierarchy, the two dual constructions
// (inverse image on positive algebras, filter/ideal preimage on canonical
// frames), and the biconditional report pairing map classes with
// injectivity/surjectivity of their duals.
#pragma once

#include "fundlog/core.hpp"
#include "fundlog/duality.hpp"
#include "fundlog/frame.hpp"
#include "fundlog/lattice.hpp"

namespace fundlog {

struct FrameMap {
  FundamentalFrame source;
  FundamentalFrame target;
  std::vector<std::uint8_t> map;

  int apply(int x) const { return map[x]; }
};

// Verdict for the four frame-morphism conditions; witness is the first
// failing (condition, points) tuple in scan order.
struct MorphismVerdict {
  bool ok = true;
  int condition = 0;
  int x = -1, y = -1;
  explicit operator bool() const { return ok; }
};

namespace detail {
struct MapContext {
  const RelFrame& X;
  const RelFrame& Y;
  const std::vector<std::uint8_t>& h;
  std::vector<SmallSet> tpos_below; // over Y
  std::vector<SmallSet> tneg_below;
  std::vector<SmallSet> img_succ; // images of successor sets, over Y
  std::vector<SmallSet> img_pred;
  SmallSet img_all;

  MapContext(const FrameMap& m)
      : X(m.source.frame), Y(m.target.frame), h(m.map) {
    tpos_below.resize(Y.n);
    tneg_below.resize(Y.n);
    for (int y = 0; y < Y.n; ++y) {
      tpos_below[y] = pos_below(Y, y);
      tneg_below[y] = neg_below(Y, y);
    }
    img_succ.resize(X.n);
    img_pred.resize(X.n);
    for (int x = 0; x < X.n; ++x) {
      X.succs(x).for_each([&](int x2) { img_succ[x].set(h[x2]); });
      X.preds(x).for_each([&](int x2) { img_pred[x].set(h[x2]); });
      img_all.set(h[x]);
    }
  }
};
} // namespace detail

inline MorphismVerdict is_f_morphism(const FrameMap& m) {
  if (static_cast<int>(m.map.size()) != m.source.n())
    throw ValidationError("SourceTargetMismatch", {}, "map size mismatch");
  detail::MapContext c(m);
  for (int x = 0; x < c.X.n; ++x) {
    SmallSet sx = c.X.succs(x);
    for (int x2 = sx.first(); x2 >= 0; x2 = sx.next(x2))
      if (!c.Y.rel.at(c.h[x], c.h[x2])) return {false, 1, x, x2};
  }
  for (int x = 0; x < c.X.n; ++x) {
    SmallSet ys = c.Y.succs(c.h[x]);
    for (int y = ys.first(); y >= 0; y = ys.next(y))
      if (!c.img_succ[x].intersects(c.tpos_below[y])) return {false, 2, x, y};
  }
  for (int x = 0; x < c.X.n; ++x) {
    SmallSet ys = c.Y.preds(c.h[x]);
    for (int y = ys.first(); y >= 0; y = ys.next(y))
      if (!c.img_pred[x].intersects(c.tneg_below[y])) return {false, 3, x, y};
  }
  for (int x = 0; x < c.X.n; ++x) {
    SmallSet ys = c.Y.preds(c.h[x]);
    for (int y = ys.first(); y >= 0; y = ys.next(y))
      if (!c.img_pred[x].intersects(c.tpos_below[y])) return {false, 4, x, y};
  }
  return {};
}

// ---------------------------------------------------------------------------
// Morphism classes. All four classifiers require an f-morphism.

struct ClassVerdict {
  bool ok = true;
  int x = -1, y = -1; // first counterexample
  explicit operator bool() const { return ok; }
};

namespace detail {
inline void require_f_morphism(const FrameMap& m) {
  if (!is_f_morphism(m))
    throw ValidationError("NotFMorphism", {}, "map is not a frame morphism");
}
} // namespace detail

inline ClassVerdict is_dense(const FrameMap& m) {
  detail::require_f_morphism(m);
  detail::MapContext c(m);
  for (int y = 0; y < c.Y.n; ++y) {
    SmallSet ps = c.Y.preds(y);
    for (int y2 = ps.first(); y2 >= 0; y2 = ps.next(y2))
      if (!(c.img_all & c.tpos_below[y]).intersects(c.Y.succs(y2)))
        return {false, y, y2};
  }
  return {};
}

inline ClassVerdict is_embedding(const FrameMap& m) {
  detail::require_f_morphism(m);
  for (int x = 0; x < m.source.n(); ++x)
    for (int x2 = 0; x2 < m.source.n(); ++x2)
      if (m.target.frame.rel.at(m.map[x], m.map[x2]) &&
          !m.source.frame.succs(x).intersects(pos_below(m.source.frame, x2)))
        return {false, x, x2};
  return {};
}

// Strongly dense: every target point is positively two-way refined by an
// image point, which pins the dual homomorphism injective.
inline ClassVerdict is_strongly_dense(const FrameMap& m) {
  detail::require_f_morphism(m);
  detail::MapContext c(m);
  for (int y = 0; y < c.Y.n; ++y) {
    SmallSet above;
    for (int x = 0; x < c.X.n; ++x)
      if (pos_refines(c.Y, y, c.h[x])) above.set(c.h[x]);
    if (!(c.img_all & c.tpos_below[y]).intersects(above)) return {false, y, -1};
  }
  return {};
}

inline ClassVerdict is_strong_embedding(const FrameMap& m) {
  detail::require_f_morphism(m);
  for (int x = 0; x < m.source.n(); ++x)
    for (int x2 = 0; x2 < m.source.n(); ++x2)
      if (m.target.frame.rel.at(m.map[x], m.map[x2]) &&
          !m.source.frame.rel.at(x, x2))
        return {false, x, x2};
  return {};
}

// ---------------------------------------------------------------------------
// Dual of a frame map: inverse image between positive algebras (from the
// target's algebra to the source's).

inline LatticeHom chi_of_map(const FrameMap& m, const AlgebraLattice& src_alg,
                             const AlgebraLattice& tgt_alg) {
  detail::require_f_morphism(m);
  LatticeHom hom{tgt_alg.fundamental(), src_alg.fundamental(), {}};
  hom.map.resize(tgt_alg.algebra.size());
  for (int i = 0; i < tgt_alg.algebra.size(); ++i) {
    SmallSet a = tgt_alg.algebra.at(i);
    SmallSet pre;
    for (int x = 0; x < m.source.n(); ++x)
      if (a.test(m.map[x])) pre.set(x);
    int k = src_alg.algebra.index_of(pre);
    if (k < 0)
      throw ValidationError("PreimageEscapesAlgebra", {i},
                            "inverse image is not a fixpoint");
    hom.map[i] = static_cast<std::uint8_t>(k);
  }
  auto v = check_hom(hom);
  if (!v.ok)
    throw ValidationError("DualNotAHom", {v.a, v.b},
                          "inverse image fails " + v.equation + " preservation");
  return hom;
}

inline LatticeHom chi_of_map(const FrameMap& m) {
  return chi_of_map(m, algebra_lattice(m.source.frame),
                    algebra_lattice(m.target.frame));
}

// ---------------------------------------------------------------------------
// Dual of a lattice homomorphism: filter/ideal preimage between canonical
// frames (from the target's canonical frame to the source's).

inline FrameMap digamma_of_hom(const LatticeHom& f, const CanonicalFrame& cf_src,
                               const CanonicalFrame& cf_tgt) {
  auto v = check_hom(f);
  if (!v.ok) throw ValidationError("NotAHom", {v.a, v.b}, "not a homomorphism");
  FrameMap m{cf_tgt.frame, cf_src.frame, {}};
  m.map.resize(cf_tgt.n());
  for (int i = 0; i < cf_tgt.n(); ++i) {
    SmallSet pf, pi;
    for (int a = 0; a < f.source.n(); ++a) {
      if (cf_tgt.labels[i].filter.test(f.map[a])) pf.set(a);
      if (cf_tgt.labels[i].ideal.test(f.map[a])) pi.set(a);
    }
    int found = -1;
    for (int j = 0; j < cf_src.n(); ++j)
      if (cf_src.labels[j].filter == pf && cf_src.labels[j].ideal == pi) {
        found = j;
        break;
      }
    if (found < 0)
      throw ValidationError("PreimagePairMissing", {i},
                            "preimage pair is not a canonical point");
    m.map[i] = static_cast<std::uint8_t>(found);
  }
  auto fv = is_f_morphism(m);
  if (!fv.ok)
    throw ValidationError("DualNotFMorphism", {fv.condition, fv.x, fv.y},
                          "canonical map fails a morphism condition");
  return m;
}

inline FrameMap digamma_of_hom(const LatticeHom& f) {
  return digamma_of_hom(f, canonical_frame(f.source), canonical_frame(f.target));
}

// hat-compatibility: the preimage of every hat image under the canonical
// map is the hat image of the mapped element.
inline bool digamma_hat_compatible(const LatticeHom& f, const FrameMap& dig,
                                   const CanonicalFrame& cf_src,
                                   const CanonicalFrame& cf_tgt) {
  for (int a = 0; a < f.source.n(); ++a) {
    SmallSet ha = hat(cf_src, a);
    SmallSet pre;
    for (int x = 0; x < cf_tgt.n(); ++x)
      if (ha.test(dig.map[x])) pre.set(x);
    if (pre != hat(cf_tgt, f.map[a])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Duality report: the four biconditionals tying map classes to properties
// of their duals.

struct DualityReport {
  bool dense = false, chi_injective = false;
  bool embedding = false, chi_surjective = false;
  bool strongly_dense = false, hom_injective = false;
  bool strong_embedding = false, hom_surjective = false;
  bool frame_side = false; // which half of the report is populated
  bool ok() const {
    if (frame_side)
      return dense == chi_injective && embedding == chi_surjective;
    return hom_injective == strongly_dense && hom_surjective == strong_embedding;
  }
};

inline DualityReport duality_check(const FrameMap& m) {
  DualityReport r;
  r.frame_side = true;
  LatticeHom chi = chi_of_map(m);
  r.dense = is_dense(m).ok;
  r.embedding = is_embedding(m).ok;
  r.chi_injective = chi.injective();
  r.chi_surjective = chi.surjective();
  return r;
}

inline DualityReport duality_check(const LatticeHom& f) {
  DualityReport r;
  r.frame_side = false;
  FrameMap dig = digamma_of_hom(f);
  r.hom_injective = f.injective();
  r.hom_surjective = f.surjective();
  r.strongly_dense = is_strongly_dense(dig).ok;
  r.strong_embedding = is_strong_embedding(dig).ok;
  return r;
}

// ---------------------------------------------------------------------------
// Exhaustive map tables between two frames (or two lattices), for the
// quantified sweeps. Capped: the lemma suites quantify over every table.

inline void for_each_map(int domain, int codomain, std::size_t cap,
                         const std::function<void(const std::vector<std::uint8_t>&)>& fn) {
  double total = 1;
  for (int i = 0; i < domain; ++i) total *= codomain;
  if (total > static_cast<double>(cap))
    throw CapExceeded("map table count exceeds cap");
  std::vector<std::uint8_t> tab(domain, 0);
  while (true) {
    fn(tab);
    int k = domain - 1;
    while (k >= 0 && tab[k] == codomain - 1) tab[k--] = 0;
    if (k < 0) break;
    ++tab[k];
  }
}

inline std::vector<FrameMap> enumerate_f_morphisms(const FundamentalFrame& X,
                                                   const FundamentalFrame& Y,
                                                   std::size_t cap = 100000) {
  std::vector<FrameMap> out;
  for_each_map(X.n(), Y.n(), cap, [&](const std::vector<std::uint8_t>& tab) {
    FrameMap m{X, Y, tab};
    if (is_f_morphism(m)) out.push_back(std::move(m));
  });
  return out;
}

inline std::vector<LatticeHom> enumerate_homs(const FundamentalLattice& L,
                                              const FundamentalLattice& M,
                                              std::size_t cap = 100000) {
  std::vector<LatticeHom> out;
  for_each_map(L.n(), M.n(), cap, [&](const std::vector<std::uint8_t>& tab) {
    LatticeHom h{L, M, tab};
    if (check_hom(h)) out.push_back(std::move(h));
  });
  return out;
}

} // namespace fundlog
