// Modal layer: lattices with box/diamond operators, frames with an
// accessibility relation satisfying the two interaction conditions, the
// box/diamond set operators, modal morphisms, modal canonical frames,
// coproducts, filter extensions and the modal extension formula checks.
#pragma once

#include "fundlog/constructions.hpp"
#include "fundlog/core.hpp"
#include "fundlog/duality.hpp"
#include "fundlog/frame.hpp"
#include "fundlog/lattice.hpp"
#include "fundlog/morphism.hpp"

namespace fundlog {

struct ModalLattice {
  FundamentalLattice base;
  std::vector<std::uint8_t> box;
  std::vector<std::uint8_t> dia;

  int n() const { return base.n(); }
};

struct ModalFrame {
  FundamentalFrame base;
  BoolMat m;
  BoolMat mconv;

  int n() const { return base.n(); }
  SmallSet msuccs(int x) const { return m.row(x); }
};

// ---------------------------------------------------------------------------
// Modal lattice axioms: box preserves meets and top, diamond preserves
// joins and bottom, and dia(neg a) <= neg(box a). Scan order as listed.

struct ModalLatticeVerdict {
  bool ok = true;
  std::string code; // BoxMeet | BoxTop | DiaJoin | DiaBottom | Interaction
  int a = -1, b = -1;
  explicit operator bool() const { return ok; }
};

inline ModalLatticeVerdict check_modal_axioms(const FundamentalLattice& L,
                                              const std::vector<std::uint8_t>& box,
                                              const std::vector<std::uint8_t>& dia) {
  for (int a = 0; a < L.n(); ++a)
    for (int b = 0; b < L.n(); ++b)
      if (box[L.lat.meet(a, b)] != L.lat.meet(box[a], box[b]))
        return {false, "BoxMeet", a, b};
  if (box[L.lat.top] != L.lat.top) return {false, "BoxTop", -1, -1};
  for (int a = 0; a < L.n(); ++a)
    for (int b = 0; b < L.n(); ++b)
      if (dia[L.lat.join(a, b)] != L.lat.join(dia[a], dia[b]))
        return {false, "DiaJoin", a, b};
  if (dia[L.lat.bottom] != L.lat.bottom) return {false, "DiaBottom", -1, -1};
  for (int a = 0; a < L.n(); ++a)
    if (!L.lat.le(dia[L.nneg(a)], L.nneg(box[a])))
      return {false, "Interaction", a, -1};
  return {};
}

// Unified-pair condition. Each compatible filter/ideal pair demands, of an
// accessibility successor, the box-preimage of its filter and the
// diamond-preimage of its ideal; those demands must extend to compatible
// pairs separating every non-demanded element. Without this the canonical
// accessibility relation cannot represent box and diamond.
inline ModalLatticeVerdict check_unified_pair(const FundamentalLattice& L,
                                              const std::vector<std::uint8_t>& box,
                                              const std::vector<std::uint8_t>& dia) {
  CanonicalFrame cf = canonical_frame(L);
  int cn = cf.n();
  for (int i = 0; i < cn; ++i) {
    SmallSet bdem, ddem;
    for (int a = 0; a < L.n(); ++a) {
      if (cf.labels[i].filter.test(box[a])) bdem.set(a);
      if (cf.labels[i].ideal.test(dia[a])) ddem.set(a);
    }
    for (int a = 0; a < L.n(); ++a) {
      if (!cf.labels[i].filter.test(box[a])) {
        bool found = false;
        for (int j = 0; j < cn && !found; ++j)
          if (bdem.subset_of(cf.labels[j].filter) &&
              ddem.subset_of(cf.labels[j].ideal) && !cf.labels[j].filter.test(a))
            found = true;
        if (!found) return {false, "NotUnifiedPair", i, a};
      }
      if (!cf.labels[i].ideal.test(dia[a])) {
        bool found = false;
        for (int j = 0; j < cn && !found; ++j)
          if (bdem.subset_of(cf.labels[j].filter) &&
              ddem.subset_of(cf.labels[j].ideal) && !cf.labels[j].ideal.test(a))
            found = true;
        if (!found) return {false, "NotUnifiedPair", i, a};
      }
    }
  }
  return {};
}

inline ModalLatticeVerdict check_modal_lattice(const FundamentalLattice& L,
                                               const std::vector<std::uint8_t>& box,
                                               const std::vector<std::uint8_t>& dia) {
  auto v = check_modal_axioms(L, box, dia);
  if (!v.ok) return v;
  return check_unified_pair(L, box, dia);
}

inline ModalLattice validate_modal_lattice(const FundamentalLattice& L,
                                           const std::vector<std::uint8_t>& box,
                                           const std::vector<std::uint8_t>& dia) {
  auto v = check_modal_lattice(L, box, dia);
  if (!v.ok) throw ValidationError(v.code, {v.a, v.b}, "modal axiom fails");
  return ModalLattice{L, box, dia};
}

// ---------------------------------------------------------------------------
// The two accessibility conditions. Quantifier chains reduce to row/column
// intersection tests; the slow literal evaluation lives in the test oracle.

struct AufmVerdict {
  bool ok = true;
  int condition = 0;
  int x = -1, y = -1, z = -1;
  explicit operator bool() const { return ok; }
};

// Condition 1: whenever x M y and z R y, some predecessor x' of x has all
// its successors y' reaching, via M, a successor z' of z. Condition 2 is
// the mirror with the relation transposed. Together they make box restrict
// to the positive algebra and to the negative algebra.
inline AufmVerdict check_aufm(const RelFrame& f, const BoolMat& m) {
  for (int cond = 1; cond <= 2; ++cond) {
    auto fwd = [&](int u) { return cond == 1 ? f.succs(u) : f.preds(u); };
    auto bwd = [&](int u) { return cond == 1 ? f.preds(u) : f.succs(u); };
    for (int z = 0; z < f.n; ++z) {
      SmallSet good; // points whose M-row meets the forward set of z
      for (int u = 0; u < f.n; ++u)
        if (m.row(u).intersects(fwd(z))) good.set(u);
      SmallSet anchors; // x' with every forward point good
      for (int u = 0; u < f.n; ++u)
        if (fwd(u).subset_of(good)) anchors.set(u);
      for (int x = 0; x < f.n; ++x)
        if (good.test(x) && !bwd(x).intersects(anchors)) {
          int y = (m.row(x) & fwd(z)).first();
          return {false, cond, x, y, z};
        }
    }
  }
  return {};
}

inline AufmVerdict validate_aufm(const FundamentalFrame& f, const BoolMat& m) {
  return check_aufm(f.frame, m);
}

inline ModalFrame make_modal_frame(const FundamentalFrame& f, const BoolMat& m) {
  auto v = check_aufm(f.frame, m);
  if (!v.ok)
    throw ValidationError("NotAufm", {v.condition, v.x, v.y, v.z},
                          "accessibility condition fails");
  return ModalFrame{f, m, m.transposed()};
}

// ---------------------------------------------------------------------------
// Box/diamond on point-sets

inline SmallSet box_op(const ModalFrame& mf, SmallSet a) {
  SmallSet out;
  for (int x = 0; x < mf.n(); ++x)
    if (mf.m.row(x).subset_of(a)) out.set(x);
  return out;
}

inline SmallSet diamond_op(const ModalFrame& mf, SmallSet a) {
  const RelFrame& f = mf.base.frame;
  return neg_pos(f, box_op(mf, neg_neg(f, a)));
}

// The positive algebra with the induced box/diamond tables. The axiom
// families always hold here; the unified-pair condition need not, and a
// frame whose algebra fails it has no filter extension.
struct ModalAlgebraLattice {
  AlgebraLattice alg;
  std::vector<std::uint8_t> box;
  std::vector<std::uint8_t> dia;

  ModalLattice modal() const {
    return validate_modal_lattice(alg.fundamental(), box, dia);
  }
};

inline ModalAlgebraLattice modal_algebra_tables(const ModalFrame& mf) {
  ModalAlgebraLattice out;
  out.alg = algebra_lattice(mf.base.frame);
  int n = out.alg.algebra.size();
  out.box.resize(n);
  out.dia.resize(n);
  for (int i = 0; i < n; ++i) {
    int b = out.alg.algebra.index_of(box_op(mf, out.alg.algebra.at(i)));
    int d = out.alg.algebra.index_of(diamond_op(mf, out.alg.algebra.at(i)));
    if (b < 0 || d < 0)
      throw ValidationError("ModalOpEscapesAlgebra", {i},
                            "box/diamond image is not a fixpoint");
    out.box[i] = static_cast<std::uint8_t>(b);
    out.dia[i] = static_cast<std::uint8_t>(d);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Modal morphisms: frame morphisms with the two accessibility conditions;
// the second one uses the conjunction of both refinement preorders.

struct ModalFrameMap {
  ModalFrame source;
  ModalFrame target;
  std::vector<std::uint8_t> map;

  FrameMap frame_map() const { return FrameMap{source.base, target.base, map}; }
};

// Just the two accessibility conditions; callers must have checked the
// underlying frame morphism.
inline MorphismVerdict detail_aufm_conditions(const ModalFrameMap& m) {
  const RelFrame& Y = m.target.base.frame;
  for (int x = 0; x < m.source.n(); ++x) {
    SmallSet mx = m.source.m.row(x);
    for (int x2 = mx.first(); x2 >= 0; x2 = mx.next(x2))
      if (!m.target.m.at(m.map[x], m.map[x2])) return {false, 1, x, x2};
  }
  for (int x = 0; x < m.source.n(); ++x) {
    SmallSet ys = m.target.m.row(m.map[x]);
    for (int y = ys.first(); y >= 0; y = ys.next(y)) {
      bool found = false;
      SmallSet mx = m.source.m.row(x);
      for (int x2 = mx.first(); x2 >= 0 && !found; x2 = mx.next(x2))
        if (pos_refines(Y, y, m.map[x2]) && neg_refines(Y, y, m.map[x2]))
          found = true;
      if (!found) return {false, 2, x, y};
    }
  }
  return {};
}

inline MorphismVerdict is_aufm_morphism(const ModalFrameMap& m) {
  detail::require_f_morphism(m.frame_map());
  return detail_aufm_conditions(m);
}

// Inverse images commute with box and diamond on every positive member.
inline bool modal_hom_equations(const ModalFrameMap& m, const SetAlgebra& tgt_pos) {
  for (const auto& a : tgt_pos.members) {
    SmallSet pre_a, pre_box, pre_dia;
    for (int x = 0; x < m.source.n(); ++x) {
      if (a.test(m.map[x])) pre_a.set(x);
      if (box_op(m.target, a).test(m.map[x])) pre_box.set(x);
      if (diamond_op(m.target, a).test(m.map[x])) pre_dia.set(x);
    }
    if (pre_box != box_op(m.source, pre_a)) return false;
    if (pre_dia != diamond_op(m.source, pre_a)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Modal canonical frame: base is the canonical frame, accessibility by the
// box-filter / diamond-ideal tracing rule.

struct ModalCanonicalFrame {
  CanonicalFrame base;
  ModalFrame frame;
  ModalLattice origin;
};

inline ModalCanonicalFrame modal_canonical_frame(const ModalLattice& L) {
  ModalCanonicalFrame out;
  out.base = canonical_frame(L.base);
  int n = out.base.n();
  BoolMat m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool rel = true;
      for (int a = 0; a < L.n() && rel; ++a) {
        if (out.base.labels[i].filter.test(L.box[a]) &&
            !out.base.labels[j].filter.test(a))
          rel = false;
        if (out.base.labels[i].ideal.test(L.dia[a]) &&
            !out.base.labels[j].ideal.test(a))
          rel = false;
      }
      m.set(i, j, rel);
    }
  out.frame = make_modal_frame(out.base.frame, m);
  out.origin = L;
  return out;
}

// Filter extension of a modal frame: the modal canonical frame of its
// positive algebra with the induced box/diamond. Defined when that algebra
// is a valid modal lattice (throws NotUnifiedPair otherwise).
inline ModalCanonicalFrame modal_filter_extension(const ModalFrame& mf) {
  return modal_canonical_frame(modal_algebra_tables(mf).modal());
}

// ---------------------------------------------------------------------------
// Modal coproduct: blockwise base relation and accessibility.

inline ModalFrame modal_coproduct(const std::vector<ModalFrame>& parts) {
  if (parts.empty())
    throw ValidationError("EmptyFamily", {}, "coproduct of no modal frames");
  std::vector<FundamentalFrame> bases;
  bases.reserve(parts.size());
  for (const auto& p : parts) bases.push_back(p.base);
  FundamentalFrame sum = coproduct(bases);
  BoolMat m(sum.n());
  int off = 0;
  for (const auto& p : parts) {
    for (int i = 0; i < p.n(); ++i)
      for (int j = 0; j < p.n(); ++j)
        if (p.m.at(i, j)) m.set(off + i, off + j);
    off += p.n();
  }
  return make_modal_frame(sum, m);
}

// ---------------------------------------------------------------------------
// Enumeration for the sweeps: all modal structures on the enumerated
// fundamental lattices, and all accessibility relations on the enumerated
// fundamental frames.

inline std::vector<ModalLattice> enumerate_modal_lattices(int n, int cap = 6) {
  std::vector<ModalLattice> out;
  for (auto& L : enumerate_fundamental_lattices(n, cap)) {
    std::vector<std::vector<std::uint8_t>> boxes, dias;
    std::vector<std::uint8_t> t(L.n(), 0);
    while (true) {
      bool boxok = true, diaok = true;
      for (int a = 0; a < L.n() && (boxok || diaok); ++a)
        for (int b = 0; b < L.n(); ++b) {
          if (t[L.lat.meet(a, b)] != L.lat.meet(t[a], t[b])) boxok = false;
          if (t[L.lat.join(a, b)] != L.lat.join(t[a], t[b])) diaok = false;
        }
      if (t[L.lat.top] != L.lat.top) boxok = false;
      if (t[L.lat.bottom] != L.lat.bottom) diaok = false;
      if (boxok) boxes.push_back(t);
      if (diaok) dias.push_back(t);
      int k = L.n() - 1;
      while (k >= 0 && t[k] == L.n() - 1) t[k--] = 0;
      if (k < 0) break;
      ++t[k];
    }
    for (const auto& b : boxes)
      for (const auto& d : dias)
        if (check_modal_lattice(L, b, d)) out.push_back({L, b, d});
  }
  return out;
}

// All accessibility relations passing the frame conditions, over the given
// base frames. Joint relabeling dedupe when reducing up to isomorphism.
inline std::vector<ModalFrame> enumerate_modal_frames(int n, bool up_to_iso = false,
                                                      int cap = 3) {
  if (n < 1 || n > cap)
    throw CapExceeded("modal frame size " + std::to_string(n) +
                      " outside the configured cap " + std::to_string(cap));
  std::vector<ModalFrame> out;
  std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
  for (auto& f : enumerate_fundamental_frames(n, up_to_iso, cap))
    for (std::uint64_t mm = 0; mm < (1ull << (n * n)); ++mm) {
      BoolMat m(n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if ((mm >> (i * n + j)) & 1) m.set(i, j);
      if (!check_aufm(f.frame, m).ok) continue;
      if (up_to_iso) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::pair<std::uint64_t, std::uint64_t> best{~0ull, ~0ull};
        do {
          std::uint64_t cr = 0, cm = 0;
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
              if (f.frame.rel.at(perm[i], perm[j])) cr |= 1ull << (i * n + j);
              if (m.at(perm[i], perm[j])) cm |= 1ull << (i * n + j);
            }
          best = std::min(best, {cr, cm});
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (!seen.insert(best).second) continue;
      }
      out.push_back(ModalFrame{f, m, m.transposed()});
    }
  return out;
}

// ---------------------------------------------------------------------------
// Extension formulas: over the positive algebra of the modal canonical
// frame, box and diamond agree with the ideal-indexed completion formulas.

struct ModalExtensionReport {
  bool box_formula = true;
  bool dia_formula = true;
  std::string witness;
  bool all() const { return box_formula && dia_formula; }
};

inline ModalExtensionReport verify_modal_canonical_extension(const ModalLattice& L) {
  ModalExtensionReport r;
  ModalCanonicalFrame mcf = modal_canonical_frame(L);
  const RelFrame& f = mcf.base.frame.frame;
  SetAlgebra alg = positive_algebra(f);
  std::vector<SmallSet> h(L.n());
  for (int a = 0; a < L.n(); ++a) h[a] = hat(mcf.base, a);

  // all ideals, the improper one included so the index set is never empty
  std::vector<SmallSet> ideals;
  for (int b = 0; b < L.n(); ++b) ideals.push_back(L.base.lat.down(b));

  for (const auto& A : alg.members) {
    SmallSet boxf = f.universe(), diaf = f.universe();
    for (const auto& I : ideals) {
      SmallSet ua, ub, ud;
      I.for_each([&](int a) {
        ua = ua | h[a];
        ub = ub | h[L.box[a]];
        ud = ud | h[L.dia[a]];
      });
      if (A.subset_of(closure(f, ua))) {
        boxf = boxf & closure(f, ub);
        diaf = diaf & closure(f, ud);
      }
    }
    if (boxf != box_op(mcf.frame, A)) {
      r.box_formula = false;
      r.witness = "box formula";
    }
    if (diaf != diamond_op(mcf.frame, A)) {
      r.dia_formula = false;
      r.witness = "diamond formula";
    }
  }
  return r;
}

} // namespace fundlog
