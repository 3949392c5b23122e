// Relational frames with a co-serial openness relation, the induced
// negations and closure operator, refinement preorders, fixpoint set
// algebras, fundamentality checks and exhaustive frame enumeration.
#pragma once

#include <numeric>
#include <set>
#include <unordered_map>
#include <utility>

#include "fundlog/core.hpp"
#include "fundlog/lattice.hpp"

namespace fundlog {

// Points 0..n-1; rel.at(x,y) means x R y. Co-serial: every column nonempty.
struct RelFrame {
  int n = 0;
  BoolMat rel;  // rows: successors
  BoolMat conv; // transpose: conv.row(x) = predecessors of x

  SmallSet succs(int x) const { return rel.row(x); }
  SmallSet preds(int x) const { return conv.row(x); }
  SmallSet universe() const { return SmallSet::full(n); }
};

inline RelFrame make_frame(int n, const BoolMat& rel) {
  RelFrame f;
  f.n = n;
  f.rel = rel;
  f.conv = rel.transposed();
  for (int x = 0; x < n; ++x)
    if (f.preds(x).empty())
      throw ValidationError("NotCoSerial", {x},
                            "point " + std::to_string(x) + " has no predecessor");
  return f;
}

// ---------------------------------------------------------------------------
// Induced operations on point-sets

inline SmallSet neg_pos(const RelFrame& f, SmallSet a) { // forbids all predecessors
  SmallSet out;
  for (int x = 0; x < f.n; ++x)
    if (!f.preds(x).intersects(a)) out.set(x);
  return out;
}

inline SmallSet neg_neg(const RelFrame& f, SmallSet a) { // forbids all successors
  SmallSet out;
  for (int x = 0; x < f.n; ++x)
    if (!f.succs(x).intersects(a)) out.set(x);
  return out;
}

inline SmallSet closure(const RelFrame& f, SmallSet a) {
  return neg_pos(f, neg_neg(f, a));
}

// x positively refines y: every predecessor of x is a predecessor of y.
inline bool pos_refines(const RelFrame& f, int x, int y) {
  return f.preds(x).subset_of(f.preds(y));
}

// x negatively refines y: every successor of x is a successor of y.
inline bool neg_refines(const RelFrame& f, int x, int y) {
  return f.succs(x).subset_of(f.succs(y));
}

// Down-set of x in the positive refinement preorder.
inline SmallSet pos_below(const RelFrame& f, int x) {
  SmallSet out;
  for (int y = 0; y < f.n; ++y)
    if (pos_refines(f, y, x)) out.set(y);
  return out;
}

inline SmallSet neg_below(const RelFrame& f, int x) {
  SmallSet out;
  for (int y = 0; y < f.n; ++y)
    if (neg_refines(f, y, x)) out.set(y);
  return out;
}

// ---------------------------------------------------------------------------
// Fundamentality

struct FrameVerdict {
  bool ok = true;
  std::string code; // NotPseudoReflexive | NotPseudoSymmetric
  int x = -1, y = -1;
  explicit operator bool() const { return ok; }
};

inline FrameVerdict check_fundamental_frame(const RelFrame& f) {
  for (int x = 0; x < f.n; ++x)
    if (!f.preds(x).intersects(pos_below(f, x)))
      return {false, "NotPseudoReflexive", x, -1};
  for (int x = 0; x < f.n; ++x) {
    SmallSet rx = f.succs(x);
    for (int y = rx.first(); y >= 0; y = rx.next(y))
      if (!f.preds(x).intersects(pos_below(f, y)))
        return {false, "NotPseudoSymmetric", x, y};
  }
  return {};
}

struct FundamentalFrame {
  RelFrame frame;
  int n() const { return frame.n; }
};

inline FundamentalFrame is_fundamental_or_throw(const RelFrame& f) {
  auto v = check_fundamental_frame(f);
  if (!v.ok) throw ValidationError(v.code, {v.x, v.y}, "frame is not fundamental");
  return FundamentalFrame{f};
}

// ---------------------------------------------------------------------------
// Set algebras: the fixpoint families of the two composed negations.
// Members are listed in canonical bit-vector order. For more than 16 points
// the family is generated by intersecting the complement-row generators
// instead of scanning all subsets.

enum class Polarity { Positive, Negative };

struct SetAlgebra {
  Polarity polarity = Polarity::Positive;
  int points = 0;
  std::vector<SmallSet> members; // sorted
  std::unordered_map<SmallSet, int, SmallSetHash> index;

  int size() const { return static_cast<int>(members.size()); }
  SmallSet at(int i) const { return members[i]; }
  int index_of(SmallSet s) const {
    auto it = index.find(s);
    return it == index.end() ? -1 : it->second;
  }
  bool contains(SmallSet s) const { return index.count(s) != 0; }
};

namespace detail {
inline SetAlgebra build_algebra(const RelFrame& f, Polarity pol) {
  SetAlgebra alg;
  alg.polarity = pol;
  alg.points = f.n;
  auto fix = [&](SmallSet a) {
    return pol == Polarity::Positive ? neg_pos(f, neg_neg(f, a))
                                     : neg_neg(f, neg_pos(f, a));
  };
  std::vector<SmallSet> found;
  if (f.n <= 16) {
    for (std::uint64_t bits = 0; bits < (1ull << f.n); ++bits) {
      SmallSet a = SmallSet::from_low_bits(bits);
      if (fix(a) == a) found.push_back(a);
    }
  } else {
    // every member is an intersection of single-point negation images
    std::set<SmallSet> seen;
    std::vector<SmallSet> work;
    auto add = [&](SmallSet s) {
      if (seen.insert(s).second) work.push_back(s);
    };
    add(f.universe());
    for (int x = 0; x < f.n; ++x)
      add(pol == Polarity::Positive ? neg_pos(f, SmallSet::single(x))
                                    : neg_neg(f, SmallSet::single(x)));
    for (std::size_t i = 0; i < work.size(); ++i)
      for (std::size_t j = 0; j < i; ++j) add(work[i] & work[j]);
    found.assign(seen.begin(), seen.end());
  }
  std::sort(found.begin(), found.end());
  alg.members = std::move(found);
  for (int i = 0; i < alg.size(); ++i) alg.index.emplace(alg.members[i], i);
  return alg;
}
} // namespace detail

inline SetAlgebra positive_algebra(const RelFrame& f) {
  return detail::build_algebra(f, Polarity::Positive);
}
inline SetAlgebra negative_algebra(const RelFrame& f) {
  return detail::build_algebra(f, Polarity::Negative);
}

// The positive algebra packaged as a lattice under inclusion, with the
// induced negation table. Fundamental exactly when the frame is.
struct AlgebraLattice {
  SetAlgebra algebra;
  FiniteLattice lattice;
  std::vector<std::uint8_t> neg;

  FundamentalLattice fundamental() const {
    return validate_fundamental(lattice, neg);
  }
};

inline AlgebraLattice algebra_lattice(const RelFrame& f) {
  AlgebraLattice out;
  out.algebra = positive_algebra(f);
  int m = out.algebra.size();
  BoolMat leq(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      leq.set(i, j, out.algebra.at(i).subset_of(out.algebra.at(j)));
  out.lattice = validate_lattice(m, leq);
  out.neg.resize(m);
  for (int i = 0; i < m; ++i) {
    int k = out.algebra.index_of(neg_pos(f, out.algebra.at(i)));
    if (k < 0)
      throw ValidationError("NegationEscapesAlgebra", {i},
                            "negation image is not a fixpoint");
    out.neg[i] = static_cast<std::uint8_t>(k);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Frame facts report: seven structural properties that hold on every
// relational frame; a failure signals an implementation bug.

struct FactsReport {
  std::array<bool, 7> item{};
  std::array<std::string, 7> witness{};
  bool all() const {
    for (bool b : item)
      if (!b) return false;
    return true;
  }
};

inline FactsReport check_facts(const RelFrame& f) {
  FactsReport r;
  r.item.fill(true);
  SetAlgebra pos = positive_algebra(f);
  SetAlgebra neg = negative_algebra(f);
  auto wit = [](std::initializer_list<int> xs) {
    std::string s;
    for (int x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
  };

  if (f.n <= 16) {
    for (std::uint64_t bits = 0; bits < (1ull << f.n); ++bits) {
      SmallSet a = SmallSet::from_low_bits(bits);
      if (pos.contains(a) != (closure(f, a) == a)) {
        r.item[0] = false;
        r.witness[0] = "A=" + std::to_string(bits);
      }
      if (neg.contains(a) != (neg_neg(f, neg_pos(f, a)) == a)) {
        r.item[1] = false;
        r.witness[1] = "A=" + std::to_string(bits);
      }
    }
  }
  for (int x = 0; x < f.n; ++x) {
    if (!pos.contains(pos_below(f, x)) ||
        !pos.contains(f.succs(x).complement_within(f.n))) {
      r.item[2] = false;
      r.witness[2] = wit({x});
    }
    if (!neg.contains(neg_below(f, x)) ||
        !neg.contains(f.preds(x).complement_within(f.n))) {
      r.item[3] = false;
      r.witness[3] = wit({x});
    }
  }
  // preorders
  for (int x = 0; x < f.n; ++x)
    if (!pos_refines(f, x, x) || !neg_refines(f, x, x)) {
      r.item[4] = false;
      r.witness[4] = wit({x});
    }
  for (int x = 0; x < f.n; ++x)
    for (int y = 0; y < f.n; ++y)
      for (int z = 0; z < f.n; ++z) {
        if (pos_refines(f, x, y) && pos_refines(f, y, z) && !pos_refines(f, x, z)) {
          r.item[4] = false;
          r.witness[4] = wit({x, y, z});
        }
        if (neg_refines(f, x, y) && neg_refines(f, y, z) && !neg_refines(f, x, z)) {
          r.item[4] = false;
          r.witness[4] = wit({x, y, z});
        }
      }
  for (int x = 0; x < f.n; ++x)
    for (int y = 0; y < f.n; ++y) {
      bool lhs = pos_refines(f, x, y);
      bool rhs = true;
      for (const auto& a : pos.members)
        if (a.test(y) && !a.test(x)) rhs = false;
      if (lhs != rhs) {
        r.item[5] = false;
        r.witness[5] = wit({x, y});
      }
      lhs = neg_refines(f, x, y);
      rhs = true;
      for (const auto& b : neg.members)
        if (b.test(y) && !b.test(x)) rhs = false;
      if (lhs != rhs) {
        r.item[6] = false;
        r.witness[6] = wit({x, y});
      }
    }
  return r;
}

// ---------------------------------------------------------------------------
// Enumeration: all co-serial relations on n labeled points, generated by a
// column-mask odometer (each column ranges over nonempty subsets).

struct FrameEnumOptions {
  bool fundamental_only = false;
  bool up_to_iso = false;
  int cap = 4;
};

inline std::uint64_t frame_encoding(const RelFrame& f, const std::vector<int>& perm) {
  std::uint64_t code = 0;
  for (int i = 0; i < f.n; ++i)
    for (int j = 0; j < f.n; ++j)
      if (f.rel.at(perm[i], perm[j])) code |= 1ull << (i * f.n + j);
  return code;
}

inline std::uint64_t frame_canonical_code(const RelFrame& f) {
  std::vector<int> perm(f.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t canon = ~0ull;
  do {
    canon = std::min(canon, frame_encoding(f, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return canon;
}

inline bool frames_isomorphic(const RelFrame& a, const RelFrame& b) {
  if (a.n != b.n) return false;
  return frame_canonical_code(a) == frame_canonical_code(b);
}

inline std::vector<RelFrame> enumerate_frames(int n, FrameEnumOptions opt = {}) {
  if (n < 1 || n > opt.cap)
    throw CapExceeded("frame size " + std::to_string(n) +
                      " outside the configured cap " + std::to_string(opt.cap));
  std::vector<RelFrame> out;
  std::set<std::uint64_t> seen;
  std::vector<std::uint64_t> cols(n, 1); // nonempty column masks
  while (true) {
    BoolMat rel(n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        if ((cols[j] >> i) & 1) rel.set(i, j);
    RelFrame f = make_frame(n, rel);
    bool keep = !opt.fundamental_only || check_fundamental_frame(f).ok;
    if (keep && opt.up_to_iso) keep = seen.insert(frame_canonical_code(f)).second;
    if (keep) out.push_back(std::move(f));

    int k = n - 1;
    while (k >= 0 && cols[k] == (1ull << n) - 1) cols[k--] = 1;
    if (k < 0) break;
    ++cols[k];
  }
  return out;
}

inline std::vector<FundamentalFrame> enumerate_fundamental_frames(int n,
                                                                  bool up_to_iso = false,
                                                                  int cap = 4) {
  FrameEnumOptions opt;
  opt.fundamental_only = true;
  opt.up_to_iso = up_to_iso;
  opt.cap = cap;
  std::vector<FundamentalFrame> out;
  for (auto& f : enumerate_frames(n, opt)) out.push_back(FundamentalFrame{std::move(f)});
  return out;
}

} // namespace fundlog
