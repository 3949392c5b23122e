// Test-only reference implementations: direct definitional evaluation,
// independent of the library's optimized paths, used to compute and pin
// expected values.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fundlog/frame.hpp"
#include "fundlog/lattice.hpp"

namespace oracle {

using fundlog::BoolMat;
using fundlog::RelFrame;
using fundlog::SmallSet;

// greatest lower bound by scanning all candidates
inline std::optional<int> glb(const BoolMat& leq, int n, int a, int b) {
  for (int g = 0; g < n; ++g) {
    if (!leq.at(g, a) || !leq.at(g, b)) continue;
    bool greatest = true;
    for (int c = 0; c < n; ++c)
      if (leq.at(c, a) && leq.at(c, b) && !leq.at(c, g)) greatest = false;
    if (greatest) return g;
  }
  return std::nullopt;
}

inline std::optional<int> lub(const BoolMat& leq, int n, int a, int b) {
  for (int u = 0; u < n; ++u) {
    if (!leq.at(a, u) || !leq.at(b, u)) continue;
    bool least = true;
    for (int c = 0; c < n; ++c)
      if (leq.at(a, c) && leq.at(b, c) && !leq.at(u, c)) least = false;
    if (least) return u;
  }
  return std::nullopt;
}

// all proper filters by scanning every subset against the definition
inline std::vector<SmallSet> filters(const fundlog::FiniteLattice& L) {
  std::vector<SmallSet> out;
  for (std::uint64_t bits = 1; bits < (1ull << L.n); ++bits) {
    SmallSet s = SmallSet::from_low_bits(bits);
    if (s.test(L.bottom)) continue;
    bool ok = true;
    for (int a = 0; a < L.n && ok; ++a) {
      if (!s.test(a)) continue;
      for (int b = 0; b < L.n && ok; ++b) {
        if (L.le(a, b) && !s.test(b)) ok = false;      // upward closed
        if (s.test(b) && !s.test(L.meet(a, b))) ok = false; // meet closed
      }
    }
    if (ok) out.push_back(s);
  }
  return out;
}

inline std::vector<SmallSet> ideals(const fundlog::FiniteLattice& L) {
  std::vector<SmallSet> out;
  for (std::uint64_t bits = 1; bits < (1ull << L.n); ++bits) {
    SmallSet s = SmallSet::from_low_bits(bits);
    if (s.test(L.top)) continue;
    bool ok = true;
    for (int a = 0; a < L.n && ok; ++a) {
      if (!s.test(a)) continue;
      for (int b = 0; b < L.n && ok; ++b) {
        if (L.le(b, a) && !s.test(b)) ok = false;
        if (s.test(b) && !s.test(L.join(a, b))) ok = false;
      }
    }
    if (ok) out.push_back(s);
  }
  return out;
}

// the two induced negations, straight from their displayed definitions
inline SmallSet neg_pos(const RelFrame& f, SmallSet a) {
  SmallSet out;
  for (int x = 0; x < f.n; ++x) {
    bool in = true;
    for (int x2 = 0; x2 < f.n; ++x2)
      if (f.rel.at(x2, x) && a.test(x2)) in = false;
    if (in) out.set(x);
  }
  return out;
}

inline SmallSet neg_neg(const RelFrame& f, SmallSet a) {
  SmallSet out;
  for (int x = 0; x < f.n; ++x) {
    bool in = true;
    for (int x2 = 0; x2 < f.n; ++x2)
      if (f.rel.at(x, x2) && a.test(x2)) in = false;
    if (in) out.set(x);
  }
  return out;
}

// the closure operator, from its explicit first-order description
inline SmallSet closure(const RelFrame& f, SmallSet a) {
  SmallSet out;
  for (int x = 0; x < f.n; ++x) {
    bool in = true;
    for (int y = 0; y < f.n; ++y) {
      if (!f.rel.at(y, x)) continue;
      bool witness = false;
      for (int z = 0; z < f.n; ++z)
        if (f.rel.at(y, z) && a.test(z)) witness = true;
      if (!witness) in = false;
    }
    if (in) out.set(x);
  }
  return out;
}

inline std::vector<SmallSet> positive_members(const RelFrame& f) {
  std::vector<SmallSet> out;
  for (std::uint64_t bits = 0; bits < (1ull << f.n); ++bits) {
    SmallSet a = SmallSet::from_low_bits(bits);
    if (oracle::neg_pos(f, oracle::neg_neg(f, a)) == a) out.push_back(a);
  }
  return out;
}

// fundamentality, pointwise from the definitions
inline bool frame_fundamental(const RelFrame& f) {
  auto pos_below = [&](int x) {
    SmallSet s;
    for (int y = 0; y < f.n; ++y) {
      bool refines = true;
      for (int z = 0; z < f.n; ++z)
        if (f.rel.at(z, y) && !f.rel.at(z, x)) refines = false;
      if (refines) s.set(y);
    }
    return s;
  };
  for (int x = 0; x < f.n; ++x) {
    SmallSet preds;
    for (int y = 0; y < f.n; ++y)
      if (f.rel.at(y, x)) preds.set(y);
    if (!preds.intersects(pos_below(x))) return false;
    for (int x2 = 0; x2 < f.n; ++x2)
      if (f.rel.at(x, x2) && !preds.intersects(pos_below(x2))) return false;
  }
  return true;
}

// the two accessibility conditions, literal nested quantifiers
inline bool aufm_conditions(const RelFrame& f, const BoolMat& m) {
  for (int x = 0; x < f.n; ++x)
    for (int y = 0; y < f.n; ++y)
      for (int z = 0; z < f.n; ++z) {
        if (m.at(x, y) && f.rel.at(z, y)) {
          bool ok = false;
          for (int x2 = 0; x2 < f.n && !ok; ++x2) {
            if (!f.rel.at(x2, x)) continue;
            bool all = true;
            for (int y2 = 0; y2 < f.n && all; ++y2) {
              if (!f.rel.at(x2, y2)) continue;
              bool ex = false;
              for (int z2 = 0; z2 < f.n && !ex; ++z2)
                if (m.at(y2, z2) && f.rel.at(z, z2)) ex = true;
              if (!ex) all = false;
            }
            if (all) ok = true;
          }
          if (!ok) return false;
        }
        if (m.at(x, y) && f.rel.at(y, z)) {
          bool ok = false;
          for (int x2 = 0; x2 < f.n && !ok; ++x2) {
            if (!f.rel.at(x, x2)) continue;
            bool all = true;
            for (int y2 = 0; y2 < f.n && all; ++y2) {
              if (!f.rel.at(y2, x2)) continue;
              bool ex = false;
              for (int z2 = 0; z2 < f.n && !ex; ++z2)
                if (m.at(y2, z2) && f.rel.at(z2, z)) ex = true;
              if (!ex) all = false;
            }
            if (all) ok = true;
          }
          if (!ok) return false;
        }
      }
  return true;
}

// labeled lattice count by scanning every boolean matrix
inline long labeled_lattices(int n) {
  long count = 0;
  for (std::uint64_t bits = 0; bits < (1ull << (n * n)); ++bits) {
    BoolMat leq(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if ((bits >> (i * n + j)) & 1) leq.set(i, j);
    try {
      fundlog::validate_lattice(n, leq);
      ++count;
    } catch (const fundlog::ValidationError&) {
    }
  }
  return count;
}

inline long automorphisms(const fundlog::FiniteLattice& L) {
  std::vector<int> perm(L.n);
  for (int i = 0; i < L.n; ++i) perm[i] = i;
  long count = 0;
  do {
    bool ok = true;
    for (int i = 0; i < L.n && ok; ++i)
      for (int j = 0; j < L.n && ok; ++j)
        if (L.le(i, j) != L.le(perm[i], perm[j])) ok = false;
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

} // namespace oracle
