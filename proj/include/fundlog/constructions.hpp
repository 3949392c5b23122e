// Coproducts of fundamental frames and the explicit isomorphism between
// the positive algebra of a coproduct and the product of the summand
// algebras.
#pragma once

#include "fundlog/core.hpp"
#include "fundlog/frame.hpp"
#include "fundlog/lattice.hpp"
#include "fundlog/morphism.hpp"

namespace fundlog {

// Tagged disjoint union; the relation holds only within summands.
inline FundamentalFrame coproduct(const std::vector<FundamentalFrame>& parts) {
  if (parts.empty())
    throw ValidationError("EmptyFamily", {}, "coproduct of no frames");
  int total = 0;
  for (const auto& p : parts) total += p.n();
  SmallSet::check_size(total);
  BoolMat rel(total);
  int off = 0;
  for (const auto& p : parts) {
    for (int i = 0; i < p.n(); ++i)
      for (int j = 0; j < p.n(); ++j)
        if (p.frame.rel.at(i, j)) rel.set(off + i, off + j);
    off += p.n();
  }
  return is_fundamental_or_throw(make_frame(total, rel));
}

inline std::vector<FrameMap> coproduct_injections(
    const std::vector<FundamentalFrame>& parts, const FundamentalFrame& sum) {
  std::vector<FrameMap> out;
  int off = 0;
  for (const auto& p : parts) {
    FrameMap m{p, sum, std::vector<std::uint8_t>(p.n())};
    for (int i = 0; i < p.n(); ++i) m.map[i] = static_cast<std::uint8_t>(off + i);
    out.push_back(std::move(m));
    off += p.n();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Product isomorphism report: the map sending a tuple of summand members to
// their tagged union is a bijection between the product of the algebras and
// the algebra of the coproduct, preserving and reflecting order and
// commuting with negation.

struct ProductIsoReport {
  bool member_bijection = true;
  bool order_preserved = true;
  bool order_reflected = true;
  bool neg_preserved = true;
  std::string witness;
  bool all() const {
    return member_bijection && order_preserved && order_reflected && neg_preserved;
  }
};

inline ProductIsoReport verify_product_iso(const std::vector<FundamentalFrame>& parts) {
  ProductIsoReport r;
  FundamentalFrame sum = coproduct(parts);
  SetAlgebra sum_alg = positive_algebra(sum.frame);

  std::vector<AlgebraLattice> fact;
  fact.reserve(parts.size());
  for (const auto& p : parts) fact.push_back(algebra_lattice(p.frame));

  std::size_t tuples = 1;
  for (const auto& a : fact) tuples *= a.algebra.size();
  if (tuples != static_cast<std::size_t>(sum_alg.size())) {
    r.member_bijection = false;
    r.witness = "cardinality mismatch";
    return r;
  }

  std::vector<int> offs(parts.size());
  int off = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    offs[k] = off;
    off += parts[k].n();
  }
  auto glue = [&](std::size_t t) {
    SmallSet u;
    for (int k = static_cast<int>(parts.size()) - 1; k >= 0; --k) {
      int i = static_cast<int>(t % fact[k].algebra.size());
      t /= fact[k].algebra.size();
      fact[k].algebra.at(i).for_each([&](int x) { u.set(offs[k] + x); });
    }
    return u;
  };

  std::vector<SmallSet> image(tuples);
  for (std::size_t t = 0; t < tuples; ++t) {
    image[t] = glue(t);
    if (sum_alg.index_of(image[t]) < 0) {
      r.member_bijection = false;
      r.witness = "tuple image escapes algebra";
      return r;
    }
  }
  for (std::size_t t = 0; t < tuples; ++t)
    for (std::size_t s = 0; s < t; ++s)
      if (image[t] == image[s]) {
        r.member_bijection = false;
        r.witness = "tuple images collide";
        return r;
      }

  FundamentalLattice prod = product([&] {
    std::vector<FundamentalLattice> Ls;
    for (const auto& a : fact) Ls.push_back(a.fundamental());
    return Ls;
  }());
  for (std::size_t t = 0; t < tuples; ++t)
    for (std::size_t s = 0; s < tuples; ++s) {
      bool pl = prod.lat.le(static_cast<int>(t), static_cast<int>(s));
      bool sl = image[t].subset_of(image[s]);
      if (pl && !sl) {
        r.order_preserved = false;
        r.witness = "order not preserved";
      }
      if (sl && !pl) {
        r.order_reflected = false;
        r.witness = "order not reflected";
      }
    }
  for (std::size_t t = 0; t < tuples; ++t)
    if (image[prod.nneg(static_cast<int>(t))] != neg_pos(sum.frame, image[t])) {
      r.neg_preserved = false;
      r.witness = "negation mismatch";
    }
  return r;
}

} // namespace fundlog
