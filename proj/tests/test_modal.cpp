#include <catch2/catch_amalgamated.hpp>

#include "fundlog/modal.hpp"
#include "oracle.hpp"

using namespace fundlog;

namespace {

FundamentalFrame identity2() {
  BoolMat rel(2);
  rel.set(0, 0);
  rel.set(1, 1);
  return is_fundamental_or_throw(make_frame(2, rel));
}

FundamentalFrame point() {
  BoolMat rel(1);
  rel.set(0, 0);
  return is_fundamental_or_throw(make_frame(1, rel));
}

FundamentalLattice chain(int n, std::vector<std::uint8_t> neg) {
  BoolMat leq(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) leq.set(i, j);
  return validate_fundamental(validate_lattice(n, leq), neg);
}

FundamentalLattice boolean4() {
  BoolMat leq(4);
  for (int i = 0; i < 4; ++i) leq.set(i, i);
  leq.set(0, 1);
  leq.set(0, 2);
  leq.set(0, 3);
  leq.set(1, 3);
  leq.set(2, 3);
  return validate_fundamental(validate_lattice(4, leq), {3, 2, 1, 0});
}

BoolMat empty_rel(int n) { return BoolMat(n); }

} // namespace

TEST_CASE("accessibility validation on the named examples") {
  BoolMat loop(1);
  loop.set(0, 0);
  CHECK(validate_aufm(point(), loop).ok);             // identity on one point
  CHECK(validate_aufm(point(), empty_rel(1)).ok);     // vacuous
  CHECK(validate_aufm(identity2(), empty_rel(2)).ok); // vacuous
  BoolMat id2(2);
  id2.set(0, 0);
  id2.set(1, 1);
  CHECK(validate_aufm(identity2(), id2).ok); // the base relation itself
}

TEST_CASE("fast accessibility check agrees with the literal quantifier oracle") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& f : enumerate_fundamental_frames(n))
      for (std::uint64_t mm = 0; mm < (1ull << (n * n)); ++mm) {
        BoolMat m(n);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            if ((mm >> (i * n + j)) & 1) m.set(i, j);
        CHECK(check_aufm(f.frame, m).ok == oracle::aufm_conditions(f.frame, m));
      }
}

TEST_CASE("box and diamond under empty and identity accessibility") {
  ModalFrame empty = make_modal_frame(identity2(), empty_rel(2));
  const RelFrame& fr = empty.base.frame;
  for (std::uint64_t b = 0; b < 4; ++b) {
    SmallSet a = SmallSet::from_low_bits(b);
    CHECK(box_op(empty, a) == fr.universe());
    CHECK(diamond_op(empty, a) == SmallSet{}); // pseudo-dual of constant top
  }

  BoolMat id2(2);
  id2.set(0, 0);
  id2.set(1, 1);
  ModalFrame ident = make_modal_frame(identity2(), id2);
  for (const auto& a : positive_algebra(fr).members) {
    CHECK(box_op(ident, a) == a);
    CHECK(diamond_op(ident, a) == a);
  }
  CHECK(box_op(ident, fr.universe()) == fr.universe());
}

TEST_CASE("box restricts to both algebras and diamond interacts correctly") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& mf : enumerate_modal_frames(n, true)) {
      const RelFrame& fr = mf.base.frame;
      SetAlgebra pos = positive_algebra(fr);
      SetAlgebra neg = negative_algebra(fr);
      for (const auto& a : pos.members) {
        CHECK(pos.contains(box_op(mf, a)));
        CHECK(pos.contains(diamond_op(mf, a)));
        CHECK(diamond_op(mf, neg_pos(fr, a)).subset_of(neg_pos(fr, box_op(mf, a))));
        // distribution over meets and closure-joins
        for (const auto& b : pos.members) {
          CHECK(box_op(mf, a & b) == (box_op(mf, a) & box_op(mf, b)));
          CHECK(diamond_op(mf, closure(fr, a | b)) ==
                closure(fr, diamond_op(mf, a) | diamond_op(mf, b)));
        }
      }
      for (const auto& b : neg.members) {
        SmallSet bb;
        for (int x = 0; x < fr.n; ++x)
          if (mf.m.row(x).subset_of(b)) bb.set(x);
        CHECK(neg.contains(bb));
      }
    }
}

TEST_CASE("modal lattice axioms on the named examples") {
  auto two = chain(2, {1, 0});
  CHECK(check_modal_lattice(two, {0, 1}, {0, 1}).ok); // identity pair
  CHECK(check_modal_lattice(two, {1, 1}, {0, 0}).ok); // constant top / bottom
  auto v = check_modal_lattice(two, {0, 0}, {0, 1});
  CHECK_FALSE(v.ok);
  CHECK(v.code == "BoxTop");

  // all five families hold but the pair is not unified: no accessibility
  // relation on the canonical frame can represent it
  auto three = chain(3, {2, 0, 0});
  REQUIRE(check_modal_axioms(three, {0, 0, 2}, {0, 0, 1}).ok);
  auto u = check_modal_lattice(three, {0, 0, 2}, {0, 0, 1});
  CHECK_FALSE(u.ok);
  CHECK(u.code == "NotUnifiedPair");
}

TEST_CASE("modal lattice enumeration counts") {
  CHECK(enumerate_modal_lattices(1).size() == 1);
  CHECK(enumerate_modal_lattices(2).size() == 2);
  CHECK(enumerate_modal_lattices(3).size() == 10);
}

TEST_CASE("modal canonical frames of the named lattices") {
  auto two = chain(2, {1, 0});
  ModalCanonicalFrame idc = modal_canonical_frame(validate_modal_lattice(two, {0, 1}, {0, 1}));
  REQUIRE(idc.base.n() == 1);
  CHECK(idc.frame.m.at(0, 0)); // accessibility loop

  ModalCanonicalFrame cc =
      modal_canonical_frame(validate_modal_lattice(two, {1, 1}, {0, 0}));
  REQUIRE(cc.base.n() == 1);
  CHECK_FALSE(cc.frame.m.at(0, 0)); // demands are improper: no successor

  ModalLattice dia = validate_modal_lattice(boolean4(), {0, 1, 2, 3}, {0, 1, 2, 3});
  ModalCanonicalFrame dc = modal_canonical_frame(dia);
  CHECK(dc.base.n() == 5);
  CHECK(validate_aufm(dc.base.frame, dc.frame.m).ok);
}

TEST_CASE("modal morphisms: identity, coproduct injection, violator") {
  BoolMat id2(2);
  id2.set(0, 0);
  id2.set(1, 1);
  ModalFrame ident = make_modal_frame(identity2(), id2);
  ModalFrameMap idm{ident, ident, {0, 1}};
  CHECK(is_aufm_morphism(idm).ok);
  CHECK(modal_hom_equations(idm, positive_algebra(ident.base.frame)));

  BoolMat loop(1);
  loop.set(0, 0);
  ModalFrame pt = make_modal_frame(point(), loop);
  ModalFrame sum = modal_coproduct({pt, pt});
  ModalFrameMap inj{pt, sum, {0}};
  CHECK(is_aufm_morphism(inj).ok);
  ModalFrameMap inj2{pt, sum, {1}};
  CHECK(is_aufm_morphism(inj2).ok);

  // source has an accessibility edge the target image lacks
  ModalFrame bare = make_modal_frame(point(), empty_rel(1));
  ModalFrameMap viol{pt, bare, {0}};
  auto v = is_aufm_morphism(viol);
  CHECK_FALSE(v.ok);
  CHECK(v.condition == 1);
}

TEST_CASE("modal filter extensions of the named frames") {
  BoolMat loop(1);
  loop.set(0, 0);
  ModalFrame pt = make_modal_frame(point(), loop);
  ModalCanonicalFrame ext = modal_filter_extension(pt);
  REQUIRE(ext.base.n() == 1);
  CHECK(ext.frame.m.at(0, 0));

  BoolMat id2(2);
  id2.set(0, 0);
  id2.set(1, 1);
  ModalFrame ident = make_modal_frame(identity2(), id2);
  ModalCanonicalFrame ext2 = modal_filter_extension(ident);
  CHECK(ext2.base.n() == 5);
  CHECK(validate_aufm(ext2.base.frame, ext2.frame.m).ok);

  // empty accessibility: box is constant top on the algebra, every demand
  // is improper, so the extension's relation is empty
  ModalFrame empty = make_modal_frame(identity2(), empty_rel(2));
  ModalCanonicalFrame ext3 = modal_filter_extension(empty);
  CHECK(ext3.base.n() == 5);
  for (int i = 0; i < ext3.base.n(); ++i)
    for (int j = 0; j < ext3.base.n(); ++j) CHECK_FALSE(ext3.frame.m.at(i, j));
}

TEST_CASE("a valid coproduct can still have no filter extension") {
  BoolMat loop(1);
  loop.set(0, 0);
  ModalFrame with_loop = make_modal_frame(point(), loop);
  ModalFrame without = make_modal_frame(point(), empty_rel(1));
  ModalFrame mixed = modal_coproduct({without, with_loop});
  CHECK(validate_aufm(mixed.base, mixed.m).ok);
  CHECK(mixed.m.at(1, 1));
  CHECK_FALSE(mixed.m.at(0, 0));
  // its algebra pairs a constant-top box with an identity-like box and is
  // not a unified pair, so the extension is undefined
  try {
    modal_filter_extension(mixed);
    FAIL("expected NotUnifiedPair");
  } catch (const ValidationError& e) {
    CHECK(e.code == "NotUnifiedPair");
  }
}

TEST_CASE("modal coproducts: copy, two loops, block structure") {
  BoolMat loop(1);
  loop.set(0, 0);
  ModalFrame pt = make_modal_frame(point(), loop);
  ModalFrame one = modal_coproduct({pt});
  CHECK(one.n() == 1);

  ModalFrame two = modal_coproduct({pt, pt});
  CHECK(two.n() == 2);
  CHECK(two.base.frame.rel.at(0, 0));
  CHECK_FALSE(two.base.frame.rel.at(0, 1));
  CHECK(two.m.at(0, 0));
  CHECK(two.m.at(1, 1));
  CHECK_FALSE(two.m.at(0, 1));

  CHECK_THROWS_AS(modal_coproduct({}), ValidationError);
}

TEST_CASE("extension formulas hold for the named modal lattices") {
  auto two = chain(2, {1, 0});
  CHECK(verify_modal_canonical_extension(validate_modal_lattice(two, {0, 1}, {0, 1})).all());
  CHECK(verify_modal_canonical_extension(validate_modal_lattice(two, {1, 1}, {0, 0})).all());
  ModalLattice dia = validate_modal_lattice(boolean4(), {0, 1, 2, 3}, {0, 1, 2, 3});
  CHECK(verify_modal_canonical_extension(dia).all());
  // constant-top box with constant-bottom diamond on the chain
  auto three = chain(3, {2, 0, 0});
  CHECK(verify_modal_canonical_extension(validate_modal_lattice(three, {2, 2, 2}, {0, 0, 0}))
            .all());
}

TEST_CASE("canonical modal frames represent box and diamond on hat images") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& M : enumerate_modal_lattices(n)) {
      ModalCanonicalFrame mcf = modal_canonical_frame(M);
      const RelFrame& fr = mcf.base.frame.frame;
      for (int a = 0; a < M.n(); ++a) {
        CHECK(box_op(mcf.frame, hat(mcf.base, a)) == hat(mcf.base, M.box[a]));
        CHECK(diamond_op(mcf.frame, hat(mcf.base, a)) == hat(mcf.base, M.dia[a]));
        CHECK(neg_pos(fr, hat(mcf.base, a)) == hat(mcf.base, M.base.nneg(a)));
      }
    }
}

TEST_CASE("canonical modal frames stay valid at five-element lattices") {
  long checked = 0;
  for (const auto& M : enumerate_modal_lattices(5)) {
    ModalCanonicalFrame mcf = modal_canonical_frame(M); // validates internally
    CHECK(mcf.base.n() <= 16);
    ++checked;
  }
  CHECK(checked > 0);
}
