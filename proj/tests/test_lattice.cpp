#include <catch2/catch_amalgamated.hpp>

#include "fundlog/lattice.hpp"
#include "oracle.hpp"

using namespace fundlog;

namespace {

FiniteLattice chain(int n) {
  BoolMat leq(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) leq.set(i, j);
  return validate_lattice(n, leq);
}

// 0 < p,q < 1 with p,q incomparable
FiniteLattice diamond() {
  BoolMat leq(4);
  for (int i = 0; i < 4; ++i) leq.set(i, i);
  leq.set(0, 1);
  leq.set(0, 2);
  leq.set(0, 3);
  leq.set(1, 3);
  leq.set(2, 3);
  return validate_lattice(4, leq);
}

} // namespace

TEST_CASE("two-element chain validates with min/max tables") {
  FiniteLattice L = chain(2);
  CHECK(L.bottom == 0);
  CHECK(L.top == 1);
  CHECK(L.meet(0, 1) == 0);
  CHECK(L.join(0, 1) == 1);
}

TEST_CASE("diamond meets and joins match the brute-force bounds") {
  FiniteLattice L = diamond();
  CHECK(L.meet(1, 2) == 0);
  CHECK(L.join(1, 2) == 3);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      CHECK(L.meet(a, b) == oracle::glb(L.leq, 4, a, b).value());
      CHECK(L.join(a, b) == oracle::lub(L.leq, 4, a, b).value());
    }
}

TEST_CASE("poset with two maximal elements is not bounded") {
  BoolMat leq(4); // 0 < p,q with p,q maximal
  for (int i = 0; i < 4; ++i) leq.set(i, i);
  leq.set(0, 1);
  leq.set(0, 2);
  leq.set(0, 3);
  try {
    validate_lattice(4, leq);
    FAIL("expected NotBounded");
  } catch (const ValidationError& e) {
    CHECK(e.code == "NotBounded");
  }
}

TEST_CASE("bounded poset without a join reports the offending pair") {
  // 0 < a,b < c,d < 1 with both a,b below both c,d
  BoolMat leq(6);
  for (int i = 0; i < 6; ++i) {
    leq.set(i, i);
    leq.set(0, i);
    leq.set(i, 5);
  }
  for (int lo : {1, 2})
    for (int hi : {3, 4}) leq.set(lo, hi);
  try {
    validate_lattice(6, leq);
    FAIL("expected NoJoin");
  } catch (const ValidationError& e) {
    CHECK(e.code == "NoJoin");
    CHECK(e.witness == std::vector<int>{1, 2});
  }
}

TEST_CASE("reflexivity, antisymmetry and transitivity violations are posets errors") {
  BoolMat missing_refl(2);
  missing_refl.set(0, 0);
  CHECK_THROWS_AS(validate_lattice(2, missing_refl), ValidationError);

  BoolMat cyc(2);
  cyc.set(0, 0);
  cyc.set(1, 1);
  cyc.set(0, 1);
  cyc.set(1, 0);
  CHECK_THROWS_AS(validate_lattice(2, cyc), ValidationError);
}

TEST_CASE("fundamental negation on the two-element chain is complement") {
  FiniteLattice L = chain(2);
  CHECK(check_fundamental(L, {1, 0}).ok);
  auto negs = enumerate_neg_maps(L);
  REQUIRE(negs.size() == 1);
  CHECK(negs[0].neg == std::vector<std::uint8_t>{1, 0});
}

TEST_CASE("three-element chain accepts only the pseudocomplement") {
  FiniteLattice L = chain(3);
  CHECK(check_fundamental(L, {2, 0, 0}).ok);
  // dual self-adjunction spelled out over all nine pairs
  std::vector<std::uint8_t> neg{2, 0, 0};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) CHECK(L.le(a, neg[b]) == L.le(b, neg[a]));
  auto v = check_fundamental(L, {2, 1, 0});
  CHECK_FALSE(v.ok);
  CHECK(v.code == "MeetWithNegNotBottom");
  CHECK(v.a == 1);
}

TEST_CASE("filter and ideal enumeration matches the definitional scan") {
  FiniteLattice two = chain(2);
  auto f2 = enumerate_filters(two);
  REQUIRE(f2.size() == 1);
  CHECK(f2[0].members == SmallSet::single(1));
  auto i2 = enumerate_ideals(two);
  REQUIRE(i2.size() == 1);
  CHECK(i2[0].members == SmallSet::single(0));

  FiniteLattice three = chain(3);
  auto f3 = enumerate_filters(three);
  REQUIRE(f3.size() == 2);
  CHECK(f3[0].members == SmallSet::single(2));
  CHECK(f3[1].members == (SmallSet::single(1) | SmallSet::single(2)));

  CHECK(enumerate_filters(diamond()).size() == 3);
  CHECK(enumerate_ideals(diamond()).size() == 3);

  for (int n = 1; n <= 4; ++n)
    for (const auto& L : enumerate_lattices(n)) {
      auto got = enumerate_filters(L);
      auto want = oracle::filters(L);
      std::sort(want.begin(), want.end());
      REQUIRE(got.size() == want.size());
      for (std::size_t k = 0; k < got.size(); ++k) {
        CHECK(got[k].members == want[k]);
        CHECK(is_proper_filter(L, got[k].members));
      }
      auto gotI = enumerate_ideals(L);
      auto wantI = oracle::ideals(L);
      std::sort(wantI.begin(), wantI.end());
      REQUIRE(gotI.size() == wantI.size());
      for (std::size_t k = 0; k < gotI.size(); ++k) CHECK(gotI[k].members == wantI[k]);
    }
}

TEST_CASE("hom checking reports the first violated equation") {
  auto two = validate_fundamental(chain(2), {1, 0});
  LatticeHom id{two, two, {0, 1}};
  CHECK(check_hom(id).ok);

  LatticeHom const_top{two, two, {1, 1}};
  auto v = check_hom(const_top);
  CHECK_FALSE(v.ok);
  CHECK(v.equation == "bottom");

  // collapsing the diamond onto the chain is a homomorphism
  auto dia = validate_fundamental(diamond(), {3, 2, 1, 0});
  LatticeHom collapse{dia, two, {0, 1, 0, 1}};
  CHECK(check_hom(collapse).ok);

  LatticeHom wrong{dia, two, {0, 1}};
  CHECK_THROWS_AS(check_hom(wrong), ValidationError); // SourceTargetMismatch
}

TEST_CASE("products are componentwise and project homomorphically") {
  auto two = validate_fundamental(chain(2), {1, 0});
  auto three = validate_fundamental(chain(3), {2, 0, 0});

  auto single = product({two});
  CHECK(single.n() == 2);
  CHECK(lattices_isomorphic(single.lat, two.lat, &single.neg, &two.neg));

  auto four = product({two, two});
  CHECK(four.n() == 4);
  auto dia = validate_fundamental(diamond(), {3, 2, 1, 0});
  CHECK(lattices_isomorphic(four.lat, dia.lat, &four.neg, &dia.neg));

  auto six = product({two, three});
  CHECK(six.n() == 6);
  CHECK(check_fundamental(six.lat, six.neg).ok);

  for (auto& proj : product_projections(six, {two, three})) CHECK(check_hom(proj).ok);
}

TEST_CASE("product of nothing is refused") {
  CHECK_THROWS_AS(product({}), ValidationError);
}

TEST_CASE("lattice enumeration counts and labeled cross-check") {
  CHECK(enumerate_lattices(1).size() == 1);
  CHECK(enumerate_lattices(2).size() == 1);
  CHECK(enumerate_lattices(3).size() == 1);
  CHECK(enumerate_lattices(4).size() == 2);
  CHECK(enumerate_lattices(5).size() == 5);
  CHECK(enumerate_lattices(6).size() == 15);
  CHECK_THROWS_AS(enumerate_lattices(7), CapExceeded);

  // orbit counting: representatives weighted by their automorphisms give
  // exactly the labeled count obtained by the full matrix scan
  long factorial[5] = {1, 1, 2, 6, 24};
  for (int n = 1; n <= 4; ++n) {
    long labeled = 0;
    for (const auto& L : enumerate_lattices(n))
      labeled += factorial[n] / oracle::automorphisms(L);
    CHECK(labeled == oracle::labeled_lattices(n));
  }
}

TEST_CASE("negation is idempotent-triple and inflationary-double") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& F : enumerate_fundamental_lattices(n)) {
      for (int a = 0; a < F.n(); ++a) {
        CHECK(F.nneg(F.nneg(F.nneg(a))) == F.nneg(a));
        CHECK(F.lat.le(a, F.nneg(F.nneg(a))));
      }
    }
}
