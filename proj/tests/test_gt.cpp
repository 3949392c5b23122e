#include <catch2/catch_amalgamated.hpp>

#include "fundlog/gt.hpp"

using namespace fundlog;

namespace {

std::vector<FrameWithAlgebra> universe(int maxn) {
  std::vector<FrameWithAlgebra> out;
  for (int n = 1; n <= maxn; ++n)
    for (auto& f : enumerate_fundamental_frames(n)) out.emplace_back(std::move(f));
  return out;
}

} // namespace

TEST_CASE("empty axiom set models everything and closes trivially") {
  FormulaArena ar;
  FrameClassSpec spec;
  spec.universe = universe(2);
  GtReport r = check_gt_closure(ar, spec);
  CHECK(r.model_indices.size() == spec.universe.size());
  CHECK(r.all_pass());
}

TEST_CASE("excluded middle carves a properly closed class") {
  FormulaArena ar;
  FrameClassSpec spec;
  spec.universe = universe(2);
  spec.axioms = {ar.parse("p | ~p")};
  GtReport r = check_gt_closure(ar, spec);
  CHECK(r.all_pass());
  CHECK(!r.model_indices.empty());
  CHECK(r.model_indices.size() < spec.universe.size());
}

TEST_CASE("a hand-picked class fails a closure check with a witness") {
  FormulaArena ar;
  FrameClassSpec spec;
  spec.universe = universe(2);
  // the identity frame's collapse onto a point is a dense image, so any
  // class containing the identity frame but no one-point frame leaks
  int id_index = -1;
  for (std::size_t i = 0; i < spec.universe.size(); ++i) {
    const RelFrame& f = spec.universe[i].frame.frame;
    if (f.n == 2 && f.rel.at(0, 0) && f.rel.at(1, 1) && !f.rel.at(0, 1) &&
        !f.rel.at(1, 0))
      id_index = static_cast<int>(i);
  }
  REQUIRE(id_index >= 0);
  spec.explicit_models = std::vector<int>{id_index};
  GtReport r = check_gt_closure(ar, spec);
  CHECK_FALSE(r.dense_images.pass);
  CHECK_FALSE(r.dense_images.witnesses.empty());
}

TEST_CASE("filter extension reflection is evaluated on the real extension") {
  FormulaArena ar;
  FrameClassSpec spec;
  spec.universe = universe(2);
  spec.axioms = {ar.parse("~(p & ~p)")}; // valid everywhere
  GtReport r = check_gt_closure(ar, spec);
  CHECK(r.filter_extensions.checked);
  CHECK(r.filter_extensions.pass);
  CHECK(r.filter_extensions.instances ==
        static_cast<long>(spec.universe.size())); // every extension models it
}
