#include <catch2/catch_amalgamated.hpp>

#include "fundlog/json_io.hpp"

using namespace fundlog;

TEST_CASE("lattice files load with implied reflexivity and transitive closure") {
  Json j = Json::parse(R"({
    "elements": ["0", "m", "1"],
    "leq": [["0", "m"], ["m", "1"]],
    "neg": {"0": "1", "m": "0", "1": "0"}
  })");
  LatticeDoc doc = lattice_from_json(j);
  CHECK(doc.lattice.le(0, 2)); // closure supplied 0 <= 1
  CHECK(doc.lattice.bottom == 0);
  CHECK(doc.lattice.top == 2);
  FundamentalLattice L = doc.fundamental();
  CHECK(L.nneg(0) == 2);
}

TEST_CASE("frame files load and validate") {
  Json j = Json::parse(R"({
    "points": ["a", "b"],
    "edges": [["a", "a"], ["b", "b"]]
  })");
  FrameDoc doc = frame_from_json(j);
  CHECK(doc.frame.n == 2);
  CHECK(doc.frame.rel.at(0, 0));
  CHECK_FALSE(doc.frame.rel.at(0, 1));
  CHECK_FALSE(doc.m.has_value());

  Json bad = Json::parse(R"({"points": ["a", "b"], "edges": [["a", "a"]]})");
  CHECK_THROWS_AS(frame_from_json(bad), ValidationError); // not co-serial
}

TEST_CASE("modal frame files carry accessibility edges") {
  Json j = Json::parse(R"({
    "points": ["x"],
    "edges": [["x", "x"]],
    "m_edges": [["x", "x"]]
  })");
  FrameDoc doc = frame_from_json(j);
  REQUIRE(doc.m.has_value());
  ModalFrame mf = doc.modal();
  CHECK(mf.m.at(0, 0));
}

TEST_CASE("bad names and missing keys become io errors") {
  CHECK_THROWS_AS(frame_from_json(Json::parse(R"({"points": []})")), IoError);
  CHECK_THROWS_AS(frame_from_json(Json::parse(R"({"edges": []})")), IoError);
  CHECK_THROWS_AS(
      frame_from_json(Json::parse(R"({"points": ["a"], "edges": [["a","z"]]})")),
      IoError);
  CHECK_THROWS_AS(lattice_from_json(Json::parse(
                      R"({"elements": ["0","1"], "leq": [["0","1"]], "neg": {"0":"1"}})")),
                  IoError); // partial table
}

TEST_CASE("frames round-trip through their json form") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& f : enumerate_fundamental_frames(n)) {
      Json j = frame_to_json(f.frame, default_point_names(f.n()));
      FrameDoc doc = frame_from_json(j);
      CHECK(doc.frame.rel == f.frame.rel);
    }
}

TEST_CASE("lattices round-trip through their json form") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& L : enumerate_fundamental_lattices(n)) {
      Json j = lattice_to_json(L.lat, default_point_names(L.n(), "e"), &L.neg);
      LatticeDoc doc = lattice_from_json(j);
      CHECK(doc.lattice.leq == L.lat.leq);
      CHECK(*doc.neg == L.neg);
    }
}

TEST_CASE("canonical frame export carries labels and is deterministic") {
  BoolMat leq(2);
  leq.set(0, 0);
  leq.set(0, 1);
  leq.set(1, 1);
  auto two = validate_fundamental(validate_lattice(2, leq), {1, 0});
  CanonicalFrame cf = canonical_frame(two);
  Json a = canonical_frame_to_json(cf, {"bot", "top"});
  Json b = canonical_frame_to_json(canonical_frame(two), {"bot", "top"});
  CHECK(a.dump() == b.dump());
  CHECK(a["labels"]["x0"]["filter"] == Json::array({"top"}));
  CHECK(a["labels"]["x0"]["ideal"] == Json::array({"bot"}));
}

TEST_CASE("dot export names points and draws both relations") {
  Json j = Json::parse(R"({
    "points": ["x"],
    "edges": [["x", "x"]],
    "m_edges": [["x", "x"]]
  })");
  FrameDoc doc = frame_from_json(j);
  std::string dot = frame_to_dot(doc.frame, doc.names, &*doc.m);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("\"x\" -> \"x\"") != std::string::npos);
  CHECK(dot.find("style=dashed") != std::string::npos);
}

TEST_CASE("suite reports serialize with timings isolated") {
  SuiteConfig cfg;
  cfg.max_frame_size = 2;
  SuiteReport r = run_suite("facts24", cfg);
  Json j = suite_report_to_json(r);
  CHECK(j["suite"] == "facts24");
  CHECK(j["pass"] == true);
  CHECK(j.contains("timings"));
  // determinism modulo the timing block
  Json k = suite_report_to_json(run_suite("facts24", cfg));
  j.erase("timings");
  k.erase("timings");
  CHECK(j.dump() == k.dump());
}
