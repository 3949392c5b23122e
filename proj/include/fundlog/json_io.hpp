// File formats and exports: lattices, frames and maps as JSON documents,
// DOT rendering, and report serialization. Keys keep insertion order so
// identical inputs produce byte-identical files; timings live in their own
// block.
#pragma once

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "fundlog/duality.hpp"
#include "fundlog/frame.hpp"
#include "fundlog/gt.hpp"
#include "fundlog/lattice.hpp"
#include "fundlog/modal.hpp"
#include "fundlog/morphism.hpp"
#include "fundlog/prover.hpp"
#include "fundlog/verify.hpp"

namespace fundlog {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Documents: carrier names plus the validated structure.

struct LatticeDoc {
  std::vector<std::string> names;
  FiniteLattice lattice;
  std::optional<std::vector<std::uint8_t>> neg;
  std::optional<std::vector<std::uint8_t>> box;
  std::optional<std::vector<std::uint8_t>> dia;

  int index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return static_cast<int>(i);
    throw IoError("unknown element name: " + name);
  }
  FundamentalLattice fundamental() const {
    if (!neg) throw IoError("lattice file has no negation table");
    return validate_fundamental(lattice, *neg);
  }
  ModalLattice modal() const {
    if (!box || !dia) throw IoError("lattice file has no box/diamond tables");
    return validate_modal_lattice(fundamental(), *box, *dia);
  }
};

struct FrameDoc {
  std::vector<std::string> names;
  RelFrame frame;
  std::optional<BoolMat> m;

  int index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return static_cast<int>(i);
    throw IoError("unknown point name: " + name);
  }
  FundamentalFrame fundamental() const { return is_fundamental_or_throw(frame); }
  ModalFrame modal() const {
    if (!m) throw IoError("frame file has no accessibility edges");
    return make_modal_frame(fundamental(), *m);
  }
};

// A map document: either a frame map or a lattice homomorphism, depending
// on what the source/target documents contain.
struct MapDoc {
  std::optional<FrameDoc> frame_source, frame_target;
  std::optional<LatticeDoc> lattice_source, lattice_target;
  std::vector<std::uint8_t> map;

  bool is_frame_map() const { return frame_source.has_value(); }
};

// ---------------------------------------------------------------------------
// Parsing

namespace detail_io {

inline Json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return Json::parse(in); // throws nlohmann parse_error on bad JSON
}

inline std::vector<std::string> name_list(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw IoError(std::string("missing \"") + key + "\" array");
  std::vector<std::string> names;
  for (const auto& e : j[key]) names.push_back(e.get<std::string>());
  if (names.empty()) throw IoError(std::string("empty \"") + key + "\" array");
  return names;
}

inline int name_index(const std::vector<std::string>& names, const std::string& s) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == s) return static_cast<int>(i);
  throw IoError("unknown name: " + s);
}

inline std::vector<std::uint8_t> table(const Json& j,
                                       const std::vector<std::string>& names) {
  std::vector<std::uint8_t> tab(names.size());
  std::vector<bool> seen(names.size(), false);
  for (auto it = j.begin(); it != j.end(); ++it) {
    int a = name_index(names, it.key());
    tab[a] = static_cast<std::uint8_t>(name_index(names, it.value().get<std::string>()));
    seen[a] = true;
  }
  for (std::size_t i = 0; i < names.size(); ++i)
    if (!seen[i]) throw IoError("table misses element " + names[i]);
  return tab;
}

} // namespace detail_io

inline LatticeDoc lattice_from_json(const Json& j) {
  LatticeDoc doc;
  doc.names = detail_io::name_list(j, "elements");
  int n = static_cast<int>(doc.names.size());
  SmallSet::check_size(n);
  BoolMat leq(n);
  for (int i = 0; i < n; ++i) leq.set(i, i);
  if (j.contains("leq"))
    for (const auto& pair : j["leq"]) {
      int a = detail_io::name_index(doc.names, pair.at(0).get<std::string>());
      int b = detail_io::name_index(doc.names, pair.at(1).get<std::string>());
      leq.set(a, b);
    }
  // transitive closure before validation
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (leq.at(i, k)) leq.row_ref(i) = leq.row(i) | leq.row(k);
  doc.lattice = validate_lattice(n, leq);
  if (j.contains("neg")) doc.neg = detail_io::table(j["neg"], doc.names);
  if (j.contains("box")) doc.box = detail_io::table(j["box"], doc.names);
  if (j.contains("diamond")) doc.dia = detail_io::table(j["diamond"], doc.names);
  return doc;
}

inline FrameDoc frame_from_json(const Json& j) {
  FrameDoc doc;
  doc.names = detail_io::name_list(j, "points");
  int n = static_cast<int>(doc.names.size());
  SmallSet::check_size(n);
  BoolMat rel(n);
  if (j.contains("edges"))
    for (const auto& pair : j["edges"]) {
      int a = detail_io::name_index(doc.names, pair.at(0).get<std::string>());
      int b = detail_io::name_index(doc.names, pair.at(1).get<std::string>());
      rel.set(a, b);
    }
  doc.frame = make_frame(n, rel);
  if (j.contains("m_edges")) {
    BoolMat m(n);
    for (const auto& pair : j["m_edges"]) {
      int a = detail_io::name_index(doc.names, pair.at(0).get<std::string>());
      int b = detail_io::name_index(doc.names, pair.at(1).get<std::string>());
      m.set(a, b);
    }
    doc.m = m;
  }
  return doc;
}

inline LatticeDoc load_lattice(const std::string& path) {
  return lattice_from_json(detail_io::parse_file(path));
}
inline FrameDoc load_frame(const std::string& path) {
  return frame_from_json(detail_io::parse_file(path));
}

// Map files carry source/target either as file paths (resolved relative to
// the map file) or as inline objects.
inline MapDoc load_map(const std::string& path) {
  Json j = detail_io::parse_file(path);
  auto resolve = [&](const Json& side) -> Json {
    if (side.is_string()) {
      std::filesystem::path p = side.get<std::string>();
      if (p.is_relative()) p = std::filesystem::path(path).parent_path() / p;
      return detail_io::parse_file(p.string());
    }
    return side;
  };
  if (!j.contains("source") || !j.contains("target") || !j.contains("map"))
    throw IoError("map file needs \"source\", \"target\" and \"map\"");
  Json src = resolve(j["source"]), tgt = resolve(j["target"]);
  MapDoc doc;
  std::vector<std::string> src_names, tgt_names;
  if (src.contains("points")) {
    doc.frame_source = frame_from_json(src);
    doc.frame_target = frame_from_json(tgt);
    src_names = doc.frame_source->names;
    tgt_names = doc.frame_target->names;
  } else {
    doc.lattice_source = lattice_from_json(src);
    doc.lattice_target = lattice_from_json(tgt);
    src_names = doc.lattice_source->names;
    tgt_names = doc.lattice_target->names;
  }
  doc.map.resize(src_names.size());
  std::vector<bool> seen(src_names.size(), false);
  for (auto it = j["map"].begin(); it != j["map"].end(); ++it) {
    int a = detail_io::name_index(src_names, it.key());
    doc.map[a] =
        static_cast<std::uint8_t>(detail_io::name_index(tgt_names, it.value().get<std::string>()));
    seen[a] = true;
  }
  for (std::size_t i = 0; i < src_names.size(); ++i)
    if (!seen[i]) throw IoError("map misses point " + src_names[i]);
  return doc;
}

// ---------------------------------------------------------------------------
// Writing

inline Json frame_to_json(const RelFrame& f, const std::vector<std::string>& names,
                          const BoolMat* m = nullptr) {
  Json j;
  j["points"] = names;
  Json edges = Json::array();
  for (int i = 0; i < f.n; ++i)
    for (int k = 0; k < f.n; ++k)
      if (f.rel.at(i, k)) edges.push_back({names[i], names[k]});
  j["edges"] = edges;
  if (m) {
    Json medges = Json::array();
    for (int i = 0; i < f.n; ++i)
      for (int k = 0; k < f.n; ++k)
        if (m->at(i, k)) medges.push_back({names[i], names[k]});
    j["m_edges"] = medges;
  }
  return j;
}

inline Json lattice_to_json(const FiniteLattice& L, const std::vector<std::string>& names,
                            const std::vector<std::uint8_t>* neg = nullptr,
                            const std::vector<std::uint8_t>* box = nullptr,
                            const std::vector<std::uint8_t>* dia = nullptr) {
  Json j;
  j["elements"] = names;
  Json leq = Json::array();
  for (int a = 0; a < L.n; ++a)
    for (int b = 0; b < L.n; ++b)
      if (a != b && L.le(a, b)) leq.push_back({names[a], names[b]});
  j["leq"] = leq;
  auto tab = [&](const std::vector<std::uint8_t>& t) {
    Json o;
    for (int a = 0; a < L.n; ++a) o[names[a]] = names[t[a]];
    return o;
  };
  if (neg) j["neg"] = tab(*neg);
  if (box) j["box"] = tab(*box);
  if (dia) j["diamond"] = tab(*dia);
  return j;
}

inline std::vector<std::string> default_point_names(int n, const std::string& stem = "x") {
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = stem + std::to_string(i);
  return names;
}

inline Json canonical_frame_to_json(const CanonicalFrame& cf,
                                    const std::vector<std::string>& origin_names,
                                    const BoolMat* m = nullptr) {
  std::vector<std::string> pts = default_point_names(cf.n());
  Json j = frame_to_json(cf.frame.frame, pts, m);
  Json labels;
  for (int i = 0; i < cf.n(); ++i) {
    Json entry;
    Json filt = Json::array(), ideal = Json::array();
    cf.labels[i].filter.for_each([&](int a) { filt.push_back(origin_names[a]); });
    cf.labels[i].ideal.for_each([&](int a) { ideal.push_back(origin_names[a]); });
    entry["filter"] = filt;
    entry["ideal"] = ideal;
    labels[pts[i]] = entry;
  }
  j["labels"] = labels;
  return j;
}

inline Json set_to_json(SmallSet s, const std::vector<std::string>& names) {
  Json arr = Json::array();
  s.for_each([&](int i) { arr.push_back(names[i]); });
  return arr;
}

inline std::string frame_to_dot(const RelFrame& f, const std::vector<std::string>& names,
                                const BoolMat* m = nullptr,
                                const std::map<std::string, SmallSet>* annot = nullptr) {
  std::string out = "digraph frame {\n";
  for (int i = 0; i < f.n; ++i) {
    std::string label = names[i];
    if (annot)
      for (const auto& [key, set] : *annot)
        if (set.test(i)) label += "\\n" + key;
    out += "  \"" + names[i] + "\" [label=\"" + label + "\"];\n";
  }
  for (int i = 0; i < f.n; ++i)
    for (int k = 0; k < f.n; ++k)
      if (f.rel.at(i, k)) out += "  \"" + names[i] + "\" -> \"" + names[k] + "\";\n";
  if (m)
    for (int i = 0; i < f.n; ++i)
      for (int k = 0; k < f.n; ++k)
        if (m->at(i, k))
          out += "  \"" + names[i] + "\" -> \"" + names[k] +
                 "\" [style=dashed, label=\"M\"];\n";
  out += "}\n";
  return out;
}

inline Json suite_report_to_json(const SuiteReport& r) {
  Json j;
  j["suite"] = r.suite;
  Json bounds;
  if (r.frame_bound) bounds["frames"] = r.frame_bound;
  if (r.lattice_bound) bounds["lattices"] = r.lattice_bound;
  j["bounds"] = bounds;
  j["seed"] = r.seed;
  j["pass"] = r.pass();
  j["instances"] = r.instances();
  j["failures"] = r.failures();
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json e;
    e["name"] = c.name;
    e["instances"] = c.instances;
    e["failures"] = c.failures;
    e["witnesses"] = c.witnesses;
    if (!c.log.empty()) {
      Json inst = Json::array();
      for (const auto& [id, ok] : c.log) inst.push_back({{"id", id}, {"pass", ok}});
      e["instances_log"] = inst;
    }
    checks.push_back(e);
  }
  j["checks"] = checks;
  j["timings"] = Json{{"seconds", r.seconds}};
  return j;
}

inline Json gt_report_to_json(const GtReport& r) {
  Json j;
  j["models"] = r.model_indices;
  auto one = [](const GtCheck& c) {
    Json e;
    e["checked"] = c.checked;
    e["pass"] = c.pass;
    e["instances"] = c.instances;
    e["witnesses"] = c.witnesses;
    return e;
  };
  j["subframes"] = one(r.subframes);
  j["dense_images"] = one(r.dense_images);
  j["coproducts"] = one(r.coproducts);
  j["filter_extensions"] = one(r.filter_extensions);
  j["pass"] = r.all_pass();
  return j;
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << text;
}

inline void write_json(const std::string& path, const Json& j) {
  write_text(path, j.dump(2) + "\n");
}

} // namespace fundlog
