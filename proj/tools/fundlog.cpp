// Batch workbench CLI: validate structure files, run the constructions,
// decide sequents with proof search plus countermodel search, check class
// closure, run the verification suites, enumerate universes, export DOT.
//
// Exit codes: 0 success/valid/proved, 1 invalid/refuted/failed checks,
// 2 I/O or parse errors, 3 unknown (derive only).

#include <CLI11.hpp>
#include <iostream>

#include "fundlog/json_io.hpp"

using namespace fundlog;

namespace {

struct GlobalOpts {
  int workers = 0;
  std::uint64_t seed = 0; // echoed into reports; sweeps are exhaustive
};

Json verdict_json(bool ok, const std::string& code, const std::vector<int>& witness,
                  const std::string& detail) {
  Json j;
  j["valid"] = ok;
  if (!ok) {
    j["violation"] = code;
    j["witness"] = witness;
    j["detail"] = detail;
  }
  return j;
}

std::string infer_kind(const Json& j) {
  if (j.contains("map")) return "morphism";
  if (j.contains("points")) return j.contains("m_edges") ? "modal-frame" : "frame";
  if (j.contains("elements"))
    return (j.contains("box") || j.contains("diamond")) ? "modal-lattice" : "lattice";
  throw IoError("cannot tell what kind of file this is");
}

int cmd_check(const std::string& path, std::string kind, const std::string& report_path) {
  Json out;
  out["path"] = path;
  int exit_code = 0;
  try {
    Json j = detail_io::parse_file(path);
    if (kind == "auto") kind = infer_kind(j);
    out["kind"] = kind;
    if (kind == "frame" || kind == "modal-frame") {
      FrameDoc doc = frame_from_json(j); // throws NotCoSerial as ValidationError
      auto v = check_fundamental_frame(doc.frame);
      out["fundamental"] = verdict_json(v.ok, v.code, {v.x, v.y}, "frame condition fails");
      if (!v.ok) exit_code = 1;
      if (kind == "modal-frame") {
        if (!doc.m) throw IoError("modal frame file has no m_edges");
        auto av = check_aufm(doc.frame, *doc.m);
        out["accessibility"] = verdict_json(av.ok, "Condition" + std::to_string(av.condition),
                                            {av.x, av.y, av.z}, "accessibility condition fails");
        if (!av.ok) exit_code = 1;
      }
    } else if (kind == "lattice" || kind == "modal-lattice") {
      LatticeDoc doc = lattice_from_json(j); // throws on poset/bound violations
      out["lattice"] = verdict_json(true, "", {}, "");
      if (doc.neg) {
        auto v = check_fundamental(doc.lattice, *doc.neg);
        out["negation"] = verdict_json(v.ok, v.code, {v.a, v.b}, "negation axiom fails");
        if (!v.ok) exit_code = 1;
      } else if (kind == "modal-lattice") {
        throw IoError("modal lattice file has no negation table");
      }
      if (kind == "modal-lattice") {
        if (!doc.box || !doc.dia) throw IoError("modal lattice file has no box/diamond");
        if (exit_code == 0) {
          auto v = check_modal_lattice({doc.lattice, *doc.neg}, *doc.box, *doc.dia);
          out["modal"] = verdict_json(v.ok, v.code, {v.a, v.b}, "modal axiom fails");
          if (!v.ok) exit_code = 1;
        }
      }
    } else if (kind == "morphism") {
      MapDoc doc = load_map(path);
      if (doc.is_frame_map()) {
        FrameMap m{doc.frame_source->fundamental(), doc.frame_target->fundamental(),
                   doc.map};
        auto v = is_f_morphism(m);
        out["f_morphism"] = verdict_json(v.ok, "Condition" + std::to_string(v.condition),
                                         {v.x, v.y}, "morphism condition fails");
        if (v.ok) {
          out["classes"] = Json{{"dense", is_dense(m).ok},
                                {"embedding", is_embedding(m).ok},
                                {"strongly_dense", is_strongly_dense(m).ok},
                                {"strong_embedding", is_strong_embedding(m).ok}};
        } else {
          exit_code = 1;
        }
      } else {
        LatticeHom h{doc.lattice_source->fundamental(), doc.lattice_target->fundamental(),
                     doc.map};
        auto v = check_hom(h);
        out["hom"] = verdict_json(v.ok, v.equation, {v.a, v.b}, "preservation fails");
        if (!v.ok) exit_code = 1;
      }
    } else {
      throw IoError("unknown kind: " + kind);
    }
  } catch (const ValidationError& e) {
    out["valid"] = false;
    out["violation"] = e.code;
    out["witness"] = e.witness;
    out["detail"] = e.what();
    exit_code = 1;
  }
  if (!report_path.empty()) write_json(report_path, out);
  std::cout << out.dump(2) << "\n";
  return exit_code;
}

int cmd_construct(const std::string& verb, const std::vector<std::string>& inputs,
                  const std::string& out_path, const std::string& dot_path) {
  Json out;
  std::string dot;
  if (verb == "algebra") {
    FrameDoc doc = load_frame(inputs.at(0));
    AlgebraLattice al = algebra_lattice(doc.frame);
    Json members = Json::array();
    for (const auto& s : al.algebra.members) members.push_back(set_to_json(s, doc.names));
    out["members"] = members;
    out["lattice"] = lattice_to_json(al.lattice, default_point_names(al.algebra.size(), "m"),
                                     &al.neg);
    std::map<std::string, SmallSet> annot;
    for (int i = 0; i < al.algebra.size(); ++i)
      annot["m" + std::to_string(i)] = al.algebra.at(i);
    dot = frame_to_dot(doc.frame, doc.names, nullptr, &annot);
  } else if (verb == "canonical") {
    LatticeDoc doc = load_lattice(inputs.at(0));
    if (doc.box && doc.dia) {
      ModalCanonicalFrame mcf = modal_canonical_frame(doc.modal());
      out = canonical_frame_to_json(mcf.base, doc.names, &mcf.frame.m);
      dot = frame_to_dot(mcf.base.frame.frame, default_point_names(mcf.base.n()),
                         &mcf.frame.m);
    } else {
      CanonicalFrame cf = canonical_frame(doc.fundamental());
      out = canonical_frame_to_json(cf, doc.names);
      dot = frame_to_dot(cf.frame.frame, default_point_names(cf.n()));
    }
  } else if (verb == "filter-ext") {
    FrameDoc doc = load_frame(inputs.at(0));
    if (doc.m) {
      ModalFrame mf = doc.modal();
      ModalCanonicalFrame ext = modal_filter_extension(mf);
      std::vector<std::string> member_names =
          default_point_names(static_cast<int>(ext.origin.n()), "m");
      out = canonical_frame_to_json(ext.base, member_names, &ext.frame.m);
      dot = frame_to_dot(ext.base.frame.frame, default_point_names(ext.base.n()),
                         &ext.frame.m);
    } else {
      CanonicalFrame ext = filter_extension(doc.fundamental());
      std::vector<std::string> member_names =
          default_point_names(ext.origin.n(), "m");
      out = canonical_frame_to_json(ext, member_names);
      dot = frame_to_dot(ext.frame.frame, default_point_names(ext.n()));
    }
  } else if (verb == "coproduct") {
    std::vector<FrameDoc> docs;
    bool any_modal = false;
    for (const auto& p : inputs) {
      docs.push_back(load_frame(p));
      any_modal = any_modal || docs.back().m.has_value();
    }
    std::vector<std::string> names;
    for (std::size_t k = 0; k < docs.size(); ++k)
      for (const auto& nm : docs[k].names) names.push_back(std::to_string(k) + ":" + nm);
    if (any_modal) {
      std::vector<ModalFrame> parts;
      for (auto& d : docs) parts.push_back(d.modal());
      ModalFrame sum = modal_coproduct(parts);
      out = frame_to_json(sum.base.frame, names, &sum.m);
      dot = frame_to_dot(sum.base.frame, names, &sum.m);
    } else {
      std::vector<FundamentalFrame> parts;
      for (auto& d : docs) parts.push_back(d.fundamental());
      FundamentalFrame sum = coproduct(parts);
      out = frame_to_json(sum.frame, names);
      dot = frame_to_dot(sum.frame, names);
    }
  } else if (verb == "dual-hom") {
    MapDoc doc = load_map(inputs.at(0));
    if (!doc.is_frame_map()) throw IoError("dual-hom expects a frame map");
    FrameMap m{doc.frame_source->fundamental(), doc.frame_target->fundamental(), doc.map};
    AlgebraLattice src = algebra_lattice(m.source.frame);
    AlgebraLattice tgt = algebra_lattice(m.target.frame);
    LatticeHom hom = chi_of_map(m, src, tgt);
    std::vector<std::string> src_names = default_point_names(tgt.algebra.size(), "b");
    std::vector<std::string> tgt_names = default_point_names(src.algebra.size(), "a");
    out["source"] = lattice_to_json(hom.source.lat, src_names, &hom.source.neg);
    out["target"] = lattice_to_json(hom.target.lat, tgt_names, &hom.target.neg);
    Json mj;
    for (int a = 0; a < hom.source.n(); ++a) mj[src_names[a]] = tgt_names[hom.map[a]];
    out["map"] = mj;
    Json sets = Json::array();
    for (const auto& s : tgt.algebra.members)
      sets.push_back(set_to_json(s, doc.frame_target->names));
    out["source_members"] = sets;
  } else if (verb == "dual-map") {
    MapDoc doc = load_map(inputs.at(0));
    if (doc.is_frame_map()) throw IoError("dual-map expects a lattice homomorphism");
    LatticeHom h{doc.lattice_source->fundamental(), doc.lattice_target->fundamental(),
                 doc.map};
    CanonicalFrame cs = canonical_frame(h.source);
    CanonicalFrame ct = canonical_frame(h.target);
    FrameMap dig = digamma_of_hom(h, cs, ct);
    std::vector<std::string> sn = default_point_names(ct.n(), "s");
    std::vector<std::string> tn = default_point_names(cs.n(), "t");
    out["source"] = frame_to_json(ct.frame.frame, sn);
    out["target"] = frame_to_json(cs.frame.frame, tn);
    Json mj;
    for (int x = 0; x < ct.n(); ++x) mj[sn[x]] = tn[dig.map[x]];
    out["map"] = mj;
  } else {
    throw IoError("unknown construct verb: " + verb);
  }
  if (!out_path.empty()) write_json(out_path, out);
  else std::cout << out.dump(2) << "\n";
  if (!dot_path.empty() && !dot.empty()) write_text(dot_path, dot);
  return 0;
}

int cmd_derive(const std::string& text, const DeriveBudget& budget,
               const std::string& out_prefix, bool refute_only) {
  FormulaArena arena;
  auto [lhs, rhs] = arena.parse_sequent(text);
  if (refute_only) {
    auto cm = countermodel(arena, {lhs, rhs}, budget.max_frame_size,
                           budget.valuation_budget, budget.workers,
                           std::max(budget.max_frame_size, 4));
    if (!cm) {
      std::cout << "no countermodel up to " << budget.max_frame_size << " points\n";
      return 1;
    }
    std::vector<std::string> names = default_point_names(cm->frame.n());
    Json j = frame_to_json(cm->frame.frame, names);
    Json val;
    for (const auto& [letter, member] : cm->valuation.assign)
      val[arena.letter_name(letter)] = set_to_json(cm->algebra.at(member), names);
    j["valuation"] = val;
    std::cout << "countermodel with " << cm->size << " points\n" << j.dump(2) << "\n";
    if (!out_prefix.empty()) {
      write_json(out_prefix + ".json", j);
      std::map<std::string, SmallSet> annot;
      for (const auto& [letter, member] : cm->valuation.assign)
        annot[arena.letter_name(letter)] = cm->algebra.at(member);
      write_text(out_prefix + ".dot", frame_to_dot(cm->frame.frame, names, nullptr, &annot));
    }
    return 0;
  }
  DeriveResult res = derive(arena, {lhs, rhs}, budget);
  switch (res.status) {
    case DeriveResult::Status::Proved: {
      std::cout << "proved\n";
      Json steps = Json::array();
      for (const auto& s : res.trace)
        steps.push_back({{"sequent", s.sequent}, {"rule", s.rule}, {"premises", s.premises}});
      Json j{{"status", "proved"}, {"trace", steps}};
      if (!out_prefix.empty()) write_json(out_prefix + ".json", j);
      else std::cout << j.dump(2) << "\n";
      return 0;
    }
    case DeriveResult::Status::Refuted: {
      const Countermodel& cm = *res.counter;
      std::vector<std::string> names = default_point_names(cm.frame.n());
      Json j = frame_to_json(cm.frame.frame, names);
      Json val;
      for (const auto& [letter, member] : cm.valuation.assign)
        val[arena.letter_name(letter)] = set_to_json(cm.algebra.at(member), names);
      j["valuation"] = val;
      std::cout << "refuted by a " << cm.size << "-point frame\n";
      if (!out_prefix.empty()) {
        write_json(out_prefix + ".json", j);
        std::map<std::string, SmallSet> annot;
        for (const auto& [letter, member] : cm.valuation.assign)
          annot[arena.letter_name(letter)] = cm.algebra.at(member);
        write_text(out_prefix + ".dot", frame_to_dot(cm.frame.frame, names, nullptr, &annot));
      } else {
        std::cout << j.dump(2) << "\n";
      }
      return 1;
    }
    default:
      std::cout << "unknown within budget"
                << (res.truncated_universe ? " (universe truncated)" : "") << "\n";
      return 3;
  }
}

int cmd_gt_check(const std::string& axiom_path, int max_size, std::uint64_t budget,
                 const std::string& report_path) {
  FormulaArena arena;
  std::vector<FormulaId> axioms;
  std::ifstream in(axiom_path);
  if (!in) throw IoError("cannot open " + axiom_path);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    bool blank = true;
    for (char c : line)
      if (!isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) continue;
    axioms.push_back(arena.parse(line));
  }
  FrameClassSpec spec;
  spec.valuation_budget = budget;
  for (int n = 1; n <= max_size; ++n)
    for (auto& f : enumerate_fundamental_frames(n, false, std::max(max_size, 4)))
      spec.universe.emplace_back(std::move(f));
  spec.axioms = axioms;
  GtReport r = check_gt_closure(arena, spec);
  Json j = gt_report_to_json(r);
  if (!report_path.empty()) write_json(report_path, j);
  std::cout << j.dump(2) << "\n";
  return r.all_pass() ? 0 : 1;
}

int cmd_verify(const std::string& name, const SuiteConfig& cfg,
               const std::string& report_path) {
  SuiteReport r = run_suite(name, cfg);
  Json j = suite_report_to_json(r);
  if (!report_path.empty()) write_json(report_path, j);
  std::cout << j.dump(2) << "\n";
  return r.pass() ? 0 : 1;
}

int cmd_enumerate(const std::string& what, int size, bool fundamental_only,
                  bool up_to_iso, bool count_only, int cap,
                  const std::string& out_path) {
  Json j;
  j["what"] = what;
  j["size"] = size;
  Json items = Json::array();
  long count = 0;
  if (what == "frames") {
    FrameEnumOptions opt;
    opt.fundamental_only = fundamental_only;
    opt.up_to_iso = up_to_iso;
    opt.cap = cap ? cap : 4;
    for (auto& f : enumerate_frames(size, opt)) {
      ++count;
      if (!count_only) items.push_back(frame_to_json(f, default_point_names(f.n)));
    }
  } else if (what == "lattices") {
    for (auto& L : enumerate_lattices(size, cap ? cap : 6)) {
      ++count;
      if (!count_only) items.push_back(lattice_to_json(L, default_point_names(L.n, "e")));
    }
  } else if (what == "fundamental-lattices") {
    for (auto& L : enumerate_fundamental_lattices(size, cap ? cap : 6)) {
      ++count;
      if (!count_only)
        items.push_back(lattice_to_json(L.lat, default_point_names(L.n(), "e"), &L.neg));
    }
  } else if (what == "modal-frames") {
    for (auto& m : enumerate_modal_frames(size, up_to_iso, cap ? cap : 3)) {
      ++count;
      if (!count_only)
        items.push_back(frame_to_json(m.base.frame, default_point_names(m.n()), &m.m));
    }
  } else if (what == "modal-lattices") {
    for (auto& M : enumerate_modal_lattices(size, cap ? cap : 5)) {
      ++count;
      if (!count_only)
        items.push_back(lattice_to_json(M.base.lat, default_point_names(M.n(), "e"),
                                        &M.base.neg, &M.box, &M.dia));
    }
  } else {
    throw IoError("unknown enumeration target: " + what);
  }
  j["count"] = count;
  if (!count_only) j["items"] = items;
  if (!out_path.empty()) write_json(out_path, j);
  else std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_export_dot(const std::string& path, const std::string& out_path) {
  Json j = detail_io::parse_file(path);
  std::string kind = infer_kind(j);
  std::string dot;
  if (kind == "frame" || kind == "modal-frame") {
    FrameDoc doc = frame_from_json(j);
    dot = frame_to_dot(doc.frame, doc.names, doc.m ? &*doc.m : nullptr);
  } else {
    throw IoError("export-dot expects a frame file");
  }
  if (!out_path.empty()) write_text(out_path, dot);
  else std::cout << dot;
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"fundlog: a finite-model workbench for fundamental (modal) logic"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--workers", g.workers, "worker threads (or FUNDLOG_WORKERS)");
  app.add_option("--seed", g.seed, "random seed echoed in reports");

  // check
  std::string check_path, check_kind = "auto", check_report;
  auto* check = app.add_subcommand("check", "validate a structure file");
  check->add_option("path", check_path)->required();
  check->add_option("--kind", check_kind,
                    "frame|lattice|morphism|modal-frame|modal-lattice|auto");
  check->add_option("--report", check_report, "write the report JSON here");

  // construct
  std::string con_verb, con_out, con_dot;
  std::vector<std::string> con_inputs;
  auto* con = app.add_subcommand("construct", "run a construction");
  con->add_option("verb", con_verb,
                  "algebra|canonical|filter-ext|coproduct|dual-hom|dual-map")
      ->required();
  con->add_option("inputs", con_inputs)->required();
  con->add_option("--out", con_out, "output file");
  con->add_option("--dot", con_dot, "also write DOT here");

  // derive / countermodel
  std::string der_text, der_out;
  DeriveBudget budget;
  auto* der = app.add_subcommand("derive", "decide a sequent LHS |- RHS");
  der->add_option("sequent", der_text)->required();
  der->add_option("--max-size", budget.max_frame_size, "countermodel size bound");
  der->add_option("--depth", budget.universe_depth, "universe closure depth");
  der->add_option("--universe", budget.max_universe, "universe size cap");
  der->add_option("--budget", budget.valuation_budget, "valuation budget");
  der->add_option("--out", der_out, "artifact file prefix");

  std::string cm_text, cm_out;
  int cm_size = 4;
  std::uint64_t cm_budget = 1000000;
  auto* cm = app.add_subcommand("countermodel", "search for a countermodel only");
  cm->add_option("sequent", cm_text)->required();
  cm->add_option("--max-size", cm_size, "frame size bound");
  cm->add_option("--budget", cm_budget, "valuation budget");
  cm->add_option("--out", cm_out, "artifact file prefix");

  // gt-check
  std::string gt_axioms, gt_report;
  int gt_size = 3;
  std::uint64_t gt_budget = 1000000;
  auto* gt = app.add_subcommand("gt-check", "closure checks for an axiomatic class");
  gt->add_option("--axioms", gt_axioms, "file with one formula per line")->required();
  gt->add_option("--max-size", gt_size, "universe frame size bound");
  gt->add_option("--budget", gt_budget, "valuation budget");
  gt->add_option("--report", gt_report, "write the report JSON here");

  // verify
  std::string ver_name, ver_report;
  SuiteConfig ver_cfg;
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  std::string suites_help;
  for (const auto& s : suite_names()) suites_help += s + " ";
  ver->add_option("suite", ver_name, "one of: " + suites_help)->required();
  ver->add_option("--max-size", ver_cfg.max_frame_size, "frame size bound");
  ver->add_option("--max-lattice", ver_cfg.max_lattice_size, "lattice size bound");
  ver->add_option("--budget", ver_cfg.valuation_budget, "valuation budget");
  ver->add_flag("--emit-instances", ver_cfg.emit_instances, "log every instance");
  ver->add_option("--report", ver_report, "write the report JSON here");

  // enumerate
  std::string en_what, en_out;
  int en_size = 2, en_cap = 0;
  bool en_fund = false, en_iso = false, en_count = false;
  auto* en = app.add_subcommand("enumerate", "enumerate structures");
  en->add_option("what", en_what,
                 "frames|lattices|fundamental-lattices|modal-frames|modal-lattices")
      ->required();
  en->add_option("--size", en_size, "carrier size")->required();
  en->add_flag("--fundamental-only", en_fund);
  en->add_flag("--up-to-iso", en_iso);
  en->add_flag("--count-only", en_count);
  en->add_option("--cap", en_cap, "override the size cap");
  en->add_option("--out", en_out, "output file");

  // export-dot
  std::string dot_path, dot_out;
  auto* dot = app.add_subcommand("export-dot", "render a frame file as DOT");
  dot->add_option("path", dot_path)->required();
  dot->add_option("--out", dot_out, "output file");

  CLI11_PARSE(app, argc, argv);

  try {
    budget.workers = g.workers;
    ver_cfg.workers = g.workers;
    ver_cfg.seed = g.seed;
    if (check->parsed()) return cmd_check(check_path, check_kind, check_report);
    if (con->parsed()) return cmd_construct(con_verb, con_inputs, con_out, con_dot);
    if (der->parsed()) return cmd_derive(der_text, budget, der_out, false);
    if (cm->parsed()) {
      DeriveBudget b;
      b.max_frame_size = cm_size;
      b.valuation_budget = cm_budget;
      b.workers = g.workers;
      return cmd_derive(cm_text, b, cm_out, true);
    }
    if (gt->parsed()) return cmd_gt_check(gt_axioms, gt_size, gt_budget, gt_report);
    if (ver->parsed()) {
      if (std::find(suite_names().begin(), suite_names().end(), ver_name) ==
          suite_names().end()) {
        std::cerr << "unknown suite: " << ver_name << "\n";
        return 2;
      }
      return cmd_verify(ver_name, ver_cfg, ver_report);
    }
    if (en->parsed())
      return cmd_enumerate(en_what, en_size, en_fund, en_iso, en_count, en_cap, en_out);
    if (dot->parsed()) return cmd_export_dot(dot_path, dot_out);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "json error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
