// Exhaustive verification suites: every structural law the library relies
// on, checked over enumerated universes at configurable bounds, reported
// as machine-readable per-check pass/fail with counts and witnesses.
#pragma once

#include <chrono>
#include <functional>

#include "fundlog/constructions.hpp"
#include "fundlog/core.hpp"
#include "fundlog/duality.hpp"
#include "fundlog/formula.hpp"
#include "fundlog/frame.hpp"
#include "fundlog/gt.hpp"
#include "fundlog/lattice.hpp"
#include "fundlog/modal.hpp"
#include "fundlog/morphism.hpp"
#include "fundlog/prover.hpp"
#include "fundlog/semantics.hpp"

namespace fundlog {

struct SuiteConfig {
  int max_frame_size = 0;   // 0: use the suite default
  int max_lattice_size = 0;
  std::uint64_t valuation_budget = 1000000;
  int workers = 0;
  std::uint64_t seed = 0; // echoed in reports; every sweep is exhaustive
  bool emit_instances = false;
};

struct SuiteCheck {
  std::string name;
  long instances = 0;
  long failures = 0;
  std::vector<std::string> witnesses; // first few failing instances
  std::vector<std::pair<std::string, bool>> log;

  void record(bool pass, const std::string& id, bool emit) {
    ++instances;
    if (!pass) {
      ++failures;
      if (witnesses.size() < 10) witnesses.push_back(id);
    }
    if (emit) log.emplace_back(id, pass);
  }
};

struct SuiteReport {
  std::string suite;
  int frame_bound = 0;
  int lattice_bound = 0;
  std::uint64_t seed = 0;
  std::vector<SuiteCheck> checks;
  double seconds = 0;

  bool pass() const {
    for (const auto& c : checks)
      if (c.failures) return false;
    return true;
  }
  long instances() const {
    long t = 0;
    for (const auto& c : checks) t += c.instances;
    return t;
  }
  long failures() const {
    long t = 0;
    for (const auto& c : checks) t += c.failures;
    return t;
  }
};

namespace detail {

inline std::vector<RelFrame> coserial_universe(int maxn) {
  std::vector<RelFrame> out;
  FrameEnumOptions opt;
  opt.cap = std::max(maxn, 4);
  for (int n = 1; n <= maxn; ++n)
    for (auto& f : enumerate_frames(n, opt)) out.push_back(std::move(f));
  return out;
}

inline std::vector<FundamentalFrame> fundamental_universe(int maxn,
                                                          bool up_to_iso = false) {
  std::vector<FundamentalFrame> out;
  for (int n = 1; n <= maxn; ++n)
    for (auto& f : enumerate_fundamental_frames(n, up_to_iso, std::max(maxn, 4)))
      out.push_back(std::move(f));
  return out;
}

inline std::vector<FundamentalLattice> lattice_universe(int maxn) {
  std::vector<FundamentalLattice> out;
  for (int n = 1; n <= maxn; ++n)
    for (auto& L : enumerate_fundamental_lattices(n, std::max(maxn, 6)))
      out.push_back(std::move(L));
  return out;
}

inline std::string frame_id(const RelFrame& f, std::size_t idx) {
  return "frame#" + std::to_string(idx) + "(n=" + std::to_string(f.n) + ")";
}

} // namespace detail

// ---------------------------------------------------------------------------
// facts24: the seven structural frame facts on every co-serial frame.

inline SuiteReport suite_frame_facts(const SuiteConfig& cfg) {
  SuiteReport r;
  r.suite = "facts24";
  r.frame_bound = cfg.max_frame_size ? cfg.max_frame_size : 3;
  auto frames = detail::coserial_universe(r.frame_bound);
  for (int item = 0; item < 7; ++item)
    r.checks.push_back({"item-" + std::to_string(item + 1), 0, 0, {}, {}});
  std::vector<FactsReport> reports(frames.size());
  parallel_for(frames.size(), cfg.workers,
               [&](std::size_t i) { reports[i] = check_facts(frames[i]); });
  for (std::size_t i = 0; i < frames.size(); ++i)
    for (int item = 0; item < 7; ++item)
      r.checks[item].record(reports[i].item[item],
                            detail::frame_id(frames[i], i) + " " + reports[i].witness[item],
                            cfg.emit_instances);
  return r;
}

// ---------------------------------------------------------------------------
// thm414: the positive algebra is a fundamental lattice exactly when the
// frame is fundamental, over every co-serial frame.

inline SuiteReport suite_frame_lattice_equivalence(const SuiteConfig& cfg) {
  SuiteReport r;
  r.suite = "thm414";
  r.frame_bound = cfg.max_frame_size ? cfg.max_frame_size : 4;
  auto frames = detail::coserial_universe(r.frame_bound);
  SuiteCheck check{"frame-fundamental-iff-algebra-fundamental", 0, 0, {}, {}};
  std::vector<std::uint8_t> ok(frames.size(), 0);
  parallel_for(frames.size(), cfg.workers, [&](std::size_t i) {
    bool frame_fund = check_fundamental_frame(frames[i]).ok;
    AlgebraLattice al = algebra_lattice(frames[i]);
    bool alg_fund = check_fundamental(al.lattice, al.neg).ok;
    ok[i] = (frame_fund == alg_fund);
  });
  for (std::size_t i = 0; i < frames.size(); ++i)
    check.record(ok[i], detail::frame_id(frames[i], i), cfg.emit_instances);
  r.checks.push_back(std::move(check));
  return r;
}

// ---------------------------------------------------------------------------
// thmB7: canonical frames are fundamental and the hat map is an embedding
// commuting with negation, over every fundamental lattice.

inline SuiteReport suite_canonical_embedding(const SuiteConfig& cfg) {
  SuiteReport r;
  r.suite = "thmB7";
  r.lattice_bound = cfg.max_lattice_size ? cfg.max_lattice_size : 6;
  auto lats = detail::lattice_universe(r.lattice_bound);
  SuiteCheck fund{"canonical-frame-fundamental", 0, 0, {}, {}};
  SuiteCheck emb{"hat-embedding", 0, 0, {}, {}};
  for (std::size_t i = 0; i < lats.size(); ++i) {
    std::string id = "lattice#" + std::to_string(i) + "(n=" + std::to_string(lats[i].n()) + ")";
    bool cf_ok = true;
    CanonicalFrame cf;
    try {
      cf = canonical_frame(lats[i]);
    } catch (const ValidationError&) {
      cf_ok = false;
    }
    fund.record(cf_ok, id, cfg.emit_instances);
    if (cf_ok) {
      auto rep = hat_embedding(lats[i], cf);
      emb.record(rep.all(), id + " " + rep.witness, cfg.emit_instances);
    }
  }
  r.checks.push_back(std::move(fund));
  r.checks.push_back(std::move(emb));
  return r;
}

// ---------------------------------------------------------------------------
// lemma212: inverse images along frame morphisms are homomorphisms, and the
// closure operator commutes with preimage on every subset.

inline SuiteReport suite_inverse_image_hom(const SuiteConfig& cfg) {
  SuiteReport r;
  r.suite = "lemma212";
  r.frame_bound = cfg.max_frame_size ? cfg.max_frame_size : 3;
  auto frames = detail::fundamental_universe(r.frame_bound);
  std::vector<AlgebraLattice> algs(frames.size());
  parallel_for(frames.size(), cfg.workers,
               [&](std::size_t i) { algs[i] = algebra_lattice(frames[i].frame); });
  SuiteCheck hom{"inverse-image-is-hom", 0, 0, {}, {}};
  SuiteCheck comm{"closure-commutes-on-members", 0, 0, {}, {}};
  SuiteCheck incl{"closure-preimage-inclusion", 0, 0, {}, {}};
  for (std::size_t i = 0; i < frames.size(); ++i)
    for (std::size_t j = 0; j < frames.size(); ++j)
      for (auto& m : enumerate_f_morphisms(frames[i], frames[j])) {
        std::string id = detail::frame_id(frames[i].frame, i) + "->" +
                         detail::frame_id(frames[j].frame, j);
        bool hom_ok = true;
        try {
          chi_of_map(m, algs[i], algs[j]);
        } catch (const ValidationError&) {
          hom_ok = false;
        }
        hom.record(hom_ok, id, cfg.emit_instances);
        auto preimage = [&](SmallSet a) {
          SmallSet pre;
          for (int x = 0; x < frames[i].n(); ++x)
            if (a.test(m.map[x])) pre.set(x);
          return pre;
        };
        // equality on algebra members; one inclusion on every subset
        bool comm_ok = true;
        for (const auto& a : algs[j].algebra.members)
          if (closure(frames[i].frame, preimage(a)) !=
              preimage(closure(frames[j].frame, a)))
            comm_ok = false;
        comm.record(comm_ok, id, cfg.emit_instances);
        bool incl_ok = true;
        for (std::uint64_t bits = 0; bits < (1ull << frames[j].n()); ++bits) {
          SmallSet a = SmallSet::from_low_bits(bits);
          if (!closure(frames[i].frame, preimage(a))
                   .subset_of(preimage(closure(frames[j].frame, a))))
            incl_ok = false;
        }
        incl.record(incl_ok, id, cfg.emit_instances);
      }
  r.checks.push_back(std::move(hom));
  r.checks.push_back(std::move(comm));
  r.checks.push_back(std::move(incl));
  return r;
}

// ---------------------------------------------------------------------------
// lemma213: filter/ideal preimage along a homomorphism is a frame morphism
// between canonical frames and preserves hat images.

inline SuiteReport suite_canonical_morphism(const SuiteConfig& cfg) {
  SuiteReport r;
  r.suite = "lemma213";
  r.lattice_bound = cfg.max_lattice_size ? cfg.max_lattice_size : 4;
  auto lats = detail::lattice_universe(r.lattice_bound);
  std::vector<CanonicalFrame> canons(lats.size());
  for (std::size_t i = 0; i < lats.size(); ++i) canons[i] = canonical_frame(lats[i]);
  SuiteCheck morph{"canonical-map-is-f-morphism", 0, 0, {}, {}};
  SuiteCheck hatc{"hat-compatibility", 0, 0, {}, {}};
  for (std::size_t i = 0; i < lats.size(); ++i)
    for (std::size_t j = 0; j < lats.size(); ++j)
      for (auto& f : enumerate_homs(lats[i], lats[j])) {
        std::string id = "hom lattice#" + std::to_string(i) + "->" + std::to_string(j);
        bool m_ok = true;
        FrameMap dig;
        try {
          dig = digamma_of_hom(f, canons[i], canons[j]);
        } catch (const ValidationError&) {
          m_ok = false;
        }
        morph.record(m_ok, id, cfg.emit_instances);
        if (m_ok)
          hatc.record(digamma_hat_compatible(f, dig, canons[i], canons[j]), id,
                      cfg.emit_instances);
      }
  r.checks.push_back(std::move(morph));
  r.checks.push_back(std::move(hatc));
  return r;
}

// ---------------------------------------------------------------------------
// lemma32-35: the duality biconditionals and the strength hierarchy, on the
// frame side over all f-morphisms and on the lattice side over all homs.

inline SuiteReport suite_duality_biconditionals(const SuiteConfig& cfg) {
  SuiteReport r;
  r.suite = "lemma32-35";
  r.frame_bound = cfg.max_frame_size ? cfg.max_frame_size : 3;
  r.lattice_bound = cfg.max_lattice_size ? cfg.max_lattice_size : 4;
  SuiteCheck dense_inj{"dense-iff-dual-injective", 0, 0, {}, {}};
  SuiteCheck emb_surj{"embedding-iff-dual-surjective", 0, 0, {}, {}};
  SuiteCheck hier{"strong-implies-plain", 0, 0, {}, {}};
  SuiteCheck inj_sd{"injective-iff-strongly-dense", 0, 0, {}, {}};
  SuiteCheck surj_se{"surjective-iff-strong-embedding", 0, 0, {}, {}};

  auto frames = detail::fundamental_universe(r.frame_bound);
  std::vector<AlgebraLattice> algs(frames.size());
  parallel_for(frames.size(), cfg.workers,
               [&](std::size_t i) { algs[i] = algebra_lattice(frames[i].frame); });
  for (std::size_t i = 0; i < frames.size(); ++i)
    for (std::size_t j = 0; j < frames.size(); ++j)
      for (auto& m : enumerate_f_morphisms(frames[i], frames[j])) {
        std::string id = detail::frame_id(frames[i].frame, i) + "->" +
                         detail::frame_id(frames[j].frame, j);
        LatticeHom chi = chi_of_map(m, algs[i], algs[j]);
        bool d = is_dense(m).ok, e = is_embedding(m).ok;
        bool sd = is_strongly_dense(m).ok, se = is_strong_embedding(m).ok;
        dense_inj.record(d == chi.injective(), id, cfg.emit_instances);
        emb_surj.record(e == chi.surjective(), id, cfg.emit_instances);
        hier.record((!sd || d) && (!se || e), id, cfg.emit_instances);
      }

  auto lats = detail::lattice_universe(r.lattice_bound);
  std::vector<CanonicalFrame> canons(lats.size());
  for (std::size_t i = 0; i < lats.size(); ++i) canons[i] = canonical_frame(lats[i]);
  for (std::size_t i = 0; i < lats.size(); ++i)
    for (std::size_t j = 0; j < lats.size(); ++j)
      for (auto& f : enumerate_homs(lats[i], lats[j])) {
        std::string id = "hom lattice#" + std::to_string(i) + "->" + std::to_string(j);
        FrameMap dig = digamma_of_hom(f, canons[i], canons[j]);
        inj_sd.record(f.injective() == is_strongly_dense(dig).ok, id, cfg.emit_instances);
        surj_se.record(f.surjective() == is_strong_embedding(dig).ok, id,
                       cfg.emit_instances);
      }
  r.checks = {dense_inj, emb_surj, hier, inj_sd, surj_se};
  return r;
}

// ---------------------------------------------------------------------------
// lemma37: subframes give homomorphic images, dense images give
// subalgebras; subalgebras give strongly dense canonical images and
// homomorphic images give strong canonical subframes.

inline SuiteReport suite_image_subalgebra(const SuiteConfig& cfg) {
  SuiteReport r;
  r.suite = "lemma37";
  r.frame_bound = cfg.max_frame_size ? cfg.max_frame_size : 3;
  r.lattice_bound = cfg.max_lattice_size ? cfg.max_lattice_size : 4;
  SuiteCheck sub{"embedding-gives-surjective-dual", 0, 0, {}, {}};
  SuiteCheck img{"dense-gives-injective-dual", 0, 0, {}, {}};
  SuiteCheck alg{"injective-hom-gives-strongly-dense-dual", 0, 0, {}, {}};
  SuiteCheck quo{"surjective-hom-gives-strong-embedding-dual", 0, 0, {}, {}};
  auto frames = detail::fundamental_universe(r.frame_bound);
  std::vector<AlgebraLattice> algs(frames.size());
  parallel_for(frames.size(), cfg.workers,
               [&](std::size_t i) { algs[i] = algebra_lattice(frames[i].frame); });
  for (std::size_t i = 0; i < frames.size(); ++i)
    for (std::size_t j = 0; j < frames.size(); ++j)
      for (auto& m : enumerate_f_morphisms(frames[i], frames[j])) {
        std::string id = detail::frame_id(frames[i].frame, i) + "->" +
                         detail::frame_id(frames[j].frame, j);
        if (is_embedding(m).ok)
          sub.record(chi_of_map(m, algs[i], algs[j]).surjective(), id,
                     cfg.emit_instances);
        if (is_dense(m).ok)
          img.record(chi_of_map(m, algs[i], algs[j]).injective(), id,
                     cfg.emit_instances);
      }
  auto lats = detail::lattice_universe(r.lattice_bound);
  std::vector<CanonicalFrame> canons(lats.size());
  for (std::size_t i = 0; i < lats.size(); ++i) canons[i] = canonical_frame(lats[i]);
  for (std::size_t i = 0; i < lats.size(); ++i)
    for (std::size_t j = 0; j < lats.size(); ++j)
      for (auto& f : enumerate_homs(lats[i], lats[j])) {
        std::string id = "hom lattice#" + std::to_string(i) + "->" + std::to_string(j);
        FrameMap dig = digamma_of_hom(f, canons[i], canons[j]);
        if (f.injective()) alg.record(is_strongly_dense(dig).ok, id, cfg.emit_instances);
        if (f.surjective()) quo.record(is_strong_embedding(dig).ok, id, cfg.emit_instances);
      }
  r.checks = {sub, img, alg, quo};
  return r;
}

// ---------------------------------------------------------------------------
// lemma39: the coproduct algebra is the product of the summand algebras.

inline SuiteReport suite_coproduct_algebra(const SuiteConfig& cfg) {
  SuiteReport r;
  r.suite = "lemma39";
  r.frame_bound = cfg.max_frame_size ? cfg.max_frame_size : 3;
  auto frames = detail::fundamental_universe(r.frame_bound);
  SuiteCheck iso{"coproduct-algebra-is-product", 0, 0, {}, {}};
  SuiteCheck inj{"injections-are-strong-embeddings", 0, 0, {}, {}};
  std::vector<std::uint8_t> iso_ok(frames.size() * frames.size(), 0);
  std::vector<std::uint8_t> inj_ok(frames.size() * frames.size(), 0);
  parallel_for(frames.size() * frames.size(), cfg.workers, [&](std::size_t k) {
    std::size_t i = k / frames.size(), j = k % frames.size();
    iso_ok[k] = verify_product_iso({frames[i], frames[j]}).all();
    FundamentalFrame sum = coproduct({frames[i], frames[j]});
    bool all_emb = true;
    for (auto& m : coproduct_injections({frames[i], frames[j]}, sum))
      if (!is_f_morphism(m).ok || !is_strong_embedding(m).ok) all_emb = false;
    inj_ok[k] = all_emb;
  });
  for (std::size_t k = 0; k < iso_ok.size(); ++k) {
    std::string id = "pair#" + std::to_string(k);
    iso.record(iso_ok[k], id, cfg.emit_instances);
    inj.record(inj_ok[k], id, cfg.emit_instances);
  }
  r.checks = {iso, inj};
  return r;
}

// ---------------------------------------------------------------------------
// lemma42: double density, compactness and the negation formula for the
// canonical extension of every fundamental lattice.

inline SuiteReport suite_canonical_extension(const SuiteConfig& cfg) {
  SuiteReport r;
  r.suite = "lemma42";
  r.lattice_bound = cfg.max_lattice_size ? cfg.max_lattice_size : 5;
  auto lats = detail::lattice_universe(r.lattice_bound);
  SuiteCheck jm{"join-of-meets", 0, 0, {}, {}};
  SuiteCheck mj{"meet-of-joins", 0, 0, {}, {}};
  SuiteCheck comp{"compactness", 0, 0, {}, {}};
  SuiteCheck negf{"negation-formula", 0, 0, {}, {}};
  std::vector<ExtensionReport> reports(lats.size());
  parallel_for(lats.size(), cfg.workers,
               [&](std::size_t i) { reports[i] = verify_canonical_extension(lats[i]); });
  for (std::size_t i = 0; i < lats.size(); ++i) {
    std::string id = "lattice#" + std::to_string(i) + "(n=" + std::to_string(lats[i].n()) + ")";
    jm.record(reports[i].join_of_meets, id, cfg.emit_instances);
    mj.record(reports[i].meet_of_joins, id, cfg.emit_instances);
    comp.record(reports[i].compact, id, cfg.emit_instances);
    negf.record(reports[i].neg_formula, id, cfg.emit_instances);
  }
  r.checks = {jm, mj, comp, negf};
  return r;
}

// ---------------------------------------------------------------------------
// lemma44: closure of axiomatic frame classes under subframes, dense
// images and coproducts, with filter-extension reflection where checkable,
// for every axiom set drawn from a fixed six-formula pool.

inline SuiteReport suite_axiomatic_closure(const SuiteConfig& cfg,
                                           FormulaArena& arena) {
  SuiteReport r;
  r.suite = "lemma44";
  r.frame_bound = cfg.max_frame_size ? cfg.max_frame_size : 3;
  std::vector<FormulaId> pool = {
      arena.parse("T"),           arena.parse("p | ~p"),
      arena.parse("~p | ~~p"),    arena.parse("~(p & ~p)"),
      arena.parse("~~(p | ~p)"),  arena.parse("~(p & q) | ~~(p | q)")};
  std::vector<FrameWithAlgebra> universe;
  for (auto& f : detail::fundamental_universe(r.frame_bound))
    universe.emplace_back(std::move(f));
  GtUniverseCache cache(universe, 100000);
  SuiteCheck sub{"closed-under-subframes", 0, 0, {}, {}};
  SuiteCheck den{"closed-under-dense-images", 0, 0, {}, {}};
  SuiteCheck cop{"closed-under-coproducts", 0, 0, {}, {}};
  SuiteCheck ext{"reflects-filter-extensions", 0, 0, {}, {}};
  for (std::uint64_t gm = 0; gm < (1ull << pool.size()); ++gm) {
    FrameClassSpec spec;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if ((gm >> i) & 1) spec.axioms.push_back(pool[i]);
    spec.universe = universe;
    spec.valuation_budget = cfg.valuation_budget;
    GtReport g = check_gt_closure(arena, spec, &cache);
    std::string id = "axioms#" + std::to_string(gm);
    sub.record(g.subframes.pass, id, cfg.emit_instances);
    den.record(g.dense_images.pass, id, cfg.emit_instances);
    cop.record(g.coproducts.pass, id, cfg.emit_instances);
    ext.record(g.filter_extensions.pass, id, cfg.emit_instances);
  }
  r.checks = {sub, den, cop, ext};
  return r;
}

inline SuiteReport suite_axiomatic_closure(const SuiteConfig& cfg) {
  FormulaArena arena;
  return suite_axiomatic_closure(cfg, arena);
}

// ---------------------------------------------------------------------------
// lemma54: inverse image commutes with box and diamond along every modal
// morphism between modal frames (up to isomorphism).

inline SuiteReport suite_modal_morphism_equations(const SuiteConfig& cfg) {
  SuiteReport r;
  r.suite = "lemma54";
  r.frame_bound = cfg.max_frame_size ? cfg.max_frame_size : 3;
  std::vector<ModalFrame> mframes;
  for (int n = 1; n <= r.frame_bound; ++n)
    for (auto& m : enumerate_modal_frames(n, true, std::max(r.frame_bound, 3)))
      mframes.push_back(std::move(m));

  // group by base frame so the morphism tables are enumerated once per pair
  std::vector<std::uint64_t> base_code(mframes.size());
  std::vector<const FundamentalFrame*> bases;
  std::vector<std::vector<int>> groups;
  {
    std::map<std::uint64_t, int> idx;
    for (std::size_t i = 0; i < mframes.size(); ++i) {
      std::uint64_t code = frame_canonical_code(mframes[i].base.frame);
      auto [it, fresh] = idx.emplace(code, static_cast<int>(groups.size()));
      if (fresh) {
        groups.emplace_back();
        bases.push_back(&mframes[i].base);
      }
      groups[it->second].push_back(static_cast<int>(i));
    }
  }
  std::vector<SetAlgebra> algebras(mframes.size());
  parallel_for(mframes.size(), cfg.workers, [&](std::size_t i) {
    algebras[i] = positive_algebra(mframes[i].base.frame);
  });

  SuiteCheck eq{"preimage-commutes-with-box-and-diamond", 0, 0, {}, {}};
  struct Slot {
    long instances = 0;
    long failures = 0;
    std::vector<std::string> witnesses;
  };
  std::vector<Slot> slots(groups.size() * groups.size());
  parallel_for(slots.size(), cfg.workers, [&](std::size_t gk) {
    std::size_t gi = gk / groups.size(), gj = gk % groups.size();
    auto fmorphs = enumerate_f_morphisms(*bases[gi], *bases[gj]);
    if (fmorphs.empty()) return;
    Slot& slot = slots[gk];
    for (int a : groups[gi])
      for (int b : groups[gj])
        for (auto& fm : fmorphs) {
          ModalFrameMap mm{mframes[a], mframes[b], fm.map};
          if (!detail_aufm_conditions(mm).ok) continue;
          ++slot.instances;
          if (!modal_hom_equations(mm, algebras[b])) {
            ++slot.failures;
            if (slot.witnesses.size() < 5)
              slot.witnesses.push_back("modal#" + std::to_string(a) + "->" +
                                       std::to_string(b));
          }
        }
  });
  for (const Slot& slot : slots) {
    eq.instances += slot.instances;
    eq.failures += slot.failures;
    for (const auto& w : slot.witnesses)
      if (eq.witnesses.size() < 10) eq.witnesses.push_back(w);
  }
  r.checks = {eq};
  return r;
}

// ---------------------------------------------------------------------------
// lemma55: filter/ideal preimage along modal homomorphisms is a modal
// morphism between modal canonical frames.

inline SuiteReport suite_modal_canonical_morphism(const SuiteConfig& cfg) {
  SuiteReport r;
  r.suite = "lemma55";
  r.lattice_bound = cfg.max_lattice_size ? cfg.max_lattice_size : 4;
  std::vector<ModalLattice> lats;
  for (int n = 1; n <= r.lattice_bound; ++n)
    for (auto& M : enumerate_modal_lattices(n, std::max(r.lattice_bound, 6)))
      lats.push_back(std::move(M));
  std::vector<ModalCanonicalFrame> canons(lats.size());
  parallel_for(lats.size(), cfg.workers,
               [&](std::size_t i) { canons[i] = modal_canonical_frame(lats[i]); });
  SuiteCheck morph{"canonical-map-is-modal-morphism", 0, 0, {}, {}};
  for (std::size_t i = 0; i < lats.size(); ++i)
    for (std::size_t j = 0; j < lats.size(); ++j) {
      for_each_map(lats[i].n(), lats[j].n(), 100000,
                   [&](const std::vector<std::uint8_t>& tab) {
        LatticeHom h{lats[i].base, lats[j].base, tab};
        if (!check_hom(h)) return;
        for (int a = 0; a < lats[i].n(); ++a)
          if (tab[lats[i].box[a]] != lats[j].box[tab[a]] ||
              tab[lats[i].dia[a]] != lats[j].dia[tab[a]])
            return;
        FrameMap dig = digamma_of_hom(h, canons[i].base, canons[j].base);
        ModalFrameMap mm{canons[j].frame, canons[i].frame, dig.map};
        morph.record(is_aufm_morphism(mm).ok,
                     "modal-hom lattice#" + std::to_string(i) + "->" + std::to_string(j),
                     cfg.emit_instances);
      });
    }
  r.checks = {morph};
  return r;
}

// ---------------------------------------------------------------------------
// lemma58: box and diamond on the modal canonical frame match the
// ideal-indexed extension formulas.

inline SuiteReport suite_modal_extension_formulas(const SuiteConfig& cfg) {
  SuiteReport r;
  r.suite = "lemma58";
  r.lattice_bound = cfg.max_lattice_size ? cfg.max_lattice_size : 4;
  std::vector<ModalLattice> lats;
  for (int n = 1; n <= r.lattice_bound; ++n)
    for (auto& M : enumerate_modal_lattices(n, std::max(r.lattice_bound, 6)))
      lats.push_back(std::move(M));
  SuiteCheck boxf{"box-formula", 0, 0, {}, {}};
  SuiteCheck diaf{"diamond-formula", 0, 0, {}, {}};
  std::vector<ModalExtensionReport> reports(lats.size());
  parallel_for(lats.size(), cfg.workers, [&](std::size_t i) {
    reports[i] = verify_modal_canonical_extension(lats[i]);
  });
  for (std::size_t i = 0; i < lats.size(); ++i) {
    std::string id = "modal-lattice#" + std::to_string(i);
    boxf.record(reports[i].box_formula, id, cfg.emit_instances);
    diaf.record(reports[i].dia_formula, id, cfg.emit_instances);
  }
  r.checks = {boxf, diaf};
  return r;
}

// ---------------------------------------------------------------------------
// Registry

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "facts24",  "thm414",  "thmB7",   "lemma212", "lemma213",
      "lemma32-35", "lemma37", "lemma39", "lemma42",  "lemma44",
      "lemma54",  "lemma55", "lemma58"};
  return names;
}

inline SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteReport r;
  if (name == "facts24") r = suite_frame_facts(cfg);
  else if (name == "thm414") r = suite_frame_lattice_equivalence(cfg);
  else if (name == "thmB7") r = suite_canonical_embedding(cfg);
  else if (name == "lemma212") r = suite_inverse_image_hom(cfg);
  else if (name == "lemma213") r = suite_canonical_morphism(cfg);
  else if (name == "lemma32-35") r = suite_duality_biconditionals(cfg);
  else if (name == "lemma37") r = suite_image_subalgebra(cfg);
  else if (name == "lemma39") r = suite_coproduct_algebra(cfg);
  else if (name == "lemma42") r = suite_canonical_extension(cfg);
  else if (name == "lemma44") r = suite_axiomatic_closure(cfg);
  else if (name == "lemma54") r = suite_modal_morphism_equations(cfg);
  else if (name == "lemma55") r = suite_modal_canonical_morphism(cfg);
  else if (name == "lemma58") r = suite_modal_extension_formulas(cfg);
  else throw ValidationError("UnknownSuite", {}, "no suite named " + name);
  r.seed = cfg.seed;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

} // namespace fundlog
