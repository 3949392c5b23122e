// Acceptance gate: one line per criterion, zero tolerated exceptions.
// Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>

#include "fundlog/json_io.hpp"

using namespace fundlog;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int number, const char* text, bool pass, long instances, long failures,
            double seconds) {
  std::printf("[%s] criterion %2d: %s (%ld instances, %ld failures, %.1fs)\n",
              pass ? "PASS" : "FAIL", number, text, instances, failures, seconds);
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

double secs(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void criterion_from_suite(int number, const char* text, const std::string& suite,
                          SuiteConfig cfg) {
  SuiteReport r = run_suite(suite, cfg);
  report(number, text, r.pass(), r.instances(), r.failures(), r.seconds);
}

// frame/algebra equivalence over every labeled co-serial frame
void criterion1() {
  SuiteConfig cfg;
  cfg.max_frame_size = 4;
  criterion_from_suite(1, "positive algebra fundamental iff frame fundamental, frames <= 4",
                       "thm414", cfg);
}

void criterion2() {
  SuiteConfig cfg;
  cfg.max_frame_size = 3;
  criterion_from_suite(2, "seven frame facts on all co-serial frames <= 3", "facts24", cfg);
}

void criterion3() {
  SuiteConfig cfg;
  cfg.max_lattice_size = 6;
  criterion_from_suite(3, "canonical frames fundamental + hat embeddings, lattices <= 6",
                       "thmB7", cfg);
}

void criterion4() {
  SuiteConfig cfg;
  cfg.max_lattice_size = 5;
  criterion_from_suite(4, "double density, compactness, negation formula, lattices <= 5",
                       "lemma42", cfg);
}

void criterion5() {
  auto t0 = Clock::now();
  // frame-side biconditionals over all f-morphisms between fundamental
  // frames on <= 3 labeled points
  long instances = 0, failures = 0;
  std::vector<FundamentalFrame> frames;
  for (int n = 1; n <= 3; ++n)
    for (auto& f : enumerate_fundamental_frames(n)) frames.push_back(std::move(f));
  std::vector<AlgebraLattice> algs(frames.size());
  for (std::size_t i = 0; i < frames.size(); ++i)
    algs[i] = algebra_lattice(frames[i].frame);
  for (std::size_t i = 0; i < frames.size(); ++i)
    for (std::size_t j = 0; j < frames.size(); ++j)
      for (const auto& m : enumerate_f_morphisms(frames[i], frames[j])) {
        LatticeHom chi = chi_of_map(m, algs[i], algs[j]);
        ++instances;
        if (is_dense(m).ok != chi.injective()) ++failures;
        if (is_embedding(m).ok != chi.surjective()) ++failures;
      }
  report(5, "dense iff dual injective and embedding iff dual surjective, frames <= 3",
         failures == 0, instances, failures, secs(t0));
}

void criterion6() {
  auto t0 = Clock::now();
  long instances = 0, failures = 0;
  std::vector<FundamentalLattice> lats;
  for (int n = 1; n <= 4; ++n)
    for (auto& L : enumerate_fundamental_lattices(n)) lats.push_back(std::move(L));
  std::vector<CanonicalFrame> canons(lats.size());
  for (std::size_t i = 0; i < lats.size(); ++i) canons[i] = canonical_frame(lats[i]);
  for (std::size_t i = 0; i < lats.size(); ++i)
    for (std::size_t j = 0; j < lats.size(); ++j)
      for (const auto& f : enumerate_homs(lats[i], lats[j])) {
        ++instances;
        bool ok = true;
        try {
          FrameMap dig = digamma_of_hom(f, canons[i], canons[j]);
          if (!digamma_hat_compatible(f, dig, canons[i], canons[j])) ok = false;
          if (f.injective() != is_strongly_dense(dig).ok) ok = false;
          if (f.surjective() != is_strong_embedding(dig).ok) ok = false;
        } catch (const ValidationError&) {
          ok = false; // digamma failed to be an f-morphism
        }
        if (!ok) ++failures;
      }
  report(6, "canonical duals of homs: morphism, hat images, strong biconditionals, lattices <= 4",
         failures == 0, instances, failures, secs(t0));
}

void criterion7() {
  SuiteConfig cfg;
  cfg.max_frame_size = 3;
  criterion_from_suite(7, "coproduct algebra is the summand product, frame pairs <= 3",
                       "lemma39", cfg);
}

void criterion8() {
  SuiteConfig cfg;
  cfg.max_frame_size = 3;
  criterion_from_suite(8, "axiomatic-class closure checks over the six-formula pool, frames <= 3",
                       "lemma44", cfg);
}

void criterion9() {
  auto t0 = Clock::now();
  long instances = 0, failures = 0;
  FormulaArena ar;
  auto expect_proved = [&](const char* text) {
    auto s = ar.parse_sequent(text);
    ++instances;
    if (derive(ar, {s.first, s.second}).status != DeriveResult::Status::Proved)
      ++failures;
  };
  auto expect_refuted = [&](const char* text, int max_size) {
    auto s = ar.parse_sequent(text);
    ++instances;
    if (!countermodel(ar, {s.first, s.second}, max_size)) ++failures;
  };
  expect_proved("p |- ~~p");
  expect_proved("F |- p");
  expect_refuted("~~p |- p", 4);
  expect_refuted("T |- p | ~p", 4);
  expect_refuted("p & (q | r) |- (p & q) | (p & r)", 4);

  // every reflexive symmetric frame validates double negation elimination
  auto dn = ar.parse_sequent("~~p |- p");
  FrameEnumOptions opt;
  for (int n = 1; n <= 4; ++n)
    for (const auto& f : enumerate_frames(n, opt)) {
      bool refl = true, symm = true;
      for (int x = 0; x < n; ++x) {
        if (!f.rel.at(x, x)) refl = false;
        for (int y = 0; y < n; ++y)
          if (f.rel.at(x, y) != f.rel.at(y, x)) symm = false;
      }
      if (!refl || !symm) continue;
      ++instances;
      SetAlgebra alg = positive_algebra(f);
      EvalContext ctx{ar, f, alg, nullptr};
      if (!frame_consequence(ctx, {dn.first, dn.second}).valid) ++failures;
    }
  report(9, "proof search, countermodels and orthologic recovery", failures == 0,
         instances, failures, secs(t0));
}

void criterion10() {
  auto t0 = Clock::now();
  long instances = 0, failures = 0, skipped_extensions = 0;

  // canonical frames of every modal lattice <= 4 are valid
  std::vector<ModalLattice> lats;
  for (int n = 1; n <= 4; ++n)
    for (auto& M : enumerate_modal_lattices(n)) lats.push_back(std::move(M));
  for (const auto& M : lats) {
    ++instances;
    try {
      modal_canonical_frame(M); // validates internally
    } catch (const ValidationError&) {
      ++failures;
    }
  }

  // filter extensions of every modal frame <= 3 whose algebra is a modal
  // lattice; frames outside that domain must be reported, not mangled
  std::vector<ModalFrame> mframes;
  for (int n = 1; n <= 3; ++n)
    for (auto& m : enumerate_modal_frames(n, true)) mframes.push_back(std::move(m));
  for (const auto& mf : mframes) {
    ModalAlgebraLattice tabs = modal_algebra_tables(mf);
    if (!check_modal_lattice(tabs.alg.fundamental(), tabs.box, tabs.dia).ok) {
      ++instances;
      try {
        modal_filter_extension(mf);
        ++failures; // must refuse
      } catch (const ValidationError&) {
        ++skipped_extensions;
      }
      continue;
    }
    ++instances;
    try {
      ModalCanonicalFrame ext = modal_filter_extension(mf);
      if (!validate_aufm(ext.base.frame, ext.frame.m).ok) ++failures;
    } catch (const ValidationError&) {
      ++failures;
    }
  }

  // coproducts: all ordered pairs with at most five points total, plus the
  // diagonal of the three-point frames
  {
    std::vector<const ModalFrame*> small, all;
    for (const auto& m : mframes) {
      all.push_back(&m);
      if (m.n() <= 2) small.push_back(&m);
    }
    auto check_pair = [&](const ModalFrame& a, const ModalFrame& b) {
      ++instances;
      try {
        ModalFrame sum = modal_coproduct({a, b});
        if (!validate_aufm(sum.base, sum.m).ok) ++failures;
      } catch (const ValidationError&) {
        ++failures;
      }
    };
    for (const ModalFrame* a : small)
      for (const ModalFrame* b : all)
        if (a->n() + b->n() <= 5) {
          check_pair(*a, *b);
          if (b->n() > 2) check_pair(*b, *a);
        }
    for (const ModalFrame* a : all)
      if (a->n() == 3) check_pair(*a, *a);
  }

  // modal morphism equations and extension formulas via their suites
  {
    SuiteConfig cfg;
    cfg.max_frame_size = 3;
    SuiteReport r = run_suite("lemma54", cfg);
    instances += r.instances();
    failures += r.failures();
  }
  {
    SuiteConfig cfg;
    cfg.max_lattice_size = 4;
    SuiteReport r = run_suite("lemma58", cfg);
    instances += r.instances();
    failures += r.failures();
  }
  std::printf("       criterion 10 note: %ld frames have no filter extension "
              "(algebra not a unified pair) and were checked to be refused\n",
              skipped_extensions);
  report(10, "modal constructions valid, morphism equations, extension formulas",
         failures == 0, instances, failures, secs(t0));
}

} // namespace

int main() {
  auto t0 = Clock::now();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  std::printf("%d of 10 criteria failed (total %.1fs)\n", g_failures, secs(t0));
  return g_failures ? 1 : 0;
}
