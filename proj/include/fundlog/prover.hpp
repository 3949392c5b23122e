// Bounded sequent derivation: saturate the closure rules of the consequence
// relation over a finite formula universe (sound underapproximation), and
// refute by exhaustive countermodel search over small fundamental frames.
// Anything the budget cannot settle comes back Unknown.
#pragma once

#include <optional>

#include "fundlog/core.hpp"
#include "fundlog/formula.hpp"
#include "fundlog/frame.hpp"
#include "fundlog/semantics.hpp"

namespace fundlog {

struct DeriveBudget {
  int universe_depth = 2;     // rounds of negation/connective closure
  int max_universe = 1200;    // hard cap on saturation universe size
  int max_frame_size = 4;     // countermodel search bound
  std::uint64_t valuation_budget = 1000000;
  int workers = 0;
};

struct TraceStep {
  std::string sequent;
  std::string rule;
  std::vector<std::string> premises;
};

struct Countermodel {
  FundamentalFrame frame;
  SetAlgebra algebra;
  Valuation valuation;
  int size = 0;
};

struct DeriveResult {
  enum class Status { Proved, Refuted, Unknown };
  Status status = Status::Unknown;
  std::vector<TraceStep> trace;
  std::optional<Countermodel> counter;
  bool truncated_universe = false;
};

namespace detail {

struct DynBits {
  std::vector<std::uint64_t> w;
  explicit DynBits(int n = 0) : w((n + 63) / 64, 0) {}
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { w[i >> 6] |= 1ull << (i & 63); }
  void or_with(const DynBits& o) {
    for (std::size_t k = 0; k < w.size(); ++k) w[k] |= o.w[k];
  }
  template <typename F> void for_each_and_not(const DynBits& a, const DynBits& b, F f) const {
    for (std::size_t k = 0; k < w.size(); ++k) {
      std::uint64_t bits = a.w[k] & ~b.w[k];
      while (bits) {
        int i = static_cast<int>(k * 64 + __builtin_ctzll(bits));
        bits &= bits - 1;
        f(i);
      }
    }
  }
};

// Saturation state over a fixed universe of formula ids.
class Saturation {
public:
  Saturation(FormulaArena& arena, Sequent goal, const DeriveBudget& budget)
      : arena_(arena) {
    build_universe(goal, budget);
    int v = size();
    rows_.assign(v, DynBits(v));
    cols_.assign(v, DynBits(v));
    prov_.assign(static_cast<std::size_t>(v) * v, Prov{});
    seed();
    saturate();
  }

  int size() const { return static_cast<int>(ids_.size()); }
  bool truncated() const { return truncated_; }
  int index_of(FormulaId f) const {
    auto it = uindex_.find(f);
    return it == uindex_.end() ? -1 : it->second;
  }
  bool derivable(FormulaId a, FormulaId b) const {
    int i = index_of(a), j = index_of(b);
    return i >= 0 && j >= 0 && rows_[i].test(j);
  }

  std::vector<TraceStep> trace(FormulaId a, FormulaId b) const {
    std::vector<TraceStep> out;
    std::set<std::pair<int, int>> visited;
    emit(index_of(a), index_of(b), visited, out);
    return out;
  }

private:
  struct Prov {
    std::uint8_t rule = 0; // 0 = underived
    int via = -1;          // cut midpoint or premise column
  };

  static constexpr const char* kRuleNames[] = {
      "",          "refl",     "bot-elim",  "top-intro", "top-neg-bot",
      "and-proj1", "and-proj2", "and-intro", "or-inj1",   "or-inj2",
      "or-elim",   "neg-neg-intro", "absurd", "contrapose", "cut"};
  enum Rule : std::uint8_t {
    kNone = 0, kRefl, kBotElim, kTopIntro, kTopNegBot,
    kAndProj1, kAndProj2, kAndIntro, kOrInj1, kOrInj2,
    kOrElim, kNegNegIntro, kAbsurd, kContrapose, kCut
  };

  void build_universe(Sequent goal, const DeriveBudget& budget) {
    auto add = [&](FormulaId f) {
      if (uindex_.count(f)) return true;
      if (static_cast<int>(ids_.size()) >= budget.max_universe) {
        truncated_ = true;
        return false;
      }
      uindex_.emplace(f, static_cast<int>(ids_.size()));
      ids_.push_back(f);
      return true;
    };
    for (FormulaId f : arena_.subformulas(goal.lhs)) add(f);
    for (FormulaId f : arena_.subformulas(goal.rhs)) add(f);
    add(arena_.top());
    add(arena_.bot());
    add(arena_.neg(arena_.bot()));
    for (int round = 0; round < budget.universe_depth && !truncated_; ++round) {
      std::size_t fixed = ids_.size();
      for (std::size_t i = 0; i < fixed && !truncated_; ++i)
        add(arena_.neg(ids_[i]));
      for (std::size_t i = 0; i < fixed && !truncated_; ++i)
        for (std::size_t j = 0; j < fixed && !truncated_; ++j) {
          add(arena_.conj(ids_[i], ids_[j]));
          add(arena_.disj(ids_[i], ids_[j]));
        }
    }
  }

  bool add(int i, int j, Rule r, int via = -1) {
    if (rows_[i].test(j)) return false;
    rows_[i].set(j);
    cols_[j].set(i);
    prov_[static_cast<std::size_t>(i) * size() + j] = {r, via};
    return true;
  }

  void seed() {
    int v = size();
    int bot = index_of(arena_.bot());
    int top = index_of(arena_.top());
    for (int i = 0; i < v; ++i) {
      add(i, i, kRefl);
      if (bot >= 0) add(bot, i, kBotElim);
      if (top >= 0) add(i, top, kTopIntro);
    }
    if (int nb = index_of(arena_.neg(arena_.bot())); nb >= 0 && top >= 0)
      add(top, nb, kTopNegBot);
    for (int c = 0; c < v; ++c) {
      FormulaId f = ids_[c];
      switch (arena_.kind(f)) {
        case FKind::And: {
          int a = index_of(arena_.left(f)), b = index_of(arena_.right(f));
          if (a >= 0) add(c, a, kAndProj1);
          if (b >= 0) add(c, b, kAndProj2);
          // contradiction shape: right conjunct negates the left
          if (bot >= 0 && arena_.kind(arena_.right(f)) == FKind::Neg &&
              arena_.left(arena_.right(f)) == arena_.left(f))
            add(c, bot, kAbsurd);
          break;
        }
        case FKind::Or: {
          int a = index_of(arena_.left(f)), b = index_of(arena_.right(f));
          if (a >= 0) add(a, c, kOrInj1);
          if (b >= 0) add(b, c, kOrInj2);
          break;
        }
        case FKind::Neg: {
          FormulaId inner = arena_.left(f);
          if (arena_.kind(inner) == FKind::Neg) {
            int a = index_of(arena_.left(inner));
            if (a >= 0) add(a, c, kNegNegIntro);
          }
          break;
        }
        default: break;
      }
    }
  }

  void saturate() {
    int v = size();
    std::vector<int> negidx(v, -1);
    std::vector<std::pair<int, std::pair<int, int>>> conjs, disjs; // (node, children)
    for (int i = 0; i < v; ++i) {
      negidx[i] = index_of(arena_.neg(ids_[i]));
      FKind k = arena_.kind(ids_[i]);
      int a = (k == FKind::And || k == FKind::Or) ? index_of(arena_.left(ids_[i])) : -1;
      int b = (k == FKind::And || k == FKind::Or) ? index_of(arena_.right(ids_[i])) : -1;
      if (a < 0 || b < 0) continue;
      if (k == FKind::And) conjs.push_back({i, {a, b}});
      if (k == FKind::Or) disjs.push_back({i, {a, b}});
    }
    bool changed = true;
    while (changed) {
      changed = false;
      // cut
      for (int i = 0; i < v; ++i) {
        DynBits reach(v);
        for (std::size_t k = 0; k < rows_[i].w.size(); ++k) {
          std::uint64_t bits = rows_[i].w[k];
          while (bits) {
            int j = static_cast<int>(k * 64 + __builtin_ctzll(bits));
            bits &= bits - 1;
            reach.or_with(rows_[j]);
          }
        }
        reach.for_each_and_not(reach, rows_[i], [&](int t) {
          // find a midpoint present before this addition
          for (std::size_t k = 0; k < rows_[i].w.size(); ++k) {
            std::uint64_t bits = rows_[i].w[k] & cols_[t].w[k];
            if (bits) {
              add(i, t, kCut, static_cast<int>(k * 64 + __builtin_ctzll(bits)));
              changed = true;
              return;
            }
          }
        });
      }
      // and-intro
      for (auto& [c, ab] : conjs)
        cols_[c].for_each_and_not(cols_[ab.first], cols_[c], [&](int chi) {
          if (cols_[ab.second].test(chi)) {
            add(chi, c, kAndIntro);
            changed = true;
          }
        });
      // or-elim
      for (auto& [d, ab] : disjs)
        rows_[d].for_each_and_not(rows_[ab.first], rows_[d], [&](int chi) {
          if (rows_[ab.second].test(chi)) {
            add(d, chi, kOrElim);
            changed = true;
          }
        });
      // contraposition
      for (int i = 0; i < v; ++i) {
        if (negidx[i] < 0) continue;
        for (std::size_t k = 0; k < rows_[i].w.size(); ++k) {
          std::uint64_t bits = rows_[i].w[k];
          while (bits) {
            int j = static_cast<int>(k * 64 + __builtin_ctzll(bits));
            bits &= bits - 1;
            if (negidx[j] >= 0 && add(negidx[j], negidx[i], kContrapose, i * size() + j))
              changed = true;
          }
        }
      }
    }
  }

  std::string seq_text(int i, int j) const {
    return arena_.to_string(ids_[i]) + " |- " + arena_.to_string(ids_[j]);
  }

  void emit(int i, int j, std::set<std::pair<int, int>>& visited,
            std::vector<TraceStep>& out) const {
    if (!visited.insert({i, j}).second) return;
    const Prov& p = prov_[static_cast<std::size_t>(i) * size() + j];
    TraceStep step;
    step.sequent = seq_text(i, j);
    step.rule = kRuleNames[p.rule];
    switch (p.rule) {
      case kCut:
        emit(i, p.via, visited, out);
        emit(p.via, j, visited, out);
        step.premises = {seq_text(i, p.via), seq_text(p.via, j)};
        break;
      case kAndIntro: {
        FormulaId f = ids_[j];
        int a = index_of(arena_.left(f)), b = index_of(arena_.right(f));
        emit(i, a, visited, out);
        emit(i, b, visited, out);
        step.premises = {seq_text(i, a), seq_text(i, b)};
        break;
      }
      case kOrElim: {
        FormulaId f = ids_[i];
        int a = index_of(arena_.left(f)), b = index_of(arena_.right(f));
        emit(a, j, visited, out);
        emit(b, j, visited, out);
        step.premises = {seq_text(a, j), seq_text(b, j)};
        break;
      }
      case kContrapose: {
        int pi = p.via / size(), pj = p.via % size();
        emit(pi, pj, visited, out);
        step.premises = {seq_text(pi, pj)};
        break;
      }
      default: break; // axiom instances
    }
    out.push_back(std::move(step));
  }

  FormulaArena& arena_;
  std::vector<FormulaId> ids_;
  std::map<FormulaId, int> uindex_;
  std::vector<DynBits> rows_, cols_;
  std::vector<Prov> prov_;
  bool truncated_ = false;
};

} // namespace detail

// ---------------------------------------------------------------------------
// Countermodel search: smallest frame size first, frames in enumeration
// order, valuations in canonical sweep order. Deterministic first find.

inline std::optional<Countermodel> countermodel(FormulaArena& arena, Sequent s,
                                                int max_size,
                                                std::uint64_t valuation_budget = 1000000,
                                                int workers = 0, int cap = 4) {
  if (arena.has_modal(s.lhs) || arena.has_modal(s.rhs))
    throw ValidationError("ModalFormulaOnPlainFrame", {},
                          "countermodel search covers plain frames only");
  for (int n = 1; n <= max_size; ++n) {
    auto frames = enumerate_fundamental_frames(n, false, cap);
    std::vector<std::optional<Valuation>> hits(frames.size());
    const std::size_t block = 512;
    for (std::size_t base = 0; base < frames.size(); base += block) {
      std::size_t limit = std::min(frames.size(), base + block);
      parallel_for(limit - base, workers, [&](std::size_t k) {
        const auto& fr = frames[base + k];
        SetAlgebra alg = positive_algebra(fr.frame);
        EvalContext ctx{arena, fr.frame, alg, nullptr};
        auto res = frame_consequence(ctx, s, valuation_budget);
        if (!res.valid) hits[base + k] = res.counterexample;
      });
      for (std::size_t i = base; i < limit; ++i)
        if (hits[i]) {
          Countermodel cm{frames[i], positive_algebra(frames[i].frame), *hits[i], n};
          return cm;
        }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

inline DeriveResult derive(FormulaArena& arena, Sequent s,
                           const DeriveBudget& budget = {}) {
  DeriveResult out;
  detail::Saturation sat(arena, s, budget);
  out.truncated_universe = sat.truncated();
  if (sat.derivable(s.lhs, s.rhs)) {
    out.status = DeriveResult::Status::Proved;
    out.trace = sat.trace(s.lhs, s.rhs);
    return out;
  }
  if (!arena.has_modal(s.lhs) && !arena.has_modal(s.rhs)) {
    auto cm = countermodel(arena, s, budget.max_frame_size, budget.valuation_budget,
                           budget.workers, std::max(budget.max_frame_size, 4));
    if (cm) {
      out.status = DeriveResult::Status::Refuted;
      out.counter = std::move(cm);
      return out;
    }
  }
  out.status = DeriveResult::Status::Unknown;
  return out;
}

} // namespace fundlog
