// Frame semantics: valuations assign positive-algebra members to letters;
// evaluation interprets negation, meet and closure-join over the frame,
// routing box/diamond to the accessibility operators when present.
// Sequent validity sweeps every assignment within a budget.
#pragma once

#include <optional>

#include "fundlog/core.hpp"
#include "fundlog/formula.hpp"
#include "fundlog/frame.hpp"
#include "fundlog/modal.hpp"

namespace fundlog {

struct Valuation {
  // letter id -> member index into the algebra
  std::map<int, int> assign;
};

struct EvalContext {
  const FormulaArena& arena;
  const RelFrame& frame;
  const SetAlgebra& algebra;
  const ModalFrame* modal = nullptr; // required for box/dia formulas
};

inline SmallSet eval(const EvalContext& ctx, FormulaId f, const Valuation& v) {
  const RelFrame& fr = ctx.frame;
  switch (ctx.arena.kind(f)) {
    case FKind::Bot: return closure(fr, SmallSet{});
    case FKind::Top: return fr.universe();
    case FKind::Var: {
      auto it = v.assign.find(ctx.arena.letter(f));
      if (it == v.assign.end())
        throw ValidationError("UnboundLetter", {ctx.arena.letter(f)},
                              "letter " + ctx.arena.letter_name(ctx.arena.letter(f)) +
                                  " has no assignment");
      return ctx.algebra.at(it->second);
    }
    case FKind::Neg: return neg_pos(fr, eval(ctx, ctx.arena.left(f), v));
    case FKind::And:
      return eval(ctx, ctx.arena.left(f), v) & eval(ctx, ctx.arena.right(f), v);
    case FKind::Or:
      return closure(fr, eval(ctx, ctx.arena.left(f), v) |
                             eval(ctx, ctx.arena.right(f), v));
    case FKind::Box:
    case FKind::Dia: {
      if (!ctx.modal)
        throw ValidationError("ModalFormulaOnPlainFrame", {},
                              "modal operator needs an accessibility relation");
      SmallSet a = eval(ctx, ctx.arena.left(f), v);
      return ctx.arena.kind(f) == FKind::Box ? box_op(*ctx.modal, a)
                                             : diamond_op(*ctx.modal, a);
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Validity: lhs evaluates inside rhs under every assignment of algebra
// members to the letters of the sequent.

struct ConsequenceResult {
  bool valid = true;
  Valuation counterexample; // populated when invalid
};

inline ConsequenceResult frame_consequence(const EvalContext& ctx, Sequent s,
                                           std::uint64_t budget = 1000000) {
  std::vector<int> letters = ctx.arena.letters_of(s.lhs);
  for (int l : ctx.arena.letters_of(s.rhs)) letters.push_back(l);
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());

  double combos = 1;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    combos *= ctx.algebra.size();
    if (combos > static_cast<double>(budget))
      throw BudgetExceeded("valuation sweep needs more than " +
                           std::to_string(budget) + " assignments");
  }

  std::vector<int> odo(letters.size(), 0);
  while (true) {
    Valuation v;
    for (std::size_t i = 0; i < letters.size(); ++i) v.assign[letters[i]] = odo[i];
    if (!eval(ctx, s.lhs, v).subset_of(eval(ctx, s.rhs, v)))
      return {false, v};
    int k = static_cast<int>(letters.size()) - 1;
    while (k >= 0 && odo[k] == ctx.algebra.size() - 1) odo[k--] = 0;
    if (k < 0) break;
    ++odo[k];
  }
  return {true, {}};
}

// A formula is valid on a frame when it is entailed by the top constant.
inline bool formula_valid(const EvalContext& ctx, FormulaId f,
                          std::uint64_t budget = 1000000) {
  return frame_consequence(ctx, Sequent{ctx.arena.top(), f}, budget).valid;
}

// ---------------------------------------------------------------------------
// The logic/models Galois connection at desk scale.

struct FrameWithAlgebra {
  FundamentalFrame frame;
  SetAlgebra algebra;

  explicit FrameWithAlgebra(FundamentalFrame f)
      : frame(std::move(f)), algebra(positive_algebra(frame.frame)) {}
};

inline std::vector<FormulaId> log_of(const FormulaArena& arena,
                                     const std::vector<FrameWithAlgebra>& frames,
                                     const std::vector<FormulaId>& pool,
                                     std::uint64_t budget = 1000000) {
  std::vector<FormulaId> out;
  for (FormulaId f : pool) {
    bool everywhere = true;
    for (const auto& fr : frames) {
      EvalContext ctx{arena, fr.frame.frame, fr.algebra, nullptr};
      if (!formula_valid(ctx, f, budget)) {
        everywhere = false;
        break;
      }
    }
    if (everywhere) out.push_back(f);
  }
  return out;
}

inline std::vector<int> mod_of(const FormulaArena& arena,
                               const std::vector<FormulaId>& axioms,
                               const std::vector<FrameWithAlgebra>& universe,
                               std::uint64_t budget = 1000000) {
  std::vector<int> out;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    bool all = true;
    EvalContext ctx{arena, universe[i].frame.frame, universe[i].algebra, nullptr};
    for (FormulaId f : axioms)
      if (!formula_valid(ctx, f, budget)) {
        all = false;
        break;
      }
    if (all) out.push_back(static_cast<int>(i));
  }
  return out;
}

} // namespace fundlog
