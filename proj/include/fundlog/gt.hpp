// Desk-scale closure checking for axiomatically defined frame classes:
// within a finite universe of fundamental frames, the models of a formula
// set must be closed under subframes, dense images and coproducts, and
// must reflect filter extensions whenever the extension fits the budget.
#pragma once

#include "fundlog/constructions.hpp"
#include "fundlog/core.hpp"
#include "fundlog/duality.hpp"
#include "fundlog/formula.hpp"
#include "fundlog/morphism.hpp"
#include "fundlog/prover.hpp"
#include "fundlog/semantics.hpp"

namespace fundlog {

struct FrameClassSpec {
  std::vector<FormulaId> axioms;
  std::vector<FrameWithAlgebra> universe;
  std::uint64_t valuation_budget = 1000000;
  std::size_t map_cap = 100000;
  // hand-picked class instead of the models of the axioms (for probing
  // non-axiomatic classes; the extension check then uses universe indices)
  std::optional<std::vector<int>> explicit_models;
};

struct GtCheck {
  std::string name;
  bool checked = true; // false: budget kept this instance out of reach
  bool pass = true;
  long instances = 0;
  std::vector<std::string> witnesses;
  explicit GtCheck(std::string n) : name(std::move(n)) {}
};

struct GtReport {
  std::vector<int> model_indices;
  GtCheck subframes{"subframes"};
  GtCheck dense_images{"dense-images"};
  GtCheck coproducts{"coproducts"};
  GtCheck filter_extensions{"filter-extensions"};
  bool all_pass() const {
    return subframes.pass && dense_images.pass && coproducts.pass &&
           filter_extensions.pass;
  }
};

// Relations between universe members needed by the closure checks; the
// map searches are exhaustive over all tables.
struct GtUniverseCache {
  std::vector<std::vector<bool>> has_embedding;   // [x][y]: embedding x -> y
  std::vector<std::vector<bool>> has_dense_onto;  // [y][x]: dense map y -> x
  std::vector<std::vector<int>> coproduct_index;  // [x][y] or -1 if too big

  GtUniverseCache(const std::vector<FrameWithAlgebra>& u, std::size_t map_cap) {
    std::size_t n = u.size();
    has_embedding.assign(n, std::vector<bool>(n, false));
    has_dense_onto.assign(n, std::vector<bool>(n, false));
    coproduct_index.assign(n, std::vector<int>(n, -1));
    int max_points = 0;
    for (const auto& f : u) max_points = std::max(max_points, f.frame.n());
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        for (auto& m : enumerate_f_morphisms(u[x].frame, u[y].frame, map_cap)) {
          if (!has_embedding[x][y] && is_embedding(m).ok) has_embedding[x][y] = true;
          if (!has_dense_onto[x][y] && is_dense(m).ok) has_dense_onto[x][y] = true;
          if (has_embedding[x][y] && has_dense_onto[x][y]) break;
        }
        if (u[x].frame.n() + u[y].frame.n() <= max_points) {
          FundamentalFrame sum = coproduct({u[x].frame, u[y].frame});
          for (std::size_t k = 0; k < n; ++k)
            if (u[k].frame.frame.rel == sum.frame.rel) {
              coproduct_index[x][y] = static_cast<int>(k);
              break;
            }
        }
      }
  }
};

inline GtReport check_gt_closure(const FormulaArena& arena, const FrameClassSpec& spec,
                                 const GtUniverseCache* cache = nullptr) {
  GtReport r;
  const auto& u = spec.universe;
  std::optional<GtUniverseCache> local;
  if (!cache) {
    local.emplace(u, spec.map_cap);
    cache = &*local;
  }

  std::vector<bool> in_k(u.size(), false);
  r.model_indices = spec.explicit_models
                        ? *spec.explicit_models
                        : mod_of(arena, spec.axioms, u, spec.valuation_budget);
  for (int i : r.model_indices) in_k[i] = true;

  for (std::size_t x = 0; x < u.size(); ++x)
    for (std::size_t y = 0; y < u.size(); ++y) {
      if (!in_k[y]) continue;
      if (cache->has_embedding[x][y]) {
        ++r.subframes.instances;
        if (!in_k[x]) {
          r.subframes.pass = false;
          r.subframes.witnesses.push_back("subframe " + std::to_string(x) +
                                          " of model " + std::to_string(y) +
                                          " is not a model");
        }
      }
      if (cache->has_dense_onto[y][x]) {
        ++r.dense_images.instances;
        if (!in_k[x]) {
          r.dense_images.pass = false;
          r.dense_images.witnesses.push_back("dense image " + std::to_string(x) +
                                             " of model " + std::to_string(y) +
                                             " is not a model");
        }
      }
    }

  for (int x : r.model_indices)
    for (int y : r.model_indices) {
      int k = cache->coproduct_index[x][y];
      if (k < 0) continue;
      ++r.coproducts.instances;
      if (!in_k[k]) {
        r.coproducts.pass = false;
        r.coproducts.witnesses.push_back("coproduct of models " + std::to_string(x) +
                                         "," + std::to_string(y) +
                                         " is not a model");
      }
    }

  for (std::size_t x = 0; x < u.size(); ++x) {
    bool ext_models = false;
    bool checkable = true;
    try {
      CanonicalFrame ext = filter_extension(u[x].frame);
      FrameWithAlgebra ew(ext.frame);
      EvalContext ctx{arena, ew.frame.frame, ew.algebra, nullptr};
      ext_models = true;
      for (FormulaId f : spec.axioms)
        if (!formula_valid(ctx, f, spec.valuation_budget)) {
          ext_models = false;
          break;
        }
    } catch (const CapExceeded&) {
      checkable = false;
    } catch (const BudgetExceeded&) {
      checkable = false;
    }
    if (!checkable) {
      r.filter_extensions.checked = false;
      r.filter_extensions.witnesses.push_back(
          "extension of frame " + std::to_string(x) + " not checkable within bounds");
      continue;
    }
    if (ext_models) {
      ++r.filter_extensions.instances;
      if (!in_k[x]) {
        r.filter_extensions.pass = false;
        r.filter_extensions.witnesses.push_back(
            "frame " + std::to_string(x) +
            " has a model filter extension but is not a model");
      }
    }
  }
  return r;
}

} // namespace fundlog
