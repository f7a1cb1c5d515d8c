#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "hodge/diamond.hpp"

namespace hodge {

/// Level-1 curve of genus g with a line bundle of degree d.
struct CurveStep {
  std::int64_t genus = 0;
  std::int64_t degree = 1;
  bool operator==(const CurveStep&) const = default;
};

/// X_k inside X_{k-1} x E x E cut out by L_{k-1} (x) L^{m-1} (x) L^e, where
/// deg L = elliptic_degree on E.
struct TowerStep {
  std::int64_t elliptic_degree = 3;
  std::int64_t e = 1;
  bool operator==(const TowerStep&) const = default;
};

struct BlowupPointStep {
  bool operator==(const BlowupPointStep&) const = default;
};

/// Blow-up along a linear P^s inside an exceptional P^{n-1}.
struct BlowupProjStep {
  int s = 0;
  bool operator==(const BlowupProjStep&) const = default;
};

/// Blow-up along the P^{r-1}-bundle over Y_d in P^{s-r+1}.
struct BlowupBundleStep {
  int r = 1;
  int s = 1;
  std::int64_t d = 1;
  bool operator==(const BlowupBundleStep&) const = default;
};

using RecipeStep =
    std::variant<CurveStep, TowerStep, BlowupPointStep, BlowupProjStep, BlowupBundleStep>;

struct Recipe {
  int n = 1;
  std::int64_t m = 2;
  std::vector<RecipeStep> steps;
  bool operator==(const Recipe&) const = default;
};

bool is_blowup(const RecipeStep& step);

/// Applies one blow-up step to an n-dimensional diamond. Throws
/// MalformedRecipe for tower steps or parameters that do not fit dimension n.
HodgeDiamond apply_blowup_step(const HodgeDiamond& x, const RecipeStep& step);

/// Throws MalformedRecipe unless: exactly one curve, first; then n-1 tower
/// steps; then only blow-ups with parameters valid in dimension n.
void check_recipe(const Recipe& recipe);

/// Re-evaluates a recipe from scratch to its exact diamond.
HodgeDiamond eval_recipe(const Recipe& recipe);

}  // namespace hodge
