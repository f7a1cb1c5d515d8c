#include "hodge/recipe.hpp"

#include <string>

#include "hodge/blocks.hpp"
#include "hodge/construct.hpp"
#include "hodge/error.hpp"

namespace hodge {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

bool is_blowup(const RecipeStep& step) {
  return std::holds_alternative<BlowupPointStep>(step) ||
         std::holds_alternative<BlowupProjStep>(step) ||
         std::holds_alternative<BlowupBundleStep>(step);
}

HodgeDiamond apply_blowup_step(const HodgeDiamond& x, const RecipeStep& step) {
  const int n = x.dim();
  return std::visit(
      overloaded{
          [&](const BlowupPointStep&) { return blow_up(x, HodgeDiamond::point(), n); },
          [&](const BlowupProjStep& b) {
            if (b.s < 0 || b.s > n - 1) {
              throw MalformedRecipe("blowup-proj " + std::to_string(b.s) +
                                    " needs 0 <= s <= " + std::to_string(n - 1));
            }
            return blow_up(x, proj_space_diamond(b.s), n - b.s);
          },
          [&](const BlowupBundleStep& b) {
            if (b.r < 1 || b.r > b.s || b.s > n || b.d < 1) {
              throw MalformedRecipe("blowup-bundle parameters out of range for dimension " +
                                    std::to_string(n));
            }
            return blow_up(x, bundle_center_diamond({b.r, b.s, b.d}), n - b.s + 1);
          },
          [](const CurveStep&) -> HodgeDiamond {
            throw MalformedRecipe("curve step is not a blow-up");
          },
          [](const TowerStep&) -> HodgeDiamond {
            throw MalformedRecipe("tower step is not a blow-up");
          },
      },
      step);
}

void check_recipe(const Recipe& recipe) {
  if (recipe.n < 1) throw MalformedRecipe("dimension must be at least 1");
  if (recipe.m < 2) throw MalformedRecipe("modulus must be at least 2");
  const auto& steps = recipe.steps;
  if (steps.empty() || !std::holds_alternative<CurveStep>(steps.front())) {
    throw MalformedRecipe("a recipe starts with exactly one curve step");
  }
  const auto& curve = std::get<CurveStep>(steps.front());
  if (curve.genus < 0 || curve.degree < 1) throw MalformedRecipe("curve needs g >= 0, d >= 1");

  std::size_t i = 1;
  int levels = 1;
  for (; i < steps.size() && std::holds_alternative<TowerStep>(steps[i]); ++i) {
    const auto& t = std::get<TowerStep>(steps[i]);
    if (t.elliptic_degree < 3 || t.e < 1) {
      throw MalformedRecipe("tower step " + std::to_string(i) + " needs d_E >= 3 and e >= 1");
    }
    ++levels;
  }
  if (levels != recipe.n) {
    throw MalformedRecipe("recipe builds dimension " + std::to_string(levels) + " but declares " +
                          std::to_string(recipe.n));
  }
  for (; i < steps.size(); ++i) {
    if (!is_blowup(steps[i])) {
      throw MalformedRecipe("step " + std::to_string(i) + ": only blow-ups may follow the tower");
    }
  }
}

HodgeDiamond eval_recipe(const Recipe& recipe) {
  check_recipe(recipe);
  const auto& curve = std::get<CurveStep>(recipe.steps.front());
  auto level = LevelState::curve(curve.genus, curve.degree);
  std::size_t i = 1;
  for (; i < recipe.steps.size() && std::holds_alternative<TowerStep>(recipe.steps[i]); ++i) {
    level = LevelState::extend(level, recipe.m, std::get<TowerStep>(recipe.steps[i]));
  }
  HodgeDiamond x = level->diamond();
  for (; i < recipe.steps.size(); ++i) x = apply_blowup_step(x, recipe.steps[i]);
  return x;
}

}  // namespace hodge
