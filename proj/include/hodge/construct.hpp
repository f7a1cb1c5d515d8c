#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "hodge/chi.hpp"
#include "hodge/diamond.hpp"
#include "hodge/recipe.hpp"

namespace hodge {

/// Residues mod m for the quarter 0 <= p <= q, p+q <= n. The (0,0) residue is
/// always 1 mod m.
class ResidueTarget {
 public:
  ResidueTarget(int n, std::int64_t m);

  int dim() const { return n_; }
  std::int64_t modulus() const { return m_; }

  /// Any (p,q) in the full diamond; read through the symmetries.
  std::int64_t get(int p, int q) const;
  /// Stores value mod m at the quarter representative of (p,q).
  void set(int p, int q, std::int64_t value);

  bool operator==(const ResidueTarget&) const = default;

 private:
  std::size_t slot(int p, int q) const;

  int n_;
  std::int64_t m_;
  std::vector<QuarterIndex> quarter_;
  std::vector<std::int64_t> residues_;
};

/// Quarter indices (p,q) where `d` is not congruent to the target.
std::vector<QuarterIndex> congruence_mismatches(const HodgeDiamond& d, const ResidueTarget& target);

/// Choices for the outer phase. Levels are 1-based: level 1 is the curve.
struct OuterPlan {
  int n = 1;
  std::int64_t m = 2;
  /// targets[L] holds the residues h^{p,0}, p = 1..L, wanted at level L
  /// (index p-1). targets[0] is unused.
  std::vector<std::vector<std::int64_t>> targets;
  /// k[L] for L < n holds the raw recursion values k^{p,0}, p = 1..L, derived
  /// from level L+1's targets before reduction mod m.
  std::vector<std::vector<std::int64_t>> k;
  CurveStep curve;
  /// tower[L-2] for levels L = 2..n.
  std::vector<TowerStep> tower;
};

/// Builds an OuterPlan with every free parameter minimized. `outer` holds
/// h^{1,0}..h^{n,0}.
OuterPlan plan_outer(int n, std::int64_t m, const std::vector<std::int64_t>& outer);

/// One level X_L of the tower with its very ample L_L. Holds the exact
/// diamond and a memo of chi(Omega^a (x) P^{-i} (x) Q^{-j}).
///
/// The memo makes evaluation stateful; a LevelState chain belongs to one
/// pipeline and must not be shared across threads.
class LevelState {
 public:
  static std::shared_ptr<const LevelState> curve(std::int64_t genus, std::int64_t degree);
  static std::shared_ptr<const LevelState> extend(std::shared_ptr<const LevelState> previous,
                                                  std::int64_t m, TowerStep step);

  int dim() const { return n_; }
  const HodgeDiamond& diamond() const { return diamond_; }
  const LevelState* previous() const { return previous_.get(); }

  /// chi(X, Omega^a (x) L^{-k}) for this level's very ample L.
  BigInt chi_line(int a, std::int64_t k) const;
  /// chi(O_X).
  BigInt chi_structure() const { return chi_line(0, 0); }
  /// chi(X, Omega^a (x) P^{-i} (x) Q^{-j}) restricted from the ambient
  /// product; only for levels >= 2.
  BigInt chi_twisted(int a, std::int64_t i, std::int64_t j) const;

  std::size_t memo_size() const { return memo_.size(); }

 private:
  LevelState() = default;
  BigInt chi_ambient(int a, const TwistIndex& twist) const;

  int n_ = 1;
  HodgeDiamond diamond_;
  std::shared_ptr<const LevelState> previous_;
  std::int64_t m_ = 0;
  CurveStep curve_;
  TowerStep tower_;
  mutable ChiTable memo_;
};

std::shared_ptr<const LevelState> build_tower(const OuterPlan& plan);

struct IncrResult {
  HodgeDiamond diamond;
  std::vector<RecipeStep> steps;
};

/// One unit increment of l^{r,s} mod m by blow-ups: m rounds of
/// [point, P^{s-r+1}] followed by one B_{s-r+2} and m-1 copies of B_1.
/// Throws IndexOutOfI unless (r,s) is in I for dim x.
IncrResult apply_incr(const HodgeDiamond& x, InnerIndex rs, std::int64_t m);

struct IncrSchedule {
  struct Entry {
    InnerIndex index;
    std::int64_t times = 0;
  };
  std::vector<Entry> entries;  // descending in the inner order
};

struct InnerResult {
  IncrSchedule schedule;
  HodgeDiamond diamond;
  std::vector<RecipeStep> steps;
};

/// Fixes primitive numbers from the top of the inner order down, recomputing
/// each repeat count from the exact current diamond.
InnerResult schedule_inner(const HodgeDiamond& start, const ResidueTarget& target);

struct ConstructResult {
  OuterPlan plan;
  IncrSchedule schedule;
  Recipe recipe;
  HodgeDiamond diamond;
};

ConstructResult construct(const ResidueTarget& target);

}  // namespace hodge
