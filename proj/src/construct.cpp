#include "hodge/construct.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "hodge/blocks.hpp"
#include "hodge/error.hpp"

namespace hodge {

ResidueTarget::ResidueTarget(int n, std::int64_t m)
    : n_(n), m_(m), quarter_(quarter_indices(n)), residues_(quarter_.size(), 0) {
  if (n < 1) throw OutOfRange("target dimension must be at least 1");
  if (m < 2) throw OutOfRange("modulus must be at least 2");
  residues_[0] = residue(std::int64_t{1}, m);
}

std::size_t ResidueTarget::slot(int p, int q) const {
  const QuarterIndex idx = canonical_quarter(n_, p, q);
  auto it = std::lower_bound(quarter_.begin(), quarter_.end(), idx);
  return static_cast<std::size_t>(it - quarter_.begin());
}

std::int64_t ResidueTarget::get(int p, int q) const { return residues_[slot(p, q)]; }

void ResidueTarget::set(int p, int q, std::int64_t value) {
  residues_[slot(p, q)] = residue(value, m_);
}

std::vector<QuarterIndex> congruence_mismatches(const HodgeDiamond& d, const ResidueTarget& target) {
  if (d.dim() != target.dim()) throw DimensionMismatch("diamond and target dimensions differ");
  std::vector<QuarterIndex> bad;
  for (const auto& idx : quarter_indices(d.dim())) {
    if (residue(d.at(idx.p, idx.q), target.modulus()) != target.get(idx.p, idx.q)) {
      bad.push_back(idx);
    }
  }
  return bad;
}

OuterPlan plan_outer(int n, std::int64_t m, const std::vector<std::int64_t>& outer) {
  if (n < 1 || m < 2) throw OutOfRange("plan_outer needs n >= 1 and m >= 2");
  if (outer.size() != static_cast<std::size_t>(n)) {
    throw DimensionMismatch("plan_outer needs h^{p,0} for p = 1..n");
  }
  OuterPlan plan;
  plan.n = n;
  plan.m = m;
  plan.targets.resize(static_cast<std::size_t>(n + 1));
  plan.k.resize(static_cast<std::size_t>(n + 1));
  for (auto h : outer) plan.targets[static_cast<std::size_t>(n)].push_back(residue(h, m));

  for (int level = n; level >= 2; --level) {
    const auto& h = plan.targets[static_cast<std::size_t>(level)];
    std::vector<std::int64_t> k;
    std::int64_t before_prev = 0;  // k^{p-2,0}
    std::int64_t prev = 1;         // k^{p-1,0}
    for (int p = 1; p <= level - 1; ++p) {
      const std::int64_t cur = h[static_cast<std::size_t>(p - 1)] - 2 * prev - before_prev;
      k.push_back(cur);
      before_prev = prev;
      prev = cur;
    }
    auto& below = plan.targets[static_cast<std::size_t>(level - 1)];
    for (auto v : k) below.push_back(residue(v, m));
    plan.k[static_cast<std::size_t>(level - 1)] = std::move(k);
  }

  const std::int64_t g = plan.targets[1][0];
  std::int64_t d = 2 * g + 1;
  while (residue(d + g, m) != 0) ++d;
  plan.curve = {g, d};

  std::int64_t elliptic_degree = 3;
  while (residue(elliptic_degree, m) != residue(std::int64_t{1}, m)) ++elliptic_degree;
  for (int level = 2; level <= n; ++level) {
    const auto& h = plan.targets[static_cast<std::size_t>(level)];
    std::int64_t e = 1;
    for (int p = 1; p <= level; ++p) e += (p % 2 == 0 ? 1 : -1) * h[static_cast<std::size_t>(p - 1)];
    e = residue(e, m);
    if (e == 0) e = m;
    plan.tower.push_back({elliptic_degree, e});
  }
  return plan;
}

std::shared_ptr<const LevelState> LevelState::curve(std::int64_t genus, std::int64_t degree) {
  std::shared_ptr<LevelState> s(new LevelState());
  s->n_ = 1;
  s->curve_ = {genus, degree};
  s->diamond_ = curve_diamond(genus);
  return s;
}

std::shared_ptr<const LevelState> LevelState::extend(std::shared_ptr<const LevelState> previous,
                                                     std::int64_t m, TowerStep step) {
  std::shared_ptr<LevelState> s(new LevelState());
  const int n = previous->dim() + 1;
  s->n_ = n;
  s->m_ = m;
  s->tower_ = step;
  s->previous_ = std::move(previous);

  // Lefschetz below the middle, Serre duality above it, chi for the middle.
  const HodgeDiamond elliptic = elliptic_curve_diamond();
  const HodgeDiamond ambient = kunneth(kunneth(s->previous_->diamond(), elliptic), elliptic);
  HodgeDiamond known(n);
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= n; ++q) {
      if (p + q < n) known.at(p, q) = ambient.at(p, q);
    }
  }
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= n; ++q) {
      if (p + q > n) known.at(p, q) = known.at(n - p, n - q);
    }
  }
  std::vector<BigInt> chis;
  for (int p = 0; p <= n; ++p) chis.push_back(s->chi_twisted(p, 0, 0));
  s->diamond_ = fill_middle_row(std::move(known), chis);
  return s;
}

BigInt LevelState::chi_ambient(int a, const TwistIndex& twist) const {
  // P = L_prev (x) L^{m-1} (x) L^e and Q = L_prev (x) L (x) L on X_prev x E x E.
  const std::int64_t i = twist[0];
  const std::int64_t j = twist[1];
  const BigInt elliptic_degree = tower_.elliptic_degree;
  const LevelState* prev = previous_.get();
  const std::array<ChiFactor, 3> factors{
      ChiFactor{prev->dim(), [prev](int b, std::int64_t k) { return prev->chi_line(b, k); }},
      ChiFactor{1, [&](int b, std::int64_t t) { return chi_elliptic(elliptic_degree, b, t); }},
      ChiFactor{1, [&](int b, std::int64_t t) { return chi_elliptic(elliptic_degree, b, t); }},
  };
  const std::array<std::int64_t, 3> twists{i + j, i * (m_ - 1) + j, i * tower_.e + j};
  return chi_product(factors, a, twists);
}

BigInt LevelState::chi_twisted(int a, std::int64_t i, std::int64_t j) const {
  if (!previous_) throw OutOfRange("the curve level has no (P, Q) twist lattice");
  if (a < 0 || a > n_) return 0;
  const AmbientChi ambient{n_ + 1, [this](int b, const TwistIndex& tw) { return chi_ambient(b, tw); }};
  return chi_hypersurface(ambient, TwistIndex{1, 0}, a, TwistIndex{i, j}, memo_);
}

BigInt LevelState::chi_line(int a, std::int64_t k) const {
  if (a < 0 || a > n_) return 0;
  if (!previous_) return chi_curve(curve_.genus, curve_.degree, a, k);
  return chi_twisted(a, 0, k);
}

std::shared_ptr<const LevelState> build_tower(const OuterPlan& plan) {
  auto level = LevelState::curve(plan.curve.genus, plan.curve.degree);
  for (const auto& step : plan.tower) level = LevelState::extend(level, plan.m, step);
  return level;
}

IncrResult apply_incr(const HodgeDiamond& x, InnerIndex rs, std::int64_t m) {
  const int n = x.dim();
  if (!in_inner_set(n, rs)) {
    throw IndexOutOfI("(" + std::to_string(rs.p) + "," + std::to_string(rs.q) +
                      ") is not an inner index for dimension " + std::to_string(n));
  }
  const int r = rs.p;
  const int s = rs.q;
  IncrResult out{x, {}};
  for (std::int64_t i = 0; i < m; ++i) {
    out.steps.emplace_back(BlowupPointStep{});
    out.steps.emplace_back(BlowupProjStep{s - r + 1});
  }
  out.steps.emplace_back(BlowupBundleStep{r, s, s - r + 2});
  for (std::int64_t i = 1; i < m; ++i) out.steps.emplace_back(BlowupBundleStep{r, s, 1});

  // Each center diamond depends only on the step, so evaluate every
  // distinct step once.
  std::vector<std::pair<RecipeStep, HodgeDiamond>> deltas;
  const HodgeDiamond zero(n);
  for (const auto& step : out.steps) {
    auto it = std::find_if(deltas.begin(), deltas.end(), [&](const auto& e) { return e.first == step; });
    if (it == deltas.end()) {
      deltas.emplace_back(step, apply_blowup_step(zero, step));
      it = std::prev(deltas.end());
    }
    out.diamond += it->second;
  }
  return out;
}

InnerResult schedule_inner(const HodgeDiamond& start, const ResidueTarget& target) {
  if (start.dim() != target.dim()) throw DimensionMismatch("state and target dimensions differ");
  const std::int64_t m = target.modulus();
  InnerResult out{{}, start, {}};
  auto order = inner_order(start.dim()).indices;
  std::reverse(order.begin(), order.end());
  for (const auto& idx : order) {
    const BigInt current = primitive(out.diamond).at(idx.p, idx.q);
    const std::int64_t wanted = target.get(idx.p, idx.q) - target.get(idx.p - 1, idx.q - 1);
    const std::int64_t times = residue(BigInt(wanted) - current, m);
    out.schedule.entries.push_back({idx, times});
    for (std::int64_t t = 0; t < times; ++t) {
      auto step = apply_incr(out.diamond, idx, m);
      out.diamond = std::move(step.diamond);
      out.steps.insert(out.steps.end(), step.steps.begin(), step.steps.end());
    }
  }
  return out;
}

ConstructResult construct(const ResidueTarget& target) {
  const int n = target.dim();
  std::vector<std::int64_t> outer;
  for (int p = 1; p <= n; ++p) outer.push_back(target.get(p, 0));

  ConstructResult out;
  out.plan = plan_outer(n, target.modulus(), outer);
  auto top = build_tower(out.plan);

  out.recipe.n = n;
  out.recipe.m = target.modulus();
  out.recipe.steps.emplace_back(out.plan.curve);
  for (const auto& t : out.plan.tower) out.recipe.steps.emplace_back(t);

  auto inner = schedule_inner(top->diamond(), target);
  out.schedule = std::move(inner.schedule);
  out.diamond = std::move(inner.diamond);
  out.recipe.steps.insert(out.recipe.steps.end(), inner.steps.begin(), inner.steps.end());
  return out;
}

}  // namespace hodge
