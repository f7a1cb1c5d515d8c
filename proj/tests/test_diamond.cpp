#include <doctest.h>

#include <algorithm>
#include <random>

#include "hodge/blocks.hpp"
#include "hodge/diamond.hpp"
#include "hodge/error.hpp"
#include "test_support.hpp"

using namespace hodge;
using hodge::test::from_rows;

namespace {

HodgeDiamond e_times_e() { return from_rows(2, {{1}, {2, 2}, {1, 4, 1}, {2, 2}, {1}}); }

}  // namespace

TEST_CASE("validate accepts standard diamonds") {
  CHECK(validate(proj_space_diamond(2), true).empty());
  CHECK(validate(e_times_e(), true).empty());
  CHECK(validate(HodgeDiamond::point(), true).empty());
}

TEST_CASE("validate reports each violated constraint") {
  auto d = proj_space_diamond(2);
  d.at(0, 0) = 2;
  // h00 = 2 also breaks h00 = h22 and Lefschetz h00 <= h11.
  auto v = validate(d, true);
  CHECK(std::count(v.begin(), v.end(), "h00") == 1);
  CHECK(std::find(v.begin(), v.end(), "symmetry 0 0") != v.end());
  CHECK(std::find(v.begin(), v.end(), "lefschetz 0 0") != v.end());

  auto points = HodgeDiamond(0);
  points.at(0, 0) = 3;
  CHECK(validate(points, false).empty());
  CHECK(validate(points, true) == std::vector<std::string>{"h00"});

  auto neg = proj_space_diamond(2);
  neg.at(1, 0) = -1;
  neg.at(0, 1) = -1;
  neg.at(2, 1) = -1;
  neg.at(1, 2) = -1;
  v = validate(neg, true);
  CHECK(std::find(v.begin(), v.end(), "negative 1 0") != v.end());
  CHECK(std::find(v.begin(), v.end(), "symmetry 1 0") == v.end());

  auto asym = proj_space_diamond(2);
  asym.at(1, 0) = 1;
  v = validate(asym, true);
  CHECK(std::find(v.begin(), v.end(), "symmetry 1 0") != v.end());
}

TEST_CASE("validate with P^2 h00 = 2 contains h00") {
  auto d = proj_space_diamond(2);
  d.at(0, 0) = 2;
  d.at(2, 2) = 2;
  d.at(1, 1) = 2;
  CHECK(validate(d, true) == std::vector<std::string>{"h00"});
  CHECK(validate(d, false).empty());
}

TEST_CASE("kunneth") {
  const auto e = curve_diamond(1);
  CHECK(kunneth(e, e) == e_times_e());
  CHECK(kunneth(e_times_e(), HodgeDiamond::point()) == e_times_e());

  const auto p1p1 = kunneth(proj_space_diamond(1), proj_space_diamond(1));
  CHECK(p1p1 == from_rows(2, {{1}, {0, 0}, {0, 2, 0}, {0, 0}, {1}}));
  CHECK(p1p1 != proj_space_diamond(2));
}

TEST_CASE("kunneth is commutative and associative") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = test::random_variety(rng, 3);
    const auto b = test::random_variety(rng, 3);
    const auto c = test::random_variety(rng, 2);
    CHECK(kunneth(a, b) == kunneth(b, a));
    CHECK(kunneth(kunneth(a, b), c) == kunneth(a, kunneth(b, c)));
    CHECK(validate(kunneth(a, b), true).empty());
  }
}

TEST_CASE("blow_up") {
  const auto x = e_times_e();
  CHECK(blow_up(x, curve_diamond(3), 1) == x);

  auto expected = x;
  expected.at(1, 1) += 1;
  CHECK(blow_up(x, HodgeDiamond::point(), 2) == expected);

  const auto p3 = proj_space_diamond(3);
  const auto b = blow_up(p3, curve_diamond(1), 2);
  auto want = p3;
  want.at(1, 1) = 2;
  want.at(2, 2) = 2;
  want.at(2, 1) = 1;
  want.at(1, 2) = 1;
  CHECK(b == want);
  CHECK(validate(b, true).empty());

  CHECK_THROWS_AS(blow_up(p3, curve_diamond(1), 1), DimensionMismatch);
  CHECK_THROWS_AS(blow_up(p3, HodgeDiamond::point(), 4), DimensionMismatch);
  CHECK_THROWS_AS(blow_up(p3, HodgeDiamond(3), 0), DimensionMismatch);
}

TEST_CASE("blow_up delta depends only on center and codimension") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto x = test::random_variety(rng, 4);
    const auto y = test::random_variety(rng, 4);
    if (x.dim() != y.dim() || x.dim() < 2) continue;
    const int n = x.dim();
    const auto center = proj_space_diamond(n - 2);
    CHECK(blow_up(x, center, 2) - x == blow_up(y, center, 2) - y);
    CHECK(validate(blow_up(x, center, 2), true).empty());
  }
}

TEST_CASE("primitive numbers") {
  CHECK(primitive(proj_space_diamond(2)).at(1, 1) == 0);
  CHECK(primitive(e_times_e()).at(1, 1) == 3);
  CHECK(primitive(e_times_e()).at(1, 0) == 2);
  CHECK_THROWS_AS(primitive(e_times_e()).at(2, 1), OutOfRange);
}

TEST_CASE("primitive then reconstruct is the identity on the quarter") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto d = test::random_variety(rng, 5);
    const auto l = primitive(d);
    for (const auto& idx : quarter_indices(d.dim())) {
      CHECK(reconstruct(l, d, idx.p, idx.q) == d.at(idx.p, idx.q));
    }
  }
}

TEST_CASE("inner_order") {
  using V = std::vector<InnerIndex>;
  CHECK(inner_order(1).indices.empty());
  CHECK(inner_order(2).indices == V{{1, 1}});
  CHECK(inner_order(3).indices == V{{1, 1}, {1, 2}});
  CHECK(inner_order(4).indices == V{{1, 1}, {1, 2}, {2, 2}, {1, 3}});
}

TEST_CASE("inner_order is the full index set, strictly sorted") {
  for (int n = 1; n <= 12; ++n) {
    std::size_t brute = 0;
    for (int p = 1; p <= n - 1; ++p)
      for (int q = p; q <= n - 1; ++q)
        if (p + q <= n) ++brute;
    const auto order = inner_order(n).indices;
    CHECK(order.size() == brute);
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
      CHECK(precedes(order[i], order[i + 1]));
      CHECK_FALSE(precedes(order[i + 1], order[i]));
    }
    for (const auto& idx : order) CHECK(in_inner_set(n, idx));
  }
}

TEST_CASE("canonical_quarter") {
  CHECK(canonical_quarter(2, 1, 0) == QuarterIndex{0, 1});
  CHECK(canonical_quarter(2, 2, 2) == QuarterIndex{0, 0});
  CHECK(canonical_quarter(3, 2, 1) == QuarterIndex{1, 2});
  CHECK(canonical_quarter(3, 3, 1) == QuarterIndex{0, 2});
  CHECK_THROWS_AS(canonical_quarter(2, 3, 0), OutOfRange);
  for (int n = 1; n <= 6; ++n) {
    for (int p = 0; p <= n; ++p)
      for (int q = 0; q <= n; ++q) {
        const auto c = canonical_quarter(n, p, q);
        CHECK(c.p <= c.q);
        CHECK(c.p + c.q <= n);
      }
  }
}
