#include <doctest.h>

#include "hodge/blocks.hpp"
#include "hodge/error.hpp"
#include "oracle/hirzebruch.hpp"
#include "test_support.hpp"

using namespace hodge;
using hodge::test::from_rows;

TEST_CASE("proj_space_diamond") {
  CHECK(proj_space_diamond(0) == HodgeDiamond::point());
  CHECK(proj_space_diamond(2) == from_rows(2, {{1}, {0, 0}, {0, 1, 0}, {0, 0}, {1}}));
  CHECK(kunneth(proj_space_diamond(1), proj_space_diamond(1)).at(1, 1) == 2);
  CHECK(proj_space_diamond(2).at(1, 1) == 1);
}

TEST_CASE("hypersurface_diamond golden values") {
  CHECK(hypersurface_diamond({1, 4}) == curve_diamond(3));
  const auto k3 = hypersurface_diamond({2, 4});
  CHECK(k3 == from_rows(2, {{1}, {0, 0}, {1, 20, 1}, {0, 0}, {1}}));
  const auto quintic = hypersurface_diamond({3, 5});
  CHECK(quintic.at(3, 0) == 1);
  CHECK(quintic.at(2, 1) == 101);
  CHECK(quintic.at(1, 2) == 101);
  CHECK(quintic.at(0, 3) == 1);
  CHECK(quintic.at(1, 1) == 1);
  const auto points = hypersurface_diamond({0, 3});
  CHECK(points.dim() == 0);
  CHECK(points.at(0, 0) == 3);
  CHECK_THROWS_AS(hypersurface_diamond({1, 0}), OutOfRange);
}

TEST_CASE("hypersurface_diamond agrees with the generating-function oracle") {
  for (int N = 0; N <= 4; ++N) {
    for (int d = 1; d <= 6; ++d) {
      const auto y = hypersurface_diamond({N, d});
      const auto row = oracle::middle_row(N, d);
      for (int p = 0; p <= N; ++p) {
        INFO("N=" << N << " d=" << d << " p=" << p);
        CHECK(y.at(p, N - p) == row[static_cast<std::size_t>(p)]);
      }
    }
  }
}

TEST_CASE("hypersurface_diamond structural properties") {
  for (int N = 1; N <= 4; ++N) {
    for (int d = 1; d <= 7; ++d) {
      const auto y = hypersurface_diamond({N, d});
      CHECK(validate(y, true).empty());
      CHECK(y.at(N, 0) == binomial(BigInt(d - 1), N + 1));
      // chi(O) from the chi calculus is the alternating sum of the h^{0,q}.
      ChiTable memo;
      BigInt alt = 0;
      for (int q = 0; q <= N; ++q) alt += (q % 2 == 0) ? y.at(0, q) : BigInt(-y.at(0, q));
      CHECK(chi_hypersurface_proj({N, d}, 0, 0, memo) == alt);
    }
  }
  for (int N = 0; N <= 5; ++N) CHECK(hypersurface_diamond({N, 1}) == proj_space_diamond(N));
}

TEST_CASE("bundle_center_diamond") {
  for (long d = 1; d <= 4; ++d) {
    const auto pts = bundle_center_diamond({1, 1, d});
    CHECK(pts.dim() == 0);
    CHECK(pts.at(0, 0) == d);
  }
  CHECK(bundle_center_diamond({2, 2, 1}) == proj_space_diamond(1));
  // Y_3 in P^{s-r+1} = P^2 is a plane cubic.
  CHECK(bundle_center_diamond({1, 2, 3}) == curve_diamond(1));
  // (1,3,3): Y_3 in P^3 is a cubic surface, h11 = 7.
  const auto cubic_surface = bundle_center_diamond({1, 3, 3});
  CHECK(cubic_surface.dim() == 2);
  CHECK(cubic_surface.at(1, 1) == 7);
  CHECK(cubic_surface.at(2, 0) == 0);
  CHECK(bundle_center_diamond({2, 4, 3}).dim() == 3);
  CHECK_THROWS_AS(bundle_center_diamond({3, 2, 1}), OutOfRange);
}

TEST_CASE("formal_center") {
  const auto a = formal_center(1, 1);
  CHECK(a.z == HodgeDiamond::point());

  // Plane cubic minus P^1.
  const auto b = formal_center(1, 2);
  HodgeDiamond z(1);
  z.at(1, 0) = 1;
  z.at(0, 1) = 1;
  CHECK(b.z == z);
  CHECK(b.diamond == z);

  // Quartic surface minus P^2: the primitive K3 middle row (1, 19, 1).
  const auto k = formal_center(1, 3);
  CHECK(k.z.at(2, 0) == 1);
  CHECK(k.z.at(1, 1) == 19);
  CHECK(k.z.at(0, 0) == 0);

  const auto c = formal_center(2, 4);
  CHECK(c.z.at(2, 0) == 1);
  CHECK(c.z.at(0, 2) == 1);
  CHECK(c.diamond.dim() == 3);
}

TEST_CASE("formal_center is supported on the band") {
  for (int s = 1; s <= 6; ++s) {
    for (int r = 1; r <= s; ++r) {
      const auto fc = formal_center(r, s);
      const auto& d = fc.diamond;
      for (int p = 0; p <= d.dim(); ++p)
        for (int q = 0; q <= d.dim(); ++q) {
          INFO("r=" << r << " s=" << s << " p=" << p << " q=" << q);
          const int sum = p + q;
          const int gap = p > q ? p - q : q - p;
          const bool in_band = s - r <= sum && sum <= s + r - 2 && (sum - (s - r)) % 2 == 0 &&
                               gap <= s - r;
          CHECK(d.at(p, q) >= 0);
          if (!in_band) CHECK(d.at(p, q) == 0);
          if (in_band && gap == s - r) CHECK(d.at(p, q) == 1);
        }
    }
  }
}
