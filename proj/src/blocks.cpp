#include "hodge/blocks.hpp"

#include <string>
#include <vector>

#include "hodge/error.hpp"

namespace hodge {

HodgeDiamond proj_space_diamond(int s) {
  HodgeDiamond d(s);
  for (int p = 0; p <= s; ++p) d.at(p, p) = 1;
  return d;
}

HodgeDiamond curve_diamond(const BigInt& genus) {
  HodgeDiamond d(1);
  d.at(0, 0) = 1;
  d.at(1, 1) = 1;
  d.at(1, 0) = genus;
  d.at(0, 1) = genus;
  return d;
}

HodgeDiamond elliptic_curve_diamond() { return curve_diamond(1); }

namespace {

AmbientChi projective_ambient(int dim) {
  // Twist lattice generated by O(1); exponent k means O(-k).
  return AmbientChi{dim, [dim](int a, const TwistIndex& tw) { return chi_proj(dim, a, -tw[0]); }};
}

}  // namespace

BigInt chi_hypersurface_proj(HypersurfaceSpec spec, int a, std::int64_t k, ChiTable& memo) {
  return chi_hypersurface(projective_ambient(spec.N + 1), TwistIndex{spec.d}, a, TwistIndex{k},
                          memo);
}

HodgeDiamond hypersurface_diamond(HypersurfaceSpec spec) {
  if (spec.N < 0 || spec.d < 1) throw OutOfRange("hypersurface needs N >= 0 and d >= 1");
  if (spec.N == 0) {
    HodgeDiamond points(0);
    points.at(0, 0) = spec.d;
    return points;
  }
  const int n = spec.N;
  ChiTable memo;
  std::vector<BigInt> chis;
  chis.reserve(static_cast<std::size_t>(n + 1));
  for (int p = 0; p <= n; ++p) chis.push_back(chi_hypersurface_proj(spec, p, 0, memo));

  HodgeDiamond known = proj_space_diamond(n);
  for (int p = 0; p <= n; ++p) known.at(p, n - p) = 0;
  HodgeDiamond out = fill_middle_row(std::move(known), chis);

  const BigInt expected = binomial(BigInt(spec.d - 1), n + 1);
  if (out.at(n, 0) != expected) {
    throw InconsistentChi("h^{N,0} of Y_" + std::to_string(spec.d) + " is " + out.at(n, 0).str() +
                          ", expected " + expected.str());
  }
  return out;
}

HodgeDiamond bundle_center_diamond(BundleCenterSpec spec) {
  if (spec.r < 1 || spec.r > spec.s) throw OutOfRange("bundle center needs 1 <= r <= s");
  return kunneth(hypersurface_diamond({spec.s - spec.r, spec.d}), proj_space_diamond(spec.r - 1));
}

FormalCenter formal_center(int r, int s) {
  if (r < 1 || r > s) throw OutOfRange("formal center needs 1 <= r <= s");
  const int N = s - r;
  FormalCenter fc;
  fc.r = r;
  fc.s = s;
  fc.z = hypersurface_diamond({N, N + 2}) - hypersurface_diamond({N, 1});
  fc.diamond = kunneth(fc.z, proj_space_diamond(r - 1));
  return fc;
}

}  // namespace hodge
