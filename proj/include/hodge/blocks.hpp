#pragma once

#include <cstdint>

#include "hodge/bigint.hpp"
#include "hodge/chi.hpp"
#include "hodge/diamond.hpp"

namespace hodge {

/// Smooth degree-d hypersurface Y_d in P^{N+1}. For N = 0 this is d points
/// in P^1.
struct HypersurfaceSpec {
  int N = 0;
  std::int64_t d = 1;
};

/// Projective bundle with fiber P^{r-1} over Y_d in P^{s-r+1}; dimension s-1.
struct BundleCenterSpec {
  int r = 1;
  int s = 1;
  std::int64_t d = 1;
};

/// Z x P^{r-1}, where Z = Y_{s-r+2} - Y_1 is the formal (s-r)-dimensional
/// difference whose diamond lives on the middle row only.
struct FormalCenter {
  int r = 1;
  int s = 1;
  HodgeDiamond z;        // dimension s-r
  HodgeDiamond diamond;  // dimension s-1
};

HodgeDiamond proj_space_diamond(int s);
HodgeDiamond curve_diamond(const BigInt& genus);
HodgeDiamond elliptic_curve_diamond();

/// chi(Y_d, Omega^a(-k)).
BigInt chi_hypersurface_proj(HypersurfaceSpec spec, int a, std::int64_t k, ChiTable& memo);

/// Exact diamond of Y_d. Off-middle rows follow P^N; the middle row is
/// recovered from the chi calculus. Throws InconsistentChi if the result
/// disagrees with h^{N,0} = C(d-1, N+1).
HodgeDiamond hypersurface_diamond(HypersurfaceSpec spec);

HodgeDiamond bundle_center_diamond(BundleCenterSpec spec);

FormalCenter formal_center(int r, int s);

}  // namespace hodge
