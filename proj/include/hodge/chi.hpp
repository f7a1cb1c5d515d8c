#pragma once

// Twisted Euler characteristics chi(Omega^a (x) M) for the handful of shapes
// the constructions need: projective spaces, curves, elliptic curves,
// products of those, and very ample hypersurfaces inside any of them.

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "hodge/bigint.hpp"
#include "hodge/diamond.hpp"

namespace hodge {

/// Exponents (i, j, ...) of a twist G_1^{-i} (x) G_2^{-j} (x) ... over the
/// generators of a twist lattice. Only anti-ample twists occur, so all
/// exponents are nonnegative.
using TwistIndex = std::vector<std::int64_t>;

/// chi(P^N, Omega^a(t)); any integer t. Throws OutOfRange unless 0 <= a <= N.
BigInt chi_proj(int N, int a, std::int64_t t);

/// chi(C, Omega^a (x) L^{-k}) on a genus-g curve with deg L = d.
BigInt chi_curve(const BigInt& genus, const BigInt& degree, int a, std::int64_t k);

/// chi(E, Omega^a (x) L^{-t}) on an elliptic curve with deg L = d. K_E is
/// trivial, so both form degrees give -t*d.
BigInt chi_elliptic(const BigInt& degree, int a, std::int64_t t);

/// One factor of a product: its dimension and a ready-made
/// (form degree, twist power) -> chi function.
struct ChiFactor {
  int dim = 0;
  std::function<BigInt(int a, std::int64_t twist)> chi;
};

/// Kunneth: sum over a_1+...+a_k = p of prod_i chi_i(a_i, twist_i).
BigInt chi_product(std::span<const ChiFactor> factors, int p,
                   std::span<const std::int64_t> twists);

/// Ambient variety seen through its twist lattice.
struct AmbientChi {
  int dim = 0;
  std::function<BigInt(int a, const TwistIndex& twist)> chi;
};

/// Memo of chi values keyed by (form degree, twist). Owned by a single
/// evaluation context; not synchronized.
class ChiTable {
 public:
  const BigInt* find(int a, const TwistIndex& twist) const;
  const BigInt& store(int a, TwistIndex twist, BigInt value);
  std::size_t size() const { return memo_.size(); }

 private:
  std::map<std::pair<int, TwistIndex>, BigInt> memo_;
};

/// chi(Y, Omega^a_Y (x) M|_Y) for a smooth hypersurface Y in the ambient with
/// class `divisor`, via the restriction sequence and the conormal sequence:
///   T(a, M) = chi_A(Omega^a M) - chi_A(Omega^a M(-Y)) - T(a-1, M(-Y)).
BigInt chi_hypersurface(const AmbientChi& ambient, const TwistIndex& divisor, int a,
                        const TwistIndex& twist, ChiTable& memo);

/// Recovers the middle row h^{p,n-p} of an n-dimensional diamond from
/// chi_p = sum_q (-1)^q h^{p,q} and the entries off the middle antidiagonal.
/// Throws InconsistentChi if the row is asymmetric or negative.
std::vector<BigInt> middle_row_from_chi(const HodgeDiamond& known, std::span<const BigInt> chis);

/// `known` with its middle row replaced by `middle_row_from_chi`.
HodgeDiamond fill_middle_row(HodgeDiamond known, std::span<const BigInt> chis);

}  // namespace hodge
