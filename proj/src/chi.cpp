#include "hodge/chi.hpp"

#include <string>

#include "hodge/error.hpp"

namespace hodge {

BigInt chi_proj(int N, int a, std::int64_t t) {
  if (a < 0 || a > N) {
    throw OutOfRange("chi_proj: form degree " + std::to_string(a) + " outside [0, " +
                     std::to_string(N) + "]");
  }
  // Euler sequence: 0 -> Omega^a -> O(-a)^{C(N+1,a)} -> Omega^{a-1} -> 0.
  BigInt value = proj_hilbert(t, N);
  for (int b = 1; b <= a; ++b) {
    value = binomial(BigInt(N + 1), b) * proj_hilbert(t - b, N) - value;
  }
  return value;
}

BigInt chi_curve(const BigInt& genus, const BigInt& degree, int a, std::int64_t k) {
  switch (a) {
    case 0: return 1 - genus - k * degree;
    case 1: return genus - 1 - k * degree;
    default: throw OutOfRange("chi_curve: form degree must be 0 or 1");
  }
}

BigInt chi_elliptic(const BigInt& degree, int a, std::int64_t t) {
  if (a != 0 && a != 1) throw OutOfRange("chi_elliptic: form degree must be 0 or 1");
  return -t * degree;
}

namespace {

BigInt product_rec(std::span<const ChiFactor> factors, std::span<const std::int64_t> twists,
                   std::size_t i, int remaining) {
  if (i == factors.size()) return remaining == 0 ? BigInt(1) : BigInt(0);
  BigInt total = 0;
  for (int a = 0; a <= factors[i].dim && a <= remaining; ++a) {
    BigInt head = factors[i].chi(a, twists[i]);
    if (head == 0) continue;
    total += head * product_rec(factors, twists, i + 1, remaining - a);
  }
  return total;
}

}  // namespace

BigInt chi_product(std::span<const ChiFactor> factors, int p,
                   std::span<const std::int64_t> twists) {
  if (factors.size() != twists.size()) {
    throw DimensionMismatch("chi_product: one twist per factor required");
  }
  if (p < 0) return 0;
  return product_rec(factors, twists, 0, p);
}

const BigInt* ChiTable::find(int a, const TwistIndex& twist) const {
  auto it = memo_.find({a, twist});
  return it == memo_.end() ? nullptr : &it->second;
}

const BigInt& ChiTable::store(int a, TwistIndex twist, BigInt value) {
  return memo_.insert_or_assign({a, std::move(twist)}, std::move(value)).first->second;
}

BigInt chi_hypersurface(const AmbientChi& ambient, const TwistIndex& divisor, int a,
                        const TwistIndex& twist, ChiTable& memo) {
  if (a < 0) return 0;
  if (a > ambient.dim - 1) {
    throw OutOfRange("chi_hypersurface: form degree " + std::to_string(a) +
                     " exceeds hypersurface dimension " + std::to_string(ambient.dim - 1));
  }
  if (twist.size() != divisor.size()) {
    throw DimensionMismatch("chi_hypersurface: twist and divisor lattices differ");
  }
  if (const BigInt* hit = memo.find(a, twist)) return *hit;

  TwistIndex lowered = twist;
  for (std::size_t k = 0; k < lowered.size(); ++k) lowered[k] += divisor[k];

  BigInt value = ambient.chi(a, twist) - ambient.chi(a, lowered);
  if (a > 0) value -= chi_hypersurface(ambient, divisor, a - 1, lowered, memo);
  return memo.store(a, twist, std::move(value));
}

std::vector<BigInt> middle_row_from_chi(const HodgeDiamond& known, std::span<const BigInt> chis) {
  const int n = known.dim();
  if (chis.size() != static_cast<std::size_t>(n + 1)) {
    throw DimensionMismatch("middle_row_from_chi: need chi_p for 0 <= p <= n");
  }
  std::vector<BigInt> row(static_cast<std::size_t>(n + 1));
  for (int p = 0; p <= n; ++p) {
    BigInt rest = 0;
    for (int q = 0; q <= n; ++q) {
      if (q == n - p) continue;
      if (q % 2 == 0) rest += known.at(p, q); else rest -= known.at(p, q);
    }
    BigInt v = chis[static_cast<std::size_t>(p)] - rest;
    row[static_cast<std::size_t>(p)] = ((n - p) % 2 == 0) ? v : BigInt(-v);
  }
  for (int p = 0; p <= n; ++p) {
    const auto& v = row[static_cast<std::size_t>(p)];
    if (v < 0) {
      throw InconsistentChi("middle row entry h(" + std::to_string(p) + "," +
                            std::to_string(n - p) + ") = " + v.str() + " is negative");
    }
    if (v != row[static_cast<std::size_t>(n - p)]) {
      throw InconsistentChi("middle row is not symmetric at p = " + std::to_string(p));
    }
  }
  return row;
}

HodgeDiamond fill_middle_row(HodgeDiamond known, std::span<const BigInt> chis) {
  auto row = middle_row_from_chi(known, chis);
  for (int p = 0; p <= known.dim(); ++p) known.at(p, known.dim() - p) = row[static_cast<std::size_t>(p)];
  return known;
}

}  // namespace hodge
