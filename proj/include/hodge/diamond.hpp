#pragma once

#include <compare>
#include <string>
#include <vector>

#include "hodge/bigint.hpp"

namespace hodge {

/// Exact Hodge numbers h^{p,q}, 0 <= p,q <= n, of an n-dimensional object.
///
/// The type itself only fixes the shape. Symmetry, Lefschetz monotonicity and
/// nonnegativity are checked by `validate`, since formal differences of
/// diamonds (blow-up deltas, formal centers) are useful intermediate values.
class HodgeDiamond {
 public:
  HodgeDiamond() : HodgeDiamond(0) {}
  explicit HodgeDiamond(int n);

  static HodgeDiamond point();

  int dim() const { return n_; }

  /// Throws OutOfRange outside 0 <= p,q <= n.
  const BigInt& at(int p, int q) const;
  BigInt& at(int p, int q);

  /// Same as `at` but reads 0 for any out-of-range index.
  BigInt get(int p, int q) const;

  HodgeDiamond& operator+=(const HodgeDiamond& other);
  HodgeDiamond& operator-=(const HodgeDiamond& other);
  friend HodgeDiamond operator+(HodgeDiamond a, const HodgeDiamond& b) { return a += b; }
  friend HodgeDiamond operator-(HodgeDiamond a, const HodgeDiamond& b) { return a -= b; }

  bool operator==(const HodgeDiamond&) const = default;

 private:
  bool in_range(int p, int q) const { return p >= 0 && q >= 0 && p <= n_ && q <= n_; }

  int n_;
  std::vector<BigInt> h_;
};

/// Reports every violated constraint as a short tag:
///   "h00"              h^{0,0} != 1 (only when `connected`)
///   "negative p q"     h^{p,q} < 0
///   "symmetry p q"     h^{p,q} differs from h^{q,p} or h^{n-p,n-q}
///   "lefschetz p q"    h^{p,q} > h^{p+1,q+1} with p+q < n
/// An empty result means the diamond is admissible.
std::vector<std::string> validate(const HodgeDiamond& d, bool connected);

/// Hodge numbers of a product.
HodgeDiamond kunneth(const HodgeDiamond& a, const HodgeDiamond& b);

/// Blow-up of X along a center Z of codimension c:
/// h^{p,q} += sum_{i=1}^{c-1} h^{p-i,q-i}(Z). Throws DimensionMismatch unless
/// 1 <= c <= dim X and dim Z == dim X - c.
HodgeDiamond blow_up(const HodgeDiamond& x, const HodgeDiamond& center, int codim);

struct QuarterIndex {
  int p = 0;
  int q = 0;
  auto operator<=>(const QuarterIndex&) const = default;
};

/// The non-redundant quarter 0 <= p <= q, p+q <= n, ascending in (p,q).
/// Every entry of a symmetric diamond equals one of these.
std::vector<QuarterIndex> quarter_indices(int n);

/// Representative of (p,q) in the quarter under (p,q) -> (q,p) and
/// (p,q) -> (n-p,n-q). Throws OutOfRange outside 0 <= p,q <= n.
QuarterIndex canonical_quarter(int n, int p, int q);

/// Primitive numbers l^{p,q} = h^{p,q} - h^{p-1,q-1}, defined for p+q <= n.
class PrimitiveVector {
 public:
  explicit PrimitiveVector(int n);

  int dim() const { return n_; }
  const BigInt& at(int p, int q) const;
  BigInt& at(int p, int q);

  bool operator==(const PrimitiveVector&) const = default;

 private:
  int n_;
  std::vector<BigInt> l_;
};

PrimitiveVector primitive(const HodgeDiamond& d);

/// Inverts `primitive` on the lower quarter: for p <= q, p+q <= n,
/// h^{p,q} = h^{0,q-p} + sum_{i=1}^{p} l^{i,q-p+i}. `edge` supplies h^{0,k}.
BigInt reconstruct(const PrimitiveVector& l, const HodgeDiamond& edge, int p, int q);

struct InnerIndex {
  int p = 0;
  int q = 0;
  bool operator==(const InnerIndex&) const = default;
};

/// (r,s) precedes (p,q) iff r+s < p+q, or r+s == p+q and s < q.
bool precedes(InnerIndex a, InnerIndex b);

bool in_inner_set(int n, InnerIndex idx);

struct InnerIndexSet {
  int n = 0;
  std::vector<InnerIndex> indices;  // ascending
};

/// All (p,q) with 1 <= p <= q <= n-1 and p+q <= n, sorted ascending.
InnerIndexSet inner_order(int n);

}  // namespace hodge
