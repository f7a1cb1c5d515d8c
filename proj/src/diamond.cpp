#include "hodge/diamond.hpp"

#include <algorithm>

#include "hodge/error.hpp"

namespace hodge {

namespace {

std::string tag(const char* kind, int p, int q) {
  return std::string(kind) + " " + std::to_string(p) + " " + std::to_string(q);
}

}  // namespace

HodgeDiamond::HodgeDiamond(int n) : n_(n) {
  if (n < 0) throw OutOfRange("negative dimension");
  h_.assign(static_cast<std::size_t>((n + 1) * (n + 1)), BigInt(0));
}

HodgeDiamond HodgeDiamond::point() {
  HodgeDiamond d(0);
  d.at(0, 0) = 1;
  return d;
}

const BigInt& HodgeDiamond::at(int p, int q) const {
  if (!in_range(p, q)) {
    throw OutOfRange("h(" + std::to_string(p) + "," + std::to_string(q) +
                     ") outside a dimension-" + std::to_string(n_) + " diamond");
  }
  return h_[static_cast<std::size_t>(p * (n_ + 1) + q)];
}

BigInt& HodgeDiamond::at(int p, int q) {
  return const_cast<BigInt&>(std::as_const(*this).at(p, q));
}

BigInt HodgeDiamond::get(int p, int q) const { return in_range(p, q) ? at(p, q) : BigInt(0); }

HodgeDiamond& HodgeDiamond::operator+=(const HodgeDiamond& other) {
  if (other.n_ != n_) throw DimensionMismatch("adding diamonds of different dimension");
  for (std::size_t i = 0; i < h_.size(); ++i) h_[i] += other.h_[i];
  return *this;
}

HodgeDiamond& HodgeDiamond::operator-=(const HodgeDiamond& other) {
  if (other.n_ != n_) throw DimensionMismatch("subtracting diamonds of different dimension");
  for (std::size_t i = 0; i < h_.size(); ++i) h_[i] -= other.h_[i];
  return *this;
}

std::vector<std::string> validate(const HodgeDiamond& d, bool connected) {
  std::vector<std::string> out;
  const int n = d.dim();
  if (connected && d.at(0, 0) != 1) out.push_back("h00");
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= n; ++q) {
      if (d.at(p, q) < 0) out.push_back(tag("negative", p, q));
    }
  }
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= n; ++q) {
      if (d.at(p, q) != d.at(q, p) || d.at(p, q) != d.at(n - p, n - q)) {
        out.push_back(tag("symmetry", p, q));
      }
    }
  }
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n && p + q < n; ++q) {
      if (d.at(p, q) > d.at(p + 1, q + 1)) out.push_back(tag("lefschetz", p, q));
    }
  }
  return out;
}

HodgeDiamond kunneth(const HodgeDiamond& a, const HodgeDiamond& b) {
  HodgeDiamond out(a.dim() + b.dim());
  for (int p1 = 0; p1 <= a.dim(); ++p1) {
    for (int q1 = 0; q1 <= a.dim(); ++q1) {
      if (a.at(p1, q1) == 0) continue;
      for (int p2 = 0; p2 <= b.dim(); ++p2) {
        for (int q2 = 0; q2 <= b.dim(); ++q2) {
          out.at(p1 + p2, q1 + q2) += a.at(p1, q1) * b.at(p2, q2);
        }
      }
    }
  }
  return out;
}

HodgeDiamond blow_up(const HodgeDiamond& x, const HodgeDiamond& center, int codim) {
  const int n = x.dim();
  if (codim < 1 || codim > n) {
    throw DimensionMismatch("blow-up codimension " + std::to_string(codim) +
                            " outside [1, " + std::to_string(n) + "]");
  }
  if (center.dim() != n - codim) {
    throw DimensionMismatch("blow-up center has dimension " + std::to_string(center.dim()) +
                            ", expected " + std::to_string(n - codim));
  }
  HodgeDiamond out = x;
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= n; ++q) {
      for (int i = 1; i < codim; ++i) out.at(p, q) += center.get(p - i, q - i);
    }
  }
  return out;
}

std::vector<QuarterIndex> quarter_indices(int n) {
  std::vector<QuarterIndex> out;
  for (int p = 0; p <= n; ++p) {
    for (int q = p; p + q <= n; ++q) out.push_back({p, q});
  }
  return out;
}

QuarterIndex canonical_quarter(int n, int p, int q) {
  if (p < 0 || q < 0 || p > n || q > n) {
    throw OutOfRange("index (" + std::to_string(p) + "," + std::to_string(q) +
                     ") outside a dimension-" + std::to_string(n) + " diamond");
  }
  if (p + q > n) {
    p = n - p;
    q = n - q;
  }
  if (p > q) std::swap(p, q);
  return {p, q};
}

PrimitiveVector::PrimitiveVector(int n) : n_(n) {
  l_.assign(static_cast<std::size_t>((n + 1) * (n + 1)), BigInt(0));
}

const BigInt& PrimitiveVector::at(int p, int q) const {
  if (p < 0 || q < 0 || p + q > n_) {
    throw OutOfRange("l(" + std::to_string(p) + "," + std::to_string(q) + ") needs p+q <= " +
                     std::to_string(n_));
  }
  return l_[static_cast<std::size_t>(p * (n_ + 1) + q)];
}

BigInt& PrimitiveVector::at(int p, int q) {
  return const_cast<BigInt&>(std::as_const(*this).at(p, q));
}

PrimitiveVector primitive(const HodgeDiamond& d) {
  PrimitiveVector l(d.dim());
  for (int p = 0; p <= d.dim(); ++p) {
    for (int q = 0; p + q <= d.dim(); ++q) l.at(p, q) = d.at(p, q) - d.get(p - 1, q - 1);
  }
  return l;
}

BigInt reconstruct(const PrimitiveVector& l, const HodgeDiamond& edge, int p, int q) {
  if (p > q || p < 0 || p + q > l.dim()) {
    throw OutOfRange("reconstruction needs 0 <= p <= q and p+q <= n");
  }
  BigInt h = edge.at(0, q - p);
  for (int i = 1; i <= p; ++i) h += l.at(i, q - p + i);
  return h;
}

bool precedes(InnerIndex a, InnerIndex b) {
  const int sa = a.p + a.q;
  const int sb = b.p + b.q;
  return sa < sb || (sa == sb && a.q < b.q);
}

bool in_inner_set(int n, InnerIndex idx) {
  return 1 <= idx.p && idx.p <= idx.q && idx.q <= n - 1 && idx.p + idx.q <= n;
}

InnerIndexSet inner_order(int n) {
  InnerIndexSet set{n, {}};
  for (int p = 1; p <= n - 1; ++p) {
    for (int q = p; q <= n - 1; ++q) {
      if (p + q <= n) set.indices.push_back({p, q});
    }
  }
  std::sort(set.indices.begin(), set.indices.end(), precedes);
  return set;
}

}  // namespace hodge
