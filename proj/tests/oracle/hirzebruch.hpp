#pragma once

// Independent oracle for the middle row of a smooth degree-d hypersurface,
// read off Hirzebruch's generating function
//
//   sum_{p,q} h^{p,q}_prim(Y_d^{p+q}) y^p z^q
//       = ((1+y)^{d-1} - (1+z)^{d-1}) / ((1+z)^d y - (1+y)^d z).
//
// Numerator and denominator both vanish on y = z; after dividing out (y - z)
// the denominator has constant term 1 and is inverted as a power series.
// Shares no code with the chi-calculus route.

#include <vector>

#include "hodge/bigint.hpp"

namespace hodge::oracle {

// Bivariate polynomial, coefficient c[i][j] of y^i z^j, truncated to total
// degree <= K.
class Series {
 public:
  explicit Series(int K) : K_(K), c_(K + 1, std::vector<BigInt>(K + 1, 0)) {}
  BigInt& at(int i, int j) { return c_[i][j]; }
  const BigInt& at(int i, int j) const { return c_[i][j]; }
  int order() const { return K_; }

  Series operator*(const Series& o) const {
    Series r(K_);
    for (int i = 0; i <= K_; ++i)
      for (int j = 0; i + j <= K_; ++j)
        if (c_[i][j] != 0)
          for (int a = 0; i + a <= K_; ++a)
            for (int b = 0; i + a + j + b <= K_; ++b) r.c_[i + a][j + b] += c_[i][j] * o.c_[a][b];
    return r;
  }

 private:
  int K_;
  std::vector<std::vector<BigInt>> c_;
};

inline BigInt choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Exact full polynomials (no truncation needed: degree <= d+1).
inline std::vector<std::vector<BigInt>> numerator(int d, int K) {
  std::vector<std::vector<BigInt>> f(K + 2, std::vector<BigInt>(K + 2, 0));
  for (int k = 0; k <= d - 1 && k <= K + 1; ++k) {
    f[k][0] += choose(d - 1, k);
    f[0][k] -= choose(d - 1, k);
  }
  return f;
}

inline std::vector<std::vector<BigInt>> denominator(int d, int K) {
  std::vector<std::vector<BigInt>> f(K + 2, std::vector<BigInt>(K + 2, 0));
  for (int k = 0; k <= d && k + 1 <= K + 1; ++k) {
    f[1][k] += choose(d, k);  // (1+z)^d y
    f[k][1] -= choose(d, k);  // (1+y)^d z
  }
  return f;
}

// Divides f(y,z) by (y - z), truncated to total degree K of the quotient.
// Synthetic division in y over coefficients in Z[z]: with f = sum_i f_i(z) y^i
// and quotient g = sum_i g_i(z) y^i, g_{i-1} = f_i + z g_i from the top.
inline Series divide_by_diagonal(const std::vector<std::vector<BigInt>>& f, int K) {
  const int D = static_cast<int>(f.size()) - 1;
  std::vector<std::vector<BigInt>> g(D + 1, std::vector<BigInt>(D + 2, 0));
  for (int i = D; i >= 1; --i) {
    for (int j = 0; j <= D; ++j) {
      g[i - 1][j] += f[i][j];
      if (i <= D - 1 && j >= 1) g[i - 1][j] += g[i][j - 1];
    }
  }
  Series s(K);
  for (int i = 0; i <= K && i <= D; ++i)
    for (int j = 0; i + j <= K && j <= D; ++j) s.at(i, j) = g[i][j];
  return s;
}

inline Series inverse(const Series& a) {
  // a(0,0) == 1; solve a * b = 1 degree by degree.
  const int K = a.order();
  Series b(K);
  for (int t = 0; t <= K; ++t) {
    for (int i = 0; i <= t; ++i) {
      const int j = t - i;
      BigInt acc = (t == 0) ? BigInt(1) : BigInt(0);
      for (int u = 0; u <= i; ++u)
        for (int v = 0; v <= j; ++v)
          if ((u || v)) acc -= a.at(u, v) * b.at(i - u, j - v);
      b.at(i, j) = acc;  // divided by a(0,0) == 1
    }
  }
  return b;
}

/// Middle row h^{p,N-p}, p = 0..N, of a smooth degree-d hypersurface of
/// dimension N, including the hyperplane-class contribution when N is even.
inline std::vector<BigInt> middle_row(int N, int d) {
  const int K = N;
  // The quotient's total degree is bounded by the numerator's degree; pad K.
  const int pad = std::max(K, d + 1);
  Series num = divide_by_diagonal(numerator(d, pad), pad);
  Series den = divide_by_diagonal(denominator(d, pad), pad);
  Series gen = num * inverse(den);
  std::vector<BigInt> row;
  for (int p = 0; p <= N; ++p) row.push_back(gen.at(p, N - p) + (2 * p == N ? 1 : 0));
  return row;
}

}  // namespace hodge::oracle
