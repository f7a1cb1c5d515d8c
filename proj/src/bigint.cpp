#include "hodge/bigint.hpp"

#include "hodge/error.hpp"

namespace hodge {

std::int64_t residue(const BigInt& value, std::int64_t m) {
  BigInt r = value % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

std::int64_t residue(std::int64_t value, std::int64_t m) {
  std::int64_t r = value % m;
  return r < 0 ? r + m : r;
}

BigInt binomial(const BigInt& top, int k) {
  if (k < 0) return 0;
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 0; i < k; ++i) {
    num *= top - i;
    den *= i + 1;
  }
  // k consecutive integers are always divisible by k!
  return num / den;
}

BigInt proj_hilbert(std::int64_t t, int N) { return binomial(BigInt(t) + N, N); }

BigInt parse_bigint(const std::string& token) {
  if (token.empty()) throw std::invalid_argument("empty integer");
  std::size_t start = (token[0] == '-' || token[0] == '+') ? 1 : 0;
  if (start == token.size()) throw std::invalid_argument("bad integer '" + token + "'");
  for (std::size_t i = start; i < token.size(); ++i) {
    if (token[i] < '0' || token[i] > '9') {
      throw std::invalid_argument("bad integer '" + token + "'");
    }
  }
  BigInt v(token.substr(start));
  return token[0] == '-' ? BigInt(-v) : v;
}

}  // namespace hodge
