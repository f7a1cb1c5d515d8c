#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hodge {

using BigInt = boost::multiprecision::cpp_int;

/// Least nonnegative residue of `value` modulo `m` (m >= 1).
std::int64_t residue(const BigInt& value, std::int64_t m);
std::int64_t residue(std::int64_t value, std::int64_t m);

/// Binomial coefficient C(top, k) read as a degree-k polynomial in `top`,
/// so negative `top` is allowed: top(top-1)...(top-k+1)/k!. Zero for k < 0.
BigInt binomial(const BigInt& top, int k);

/// C(t+N, N) as a polynomial in t; the Hilbert polynomial of P^N.
BigInt proj_hilbert(std::int64_t t, int N);

BigInt parse_bigint(const std::string& token);

}  // namespace hodge
