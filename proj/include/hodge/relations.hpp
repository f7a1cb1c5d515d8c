#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "hodge/bigint.hpp"
#include "hodge/construct.hpp"
#include "hodge/diamond.hpp"
#include "hodge/recipe.hpp"

namespace hodge {

struct Monomial {
  BigInt coefficient;
  std::map<QuarterIndex, int> exponents;  // exponent >= 1 for every key
  bool operator==(const Monomial&) const = default;
};

/// Integer polynomial in the quarter-diamond entries h^{p,q} other than
/// h^{0,0}. With `inner_only`, variables are restricted to inner entries
/// (neither p nor q in {0, n}).
class PolynomialRelation {
 public:
  PolynomialRelation(int n, bool inner_only = false);

  int dim() const { return n_; }
  bool inner_only() const { return inner_only_; }

  /// All admissible variables, ascending.
  const std::vector<QuarterIndex>& variables() const { return variables_; }
  bool admits(QuarterIndex v) const;

  /// Adds coefficient * prod x_{p,q}^{e}. Indices are canonicalized through
  /// the Hodge symmetries; throws OutOfRange for (0,0) or non-admissible
  /// variables. Like terms are merged, zero terms dropped.
  void add_term(const BigInt& coefficient, const std::vector<std::pair<QuarterIndex, int>>& powers);

  const std::vector<Monomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  BigInt evaluate(const std::function<BigInt(QuarterIndex)>& value) const;
  BigInt evaluate(const HodgeDiamond& d) const;

 private:
  int n_;
  bool inner_only_;
  std::vector<QuarterIndex> variables_;
  std::vector<Monomial> terms_;
};

struct Witness {
  std::vector<std::pair<QuarterIndex, BigInt>> point;  // one entry per variable
  BigInt value;
};

/// First point of [0,B]^N where f does not vanish, doubling B from
/// `initial_bound`. Points are visited in odometer order with the first
/// (smallest) variable running fastest.
/// Throws ZeroPolynomial for f == 0.
Witness find_witness(const PolynomialRelation& f, std::int64_t initial_bound = 1);

struct RefutationCertificate {
  Witness witness;
  std::int64_t m = 2;
  Recipe recipe;
  HodgeDiamond diamond;
  BigInt diamond_value;  // f(diamond), nonzero mod m
};

/// Smallest m >= 2 with m not dividing v (v != 0).
std::int64_t smallest_non_divisor(const BigInt& v);

/// Builds a variety on which f does not vanish. Throws ZeroPolynomial for
/// f == 0.
RefutationCertificate refute(const PolynomialRelation& f);

/// Independent re-check: re-evaluates the recipe and f, confirms the
/// congruence to the witness and f(diamond) != 0 mod m. Returns the list of
/// failures, empty on success.
std::vector<std::string> check_certificate(const PolynomialRelation& f,
                                           const RefutationCertificate& cert);

}  // namespace hodge
