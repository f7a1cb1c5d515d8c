#include "hodge/relations.hpp"

#include <algorithm>
#include <string>

#include "hodge/error.hpp"

namespace hodge {

PolynomialRelation::PolynomialRelation(int n, bool inner_only) : n_(n), inner_only_(inner_only) {
  if (n < 1) throw OutOfRange("polynomial dimension must be at least 1");
  for (const auto& v : quarter_indices(n)) {
    if (admits(v)) variables_.push_back(v);
  }
}

bool PolynomialRelation::admits(QuarterIndex v) const {
  if (v.p == 0 && v.q == 0) return false;
  if (inner_only_) return v.p != 0 && v.q != 0 && v.p != n_ && v.q != n_;
  return true;
}

void PolynomialRelation::add_term(const BigInt& coefficient,
                                  const std::vector<std::pair<QuarterIndex, int>>& powers) {
  Monomial mono{coefficient, {}};
  for (const auto& [raw, e] : powers) {
    if (e < 0) throw OutOfRange("negative exponent");
    const QuarterIndex v = canonical_quarter(n_, raw.p, raw.q);
    if (!admits(v)) {
      throw OutOfRange("h(" + std::to_string(raw.p) + "," + std::to_string(raw.q) +
                       ") is not a variable" + (inner_only_ ? " of the inner relation" : ""));
    }
    if (e > 0) mono.exponents[v] += e;
  }
  auto it = std::find_if(terms_.begin(), terms_.end(),
                         [&](const Monomial& t) { return t.exponents == mono.exponents; });
  if (it == terms_.end()) {
    if (coefficient != 0) terms_.push_back(std::move(mono));
    return;
  }
  it->coefficient += coefficient;
  if (it->coefficient == 0) terms_.erase(it);
}

BigInt PolynomialRelation::evaluate(const std::function<BigInt(QuarterIndex)>& value) const {
  BigInt total = 0;
  for (const auto& t : terms_) {
    BigInt term = t.coefficient;
    for (const auto& [v, e] : t.exponents) term *= boost::multiprecision::pow(value(v), static_cast<unsigned>(e));
    total += term;
  }
  return total;
}

BigInt PolynomialRelation::evaluate(const HodgeDiamond& d) const {
  if (d.dim() != n_) throw DimensionMismatch("polynomial and diamond dimensions differ");
  return evaluate([&](QuarterIndex v) { return d.at(v.p, v.q); });
}

Witness find_witness(const PolynomialRelation& f, std::int64_t initial_bound) {
  if (f.is_zero()) throw ZeroPolynomial("the polynomial is identically zero");
  // Variables absent from f stay 0: the lexicographically first nonvanishing
  // point has them at 0 anyway.
  std::vector<QuarterIndex> used;
  for (const auto& t : f.terms()) {
    for (const auto& [v, e] : t.exponents) used.push_back(v);
  }
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());

  auto make = [&](const std::vector<std::int64_t>& digits) {
    Witness w;
    for (const auto& v : f.variables()) {
      auto it = std::lower_bound(used.begin(), used.end(), v);
      BigInt value = (it != used.end() && *it == v) ? BigInt(digits[static_cast<std::size_t>(it - used.begin())]) : BigInt(0);
      w.point.emplace_back(v, value);
    }
    return w;
  };
  auto eval_at = [&](const Witness& w) {
    return f.evaluate([&](QuarterIndex v) {
      auto it = std::find_if(w.point.begin(), w.point.end(), [&](const auto& e) { return e.first == v; });
      return it->second;
    });
  };

  for (std::int64_t bound = std::max<std::int64_t>(initial_bound, 1);; bound *= 2) {
    std::vector<std::int64_t> digits(used.size(), 0);
    while (true) {
      Witness w = make(digits);
      w.value = eval_at(w);
      if (w.value != 0) return w;
      // Odometer with the first variable fastest.
      std::size_t i = 0;
      while (i < digits.size() && digits[i] == bound) digits[i++] = 0;
      if (i == digits.size()) break;
      ++digits[i];
    }
  }
}

std::int64_t smallest_non_divisor(const BigInt& v) {
  if (v == 0) throw ZeroPolynomial("every modulus divides zero");
  std::int64_t m = 2;
  while (v % m == 0) ++m;
  return m;
}

RefutationCertificate refute(const PolynomialRelation& f) {
  RefutationCertificate cert;
  cert.witness = find_witness(f);
  cert.m = smallest_non_divisor(cert.witness.value);

  ResidueTarget target(f.dim(), cert.m);
  for (const auto& [v, z] : cert.witness.point) target.set(v.p, v.q, residue(z, cert.m));

  auto built = construct(target);
  cert.recipe = std::move(built.recipe);
  cert.diamond = std::move(built.diamond);
  cert.diamond_value = f.evaluate(cert.diamond);

  auto problems = check_certificate(f, cert);
  if (!problems.empty()) throw Error("refutation failed self-check: " + problems.front());
  return cert;
}

std::vector<std::string> check_certificate(const PolynomialRelation& f,
                                           const RefutationCertificate& cert) {
  std::vector<std::string> problems;
  if (cert.m < 2) problems.push_back("modulus below 2");
  if (cert.witness.value % cert.m == 0) problems.push_back("modulus divides f(z)");
  if (f.dim() != cert.recipe.n || cert.recipe.m != cert.m) {
    problems.push_back("recipe header does not match the certificate");
    return problems;
  }
  HodgeDiamond d;
  try {
    d = eval_recipe(cert.recipe);
  } catch (const Error& e) {
    problems.push_back(std::string("recipe does not evaluate: ") + e.what());
    return problems;
  }
  if (d != cert.diamond) problems.push_back("recipe does not evaluate to the stated diamond");
  if (!validate(d, true).empty()) problems.push_back("diamond fails validation");
  for (const auto& [v, z] : cert.witness.point) {
    if (residue(d.at(v.p, v.q), cert.m) != residue(z, cert.m)) {
      problems.push_back("h(" + std::to_string(v.p) + "," + std::to_string(v.q) +
                         ") not congruent to the witness");
    }
  }
  const BigInt value = f.evaluate(d);
  if (value != cert.diamond_value) problems.push_back("stated f(diamond) is wrong");
  if (residue(value, cert.m) == 0) problems.push_back("f(diamond) vanishes mod m");
  return problems;
}

}  // namespace hodge
