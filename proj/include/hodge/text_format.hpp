#pragma once

// Line-oriented text formats. Every line is a keyword followed by
// space-separated integer tokens; '#' starts a comment. Parse failures throw
// ParseError carrying the 1-based line number.

#include <string>
#include <string_view>

#include "hodge/construct.hpp"
#include "hodge/diamond.hpp"
#include "hodge/recipe.hpp"
#include "hodge/relations.hpp"

namespace hodge {

/// `dim <n>`, `mod <m>`, then `h <p> <q> <r>` lines. Any (p,q) of the full
/// diamond is accepted and read through the symmetries; two lines naming the
/// same quarter entry are an error. Omitted entries are 0, and h 0 0 must be 1.
ResidueTarget parse_target(std::string_view text);
std::string format_target(const ResidueTarget& target);

/// `h <p> <q> <value>` for all (p,q), ascending.
std::string format_diamond(const HodgeDiamond& d);
HodgeDiamond parse_diamond(std::string_view text);

/// Centered diamond with h^{n,n} on top, h^{n,0} on the left.
std::string format_diamond_pretty(const HodgeDiamond& d);

/// `dim`, `mod`, then one step per line: `curve <g> <d>`, `tower <dE> <e>`,
/// `blowup-point`, `blowup-proj <s>`, `blowup-bundle <r> <s> <d>`.
std::string format_recipe(const Recipe& recipe);
Recipe parse_recipe(std::string_view text);

/// `dim <n>`, optional `inner`, then `term <coeff> [<p> <q> <exp>]...`.
/// Coefficients may be rationals a/b; the whole polynomial is rescaled by
/// the lcm of denominators.
PolynomialRelation parse_polynomial(std::string_view text);
std::string format_polynomial(const PolynomialRelation& f);

std::string format_certificate(const RefutationCertificate& cert);

}  // namespace hodge
