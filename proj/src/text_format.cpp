#include "hodge/text_format.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <vector>

#include "hodge/error.hpp"

namespace hodge {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
    pos = end + 1;
  }
  return out;
}

BigInt big_token(const Line& line, std::size_t i) {
  try {
    return parse_bigint(line.tokens.at(i));
  } catch (const std::exception&) {
    throw ParseError(line.number, "expected an integer in field " + std::to_string(i + 1));
  }
}

std::int64_t int_token(const Line& line, std::size_t i) {
  const BigInt v = big_token(line, i);
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw ParseError(line.number, "integer out of range in field " + std::to_string(i + 1));
  }
  return static_cast<std::int64_t>(v);
}

int small_token(const Line& line, std::size_t i) {
  const std::int64_t v = int_token(line, i);
  if (v < -100000 || v > 100000) {
    throw ParseError(line.number, "value out of range in field " + std::to_string(i + 1));
  }
  return static_cast<int>(v);
}

void expect_arity(const Line& line, std::size_t count) {
  if (line.tokens.size() != count) {
    throw ParseError(line.number, "'" + line.tokens[0] + "' takes " + std::to_string(count - 1) +
                                      " argument(s)");
  }
}

/// Reads the leading `dim` / `mod` lines; returns the index of the first body line.
std::size_t read_header(const std::vector<Line>& lines, bool want_mod, int& n, std::int64_t& m) {
  std::size_t i = 0;
  auto expect = [&](const char* key) -> const Line& {
    if (i >= lines.size() || lines[i].tokens[0] != key) {
      const std::size_t at = i < lines.size() ? lines[i].number : (lines.empty() ? 1 : lines.back().number);
      throw ParseError(at, std::string("expected '") + key + "' header");
    }
    expect_arity(lines[i], 2);
    return lines[i++];
  };
  const Line& dim = expect("dim");
  n = small_token(dim, 1);
  if (n < 1) throw ParseError(dim.number, "dimension must be at least 1");
  if (want_mod) {
    const Line& mod = expect("mod");
    m = int_token(mod, 1);
    if (m < 2) throw ParseError(mod.number, "modulus must be at least 2");
  }
  return i;
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

ResidueTarget parse_target(std::string_view text) {
  const auto lines = tokenize(text);
  int n = 0;
  std::int64_t m = 0;
  std::size_t i = read_header(lines, true, n, m);
  ResidueTarget target(n, m);
  std::set<QuarterIndex> seen;
  for (; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != "h") throw ParseError(line.number, "unknown keyword '" + line.tokens[0] + "'");
    expect_arity(line, 4);
    const int p = small_token(line, 1);
    const int q = small_token(line, 2);
    const std::int64_t r = int_token(line, 3);
    if (p < 0 || q < 0 || p > n || q > n) throw ParseError(line.number, "index outside the diamond");
    if (r < 0 || r >= m) throw ParseError(line.number, "residue must lie in [0, m)");
    const QuarterIndex idx = canonical_quarter(n, p, q);
    if (!seen.insert(idx).second) {
      throw ParseError(line.number, "duplicate entry for h " + std::to_string(idx.p) + " " +
                                        std::to_string(idx.q));
    }
    if (idx.p == 0 && idx.q == 0 && r != 1) throw ParseError(line.number, "h 0 0 must be 1");
    target.set(idx.p, idx.q, r);
  }
  return target;
}

std::string format_target(const ResidueTarget& target) {
  std::ostringstream out;
  out << "dim " << target.dim() << "\nmod " << target.modulus() << "\n";
  for (const auto& idx : quarter_indices(target.dim())) {
    out << "h " << idx.p << " " << idx.q << " " << target.get(idx.p, idx.q) << "\n";
  }
  return out.str();
}

std::string format_diamond(const HodgeDiamond& d) {
  std::ostringstream out;
  for (int p = 0; p <= d.dim(); ++p) {
    for (int q = 0; q <= d.dim(); ++q) out << "h " << p << " " << q << " " << d.at(p, q) << "\n";
  }
  return out.str();
}

HodgeDiamond parse_diamond(std::string_view text) {
  const auto lines = tokenize(text);
  int n = 0;
  while (static_cast<std::size_t>((n + 1) * (n + 1)) < lines.size()) ++n;
  if (lines.empty() || static_cast<std::size_t>((n + 1) * (n + 1)) != lines.size()) {
    throw ParseError(lines.empty() ? 1 : lines.back().number, "a diamond needs (n+1)^2 entries");
  }
  HodgeDiamond d(n);
  std::size_t k = 0;
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= n; ++q, ++k) {
      const Line& line = lines[k];
      if (line.tokens[0] != "h") throw ParseError(line.number, "expected 'h'");
      expect_arity(line, 4);
      if (small_token(line, 1) != p || small_token(line, 2) != q) {
        throw ParseError(line.number, "entries must appear in ascending (p,q) order");
      }
      d.at(p, q) = big_token(line, 3);
    }
  }
  return d;
}

std::string format_diamond_pretty(const HodgeDiamond& d) {
  const int n = d.dim();
  std::size_t width = 1;
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= n; ++q) width = std::max(width, d.at(p, q).str().size());
  }
  std::ostringstream out;
  for (int w = 2 * n; w >= 0; --w) {
    // Slot c holds h^{p,q} with q - p = c - n; h^{n,0} sits in slot 0.
    std::vector<std::string> slots(static_cast<std::size_t>(2 * n + 1));
    for (int p = std::min(n, w); p >= std::max(0, w - n); --p) {
      const int q = w - p;
      slots[static_cast<std::size_t>(n - p + q)] = d.at(p, q).str();
    }
    std::string row;
    for (const auto& cell : slots) {
      if (!row.empty()) row += ' ';
      row += std::string(width - cell.size(), ' ') + cell;
    }
    row.erase(row.find_last_not_of(' ') + 1);
    out << row << "\n";
  }
  return out.str();
}

std::string format_recipe(const Recipe& recipe) {
  std::ostringstream out;
  out << "dim " << recipe.n << "\nmod " << recipe.m << "\n";
  for (const auto& step : recipe.steps) {
    std::visit(overloaded{
                   [&](const CurveStep& s) { out << "curve " << s.genus << " " << s.degree; },
                   [&](const TowerStep& s) { out << "tower " << s.elliptic_degree << " " << s.e; },
                   [&](const BlowupPointStep&) { out << "blowup-point"; },
                   [&](const BlowupProjStep& s) { out << "blowup-proj " << s.s; },
                   [&](const BlowupBundleStep& s) {
                     out << "blowup-bundle " << s.r << " " << s.s << " " << s.d;
                   },
               },
               step);
    out << "\n";
  }
  return out.str();
}

Recipe parse_recipe(std::string_view text) {
  const auto lines = tokenize(text);
  Recipe recipe;
  std::size_t i = read_header(lines, true, recipe.n, recipe.m);
  for (; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string& key = line.tokens[0];
    if (key == "curve") {
      expect_arity(line, 3);
      recipe.steps.emplace_back(CurveStep{int_token(line, 1), int_token(line, 2)});
    } else if (key == "tower") {
      expect_arity(line, 3);
      recipe.steps.emplace_back(TowerStep{int_token(line, 1), int_token(line, 2)});
    } else if (key == "blowup-point") {
      expect_arity(line, 1);
      recipe.steps.emplace_back(BlowupPointStep{});
    } else if (key == "blowup-proj") {
      expect_arity(line, 2);
      recipe.steps.emplace_back(BlowupProjStep{small_token(line, 1)});
    } else if (key == "blowup-bundle") {
      expect_arity(line, 4);
      recipe.steps.emplace_back(
          BlowupBundleStep{small_token(line, 1), small_token(line, 2), int_token(line, 3)});
    } else {
      throw ParseError(line.number, "unknown recipe step '" + key + "'");
    }
  }
  return recipe;
}

PolynomialRelation parse_polynomial(std::string_view text) {
  const auto lines = tokenize(text);
  int n = 0;
  std::int64_t unused = 0;
  std::size_t i = read_header(lines, false, n, unused);
  bool inner = false;
  if (i < lines.size() && lines[i].tokens[0] == "inner") {
    expect_arity(lines[i], 1);
    inner = true;
    ++i;
  }

  struct RawTerm {
    std::size_t line;
    BigInt num;
    BigInt den;
    std::vector<std::pair<QuarterIndex, int>> powers;
  };
  std::vector<RawTerm> raw;
  BigInt lcm = 1;
  for (; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != "term") throw ParseError(line.number, "unknown keyword '" + line.tokens[0] + "'");
    if (line.tokens.size() < 2 || (line.tokens.size() - 2) % 3 != 0) {
      throw ParseError(line.number, "term takes a coefficient and (p q exponent) triples");
    }
    RawTerm t{line.number, 0, 1, {}};
    const std::string& c = line.tokens[1];
    try {
      if (auto slash = c.find('/'); slash != std::string::npos) {
        t.num = parse_bigint(c.substr(0, slash));
        t.den = parse_bigint(c.substr(slash + 1));
      } else {
        t.num = parse_bigint(c);
      }
    } catch (const std::exception&) {
      throw ParseError(line.number, "bad coefficient '" + c + "'");
    }
    if (t.den == 0) throw ParseError(line.number, "zero denominator");
    if (t.den < 0) {
      t.num = -t.num;
      t.den = -t.den;
    }
    for (std::size_t k = 2; k < line.tokens.size(); k += 3) {
      const int p = small_token(line, k);
      const int q = small_token(line, k + 1);
      const int e = small_token(line, k + 2);
      if (p < 0 || q < 0 || p > n || q > n) throw ParseError(line.number, "variable outside the diamond");
      if (e < 0) throw ParseError(line.number, "negative exponent");
      t.powers.push_back({{p, q}, e});
    }
    lcm = boost::multiprecision::lcm(lcm, t.den);
    raw.push_back(std::move(t));
  }

  PolynomialRelation f(n, inner);
  for (const auto& t : raw) {
    try {
      f.add_term(t.num * (lcm / t.den), t.powers);
    } catch (const OutOfRange& e) {
      throw ParseError(t.line, e.what());
    }
  }
  return f;
}

std::string format_polynomial(const PolynomialRelation& f) {
  std::ostringstream out;
  out << "dim " << f.dim() << "\n";
  if (f.inner_only()) out << "inner\n";
  for (const auto& t : f.terms()) {
    out << "term " << t.coefficient;
    for (const auto& [v, e] : t.exponents) out << " " << v.p << " " << v.q << " " << e;
    out << "\n";
  }
  return out.str();
}

std::string format_certificate(const RefutationCertificate& cert) {
  std::ostringstream out;
  for (const auto& [v, z] : cert.witness.point) out << "witness " << v.p << " " << v.q << " " << z << "\n";
  out << "f-witness " << cert.witness.value << "\n";
  out << "modulus " << cert.m << "\n";
  out << "f-diamond " << cert.diamond_value << "\n";
  out << "f-diamond-residue " << residue(cert.diamond_value, cert.m) << "\n";
  out << "diamond\n" << format_diamond(cert.diamond);
  out << "recipe\n" << format_recipe(cert.recipe);
  return out.str();
}

}  // namespace hodge
