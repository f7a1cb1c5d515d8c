// hodge: construct, verify and inspect Hodge diamonds modulo an integer.
//
// Exit codes: 0 success, 1 verification or congruence failure, 2 parse error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hodge/blocks.hpp"
#include "hodge/construct.hpp"
#include "hodge/enumerate.hpp"
#include "hodge/error.hpp"
#include "hodge/relations.hpp"
#include "hodge/text_format.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kParse = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void print_diamond(const hodge::HodgeDiamond& d, bool pretty) {
  std::cout << (pretty ? hodge::format_diamond_pretty(d) : hodge::format_diamond(d));
}

int report_mismatches(const hodge::HodgeDiamond& d, const hodge::ResidueTarget& target) {
  int status = kOk;
  for (const auto& idx : hodge::congruence_mismatches(d, target)) {
    std::cerr << "mismatch h " << idx.p << " " << idx.q << "\n";
    status = kFailed;
  }
  for (const auto& v : hodge::validate(d, true)) {
    std::cerr << "invalid " << v << "\n";
    status = kFailed;
  }
  return status;
}

int run_construct(const std::string& target_path, const std::string& recipe_out, bool pretty) {
  const auto target = hodge::parse_target(slurp(target_path));
  const auto result = hodge::construct(target);
  if (!recipe_out.empty()) {
    std::ofstream out(recipe_out);
    if (!out) throw InputError("cannot write " + recipe_out);
    out << hodge::format_recipe(result.recipe);
  }
  print_diamond(result.diamond, pretty);
  return report_mismatches(result.diamond, target);
}

int run_verify(const std::string& recipe_path, const std::string& target_path) {
  const auto recipe = hodge::parse_recipe(slurp(recipe_path));
  const auto target = hodge::parse_target(slurp(target_path));
  if (recipe.n != target.dim()) {
    std::cerr << "recipe dimension " << recipe.n << " differs from target " << target.dim() << "\n";
    return kFailed;
  }
  if (recipe.m != target.modulus()) {
    std::cerr << "recipe modulus " << recipe.m << " differs from target " << target.modulus() << "\n";
    return kFailed;
  }
  const auto d = hodge::eval_recipe(recipe);
  const int status = report_mismatches(d, target);
  std::cout << (status == kOk ? "verified\n" : "failed\n");
  return status;
}

// --inner rebuilds the relation so that outer variables are rejected.
hodge::PolynomialRelation restrict_to_inner(const hodge::PolynomialRelation& f) {
  hodge::PolynomialRelation inner(f.dim(), true);
  try {
    for (const auto& term : f.terms()) {
      inner.add_term(term.coefficient, {term.exponents.begin(), term.exponents.end()});
    }
  } catch (const hodge::OutOfRange& e) {
    throw InputError(e.what());
  }
  return inner;
}

int run_refute(const std::string& poly_path, bool inner) {
  auto f = hodge::parse_polynomial(slurp(poly_path));
  if (inner && !f.inner_only()) f = restrict_to_inner(f);
  const auto cert = hodge::refute(f);
  std::cout << hodge::format_certificate(cert);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hodge diamonds modulo an integer: construction recipes and relation refuter"};
  app.require_subcommand(1);

  std::string target_path;
  std::string recipe_path;
  std::string recipe_out;
  std::string poly_path;
  bool pretty = false;
  bool inner = false;
  int dim = 0;
  int mod = 0;
  std::int64_t degree = 0;
  unsigned jobs = 1;

  auto* construct = app.add_subcommand("construct", "build a recipe realizing a target mod m");
  construct->add_option("--target", target_path, "target file")->required();
  construct->add_option("--recipe-out", recipe_out, "write the recipe here");
  construct->add_flag("--pretty", pretty, "print the centered diamond");

  auto* verify = app.add_subcommand("verify", "re-evaluate a recipe against a target");
  verify->add_option("--recipe", recipe_path, "recipe file")->required();
  verify->add_option("--target", target_path, "target file")->required();

  auto* eval = app.add_subcommand("eval", "evaluate a recipe to its exact diamond");
  eval->add_option("--recipe", recipe_path, "recipe file")->required();
  eval->add_flag("--pretty", pretty, "print the centered diamond");

  auto* hyper = app.add_subcommand("hypersurface", "diamond of a smooth hypersurface Y_d in P^{N+1}");
  hyper->add_option("--dim", dim, "dimension N of Y_d")->required()->check(CLI::Range(0, 64));
  hyper->add_option("--degree", degree, "degree d")->required()->check(CLI::PositiveNumber);
  hyper->add_flag("--pretty", pretty, "print the centered diamond");

  auto* enumerate = app.add_subcommand("enumerate", "construct every target of a given (n, m)");
  enumerate->add_option("--dim", dim, "dimension n")->required()->check(CLI::Range(1, 64));
  enumerate->add_option("--mod", mod, "modulus m")->required()->check(CLI::Range(2, 1 << 20));
  enumerate->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 1024u));

  auto* refute = app.add_subcommand("refute", "show a polynomial is not a Hodge relation");
  refute->add_option("--poly", poly_path, "polynomial file")->required();
  refute->add_flag("--inner", inner, "only inner entries may appear (outer residues fixed to 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*construct) return run_construct(target_path, recipe_out, pretty);
    if (*verify) return run_verify(recipe_path, target_path);
    if (*eval) {
      print_diamond(hodge::eval_recipe(hodge::parse_recipe(slurp(recipe_path))), pretty);
      return kOk;
    }
    if (*hyper) {
      print_diamond(hodge::hypersurface_diamond({dim, degree}), pretty);
      return kOk;
    }
    if (*enumerate) {
      const auto report = hodge::enumerate_targets(dim, mod, jobs);
      std::cout << report.summary() << "\n";
      return report.first_failure ? kFailed : kOk;
    }
    if (*refute) return run_refute(poly_path, inner);
  } catch (const hodge::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const InputError& e) {
    std::cerr << e.what() << "\n";
    return kParse;
  } catch (const hodge::MalformedRecipe& e) {
    std::cerr << "malformed recipe: " << e.what() << "\n";
    return kFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kOk;
}
