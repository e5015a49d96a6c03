// Command-line front end: frobius <subcommand> [options]. Exit status is 0 on
// success, 1 on a domain error and 2 on a usage error.

#include <CLI11.hpp>

#include <string>

#include "commands.hpp"

using namespace frobius::cli;

int main(int argc, char** argv) {
  CLI::App app{"Terms, normal forms and representations of the free commutative Frobenius PROP"};
  app.require_subcommand(1);
  Config cfg;
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--size-guard", cfg.sizeGuard, "Maximum number of matrix entries")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for randomized commands");

  std::string termA, termB, diagram, algebra, via = "both";
  std::uint32_t p = 2;
  bool parts = false;
  std::size_t scale = 1;

  auto* check = app.add_subcommand("check", "Parse and type-check a term");
  check->add_option("term", termA, "Term, or - for stdin")->required();
  auto* norm = app.add_subcommand("normalize", "Print the normal form of a term");
  norm->add_option("term", termA, "Term, or - for stdin")->required();
  auto* eq = app.add_subcommand("eq", "Decide whether two terms are equal");
  eq->add_option("lhs", termA)->required();
  eq->add_option("rhs", termB)->required();
  auto* skel = app.add_subcommand("skeleton", "Print the cobordism skeleton of a term");
  skel->add_option("term", termA, "Term, or - for stdin")->required();
  auto* compose = app.add_subcommand("onecob-compose", "Compose two 1-cobordism diagrams, g after f");
  compose->add_option("g", termA)->required();
  compose->add_option("f", termB)->required();
  auto* brauer = app.add_subcommand("brauer", "Matrix of a 1-cobordism diagram");
  brauer->add_option("--p", p, "Dimension of the point")->check(CLI::Range(2u, 1u << 16))->required();
  brauer->add_option("--diagram", diagram, "signs_in ; signs_out ; pairs ; circles")->required();
  brauer->add_flag("--parts", parts, "Also print the circle count and the 0-1 matrix");
  auto* eval = app.add_subcommand("eval", "Evaluate a term in a Frobenius algebra");
  eval->add_option("--algebra", algebra, "Algebra JSON file")->required()->check(CLI::ExistingFile);
  eval->add_option("--term", termA, "Term, or - for stdin")->required();
  eval->add_option("--via", via, "Evaluation path")->check(CLI::IsMember({"normal", "term", "both"}));
  auto* fuzz = app.add_subcommand("fuzz", "Run the property suites");
  fuzz->add_option("--scale", scale, "Multiplier on case counts")->check(CLI::PositiveNumber);

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  cfg.format = format == "json" ? Format::Json : Format::Text;

  try {
    if (*check) return runCheck(cfg, termA);
    if (*norm) return runNormalize(cfg, termA);
    if (*eq) return runEq(cfg, termA, termB);
    if (*skel) return runSkeleton(cfg, termA);
    if (*compose) return runCompose(cfg, termA, termB);
    if (*brauer) return runBrauer(cfg, p, diagram, parts);
    if (*eval) return runEval(cfg, algebra, termA, via);
    if (*fuzz) return runFuzz(cfg, scale);
  } catch (const frobius::Error& e) {
    reportError(cfg, e);
    return 1;
  }
  return 2;
}
