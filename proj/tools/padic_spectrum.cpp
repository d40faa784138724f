#include "padic/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  using padic::cli::Config;
  CLI::App app{"Certified spectra of the p-adic tree derivative operators"};
  app.require_subcommand(1);

  Config config;
  std::string format = "json";

  auto common = [&](CLI::App* sub, const char* formats) {
    sub->add_option("--p", config.p, "prime")->capture_default_str();
    sub->add_option("--digits", config.digits, "relative precision in decimal digits (>= 6)")->capture_default_str();
    sub->add_option("--format", format, formats)->capture_default_str();
  };

  auto* eig = app.add_subcommand("eigenvalues", "certified eigenvalues of D0*D0");
  common(eig, "json|csv|text");
  eig->add_option("--count", config.count, "number of eigenvalues")->capture_default_str();

  auto* vec = app.add_subcommand("eigenvector", "expansion coefficients and residual of one eigenvector");
  common(vec, "json|csv|text");
  vec->add_option("--index", config.index, "eigenvalue index n")->capture_default_str();
  vec->add_option("--terms", config.terms, "number of coefficients K")->capture_default_str();
  vec->add_option("--samples", config.samples, "samples used for the residual")->capture_default_str();

  auto* spec = app.add_subcommand("spectrum", "eigenvalues of D*D up to a cutoff, with multiplicities");
  common(spec, "json|csv|text");
  spec->add_option("--cutoff", config.cutoff, "largest eigenvalue reported")->capture_default_str();

  auto* zeta = app.add_subcommand("zeta", "spectral zeta functions");
  common(zeta, "json|csv|text");
  zeta->add_option("--s", config.s, "argument as re[,im]")->capture_default_str();
  zeta->add_option("--mode", config.mode, "paper|verified")->capture_default_str();
  zeta->add_option("--eps", config.eps, "absolute error target")->capture_default_str();

  auto* tree = app.add_subcommand("tree", "structure of the truncated tree");
  common(tree, "json|csv|text|dot");
  tree->add_option("--depth", config.depth, "deepest level")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "oracle suite; exits 1 on any failure");
  common(verify, "json|csv|text");
  verify->add_option("--count", config.count, "eigenvalues compared against the oracle")->capture_default_str();
  verify->add_option("--N", config.N, "half-line truncation size")->capture_default_str();
  verify->add_option("--depth", config.depth, "tree depth for the multiplicity experiment")->capture_default_str();
  verify->add_option("--dump-matrix", config.dump_matrix, "write the truncated D0*D0 matrix to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : padic::cli::kExitInvalidConfig;
  }

  try {
    config.command = padic::cli::command_from_string(app.get_subcommands().front()->get_name());
    config.format = padic::cli::format_from_string(format);
    padic::cli::apply_environment(config);
  } catch (const padic::cli::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return padic::cli::kExitInvalidConfig;
  }
  return padic::cli::run(config, std::cout, std::cerr);
}
