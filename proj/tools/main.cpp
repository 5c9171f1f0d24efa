#include <CLI11.hpp>

#include <exception>
#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Eigenvalue branches of the magnetic Laplacian on the unit disc"};
  app.require_subcommand(1);

  landau::cli::BranchArgs branch;
  auto* cb = app.add_subcommand("branch", "Sweep one (m, n) branch over a field grid");
  cb->add_option("--m", branch.m, "angular momentum")->required();
  cb->add_option("--n", branch.n, "branch index, 1-based")->required();
  cb->add_option("--bc", branch.bc, "dirichlet | neumann | robin:GAMMA")->required();
  cb->add_option("--b-min", branch.b_min, "lowest field value")->required();
  cb->add_option("--b-max", branch.b_max, "highest field value")->required();
  cb->add_option("--b-steps", branch.b_steps, "grid size, endpoints included")->required();
  cb->add_option("--method", branch.method, "fem | kummer | asymptotic | all (default all)");

  landau::cli::SpectrumArgs spectrum;
  auto* cs = app.add_subcommand("spectrum", "Assemble the full-disc spectrum at one field value");
  cs->add_option("--b", spectrum.b, "field value")->required();
  cs->add_option("--bc", spectrum.bc, "dirichlet | neumann | robin:GAMMA")->required();
  cs->add_option("--m-max", spectrum.m_max, "include |m| up to this")->required();
  cs->add_option("--n-max", spectrum.n_max, "include n up to this")->required();
  cs->add_option("--lambda-max", spectrum.lambda_max, "truncate above this")->required();
  cs->add_option("--method", spectrum.method, "fem | kummer (default fem)");

  landau::cli::BracketArgs bracket;
  auto* ck = app.add_subcommand("bracket", "Certified two-sided bracket for one branch point");
  ck->add_option("--m", bracket.m, "angular momentum")->required();
  ck->add_option("--n", bracket.n, "branch index")->required();
  ck->add_option("--b", bracket.b, "field value")->required();
  ck->add_option("--bc", bracket.bc, "dirichlet | neumann | robin:GAMMA")->required();
  ck->add_option("--floor-c", bracket.floor_c, "spectral floor constant (default 2)");

  landau::cli::VerifyArgs verify;
  auto* cv = app.add_subcommand("verify", "Run invariant suites and report measured vs threshold");
  cv->add_option("--suite", verify.suite,
                 "specfun | trial | variational | fiber | kummer | all (default all)");
  cv->add_option("--floor-c", verify.floor_c, "spectral floor constant (default 2)");

  landau::cli::FigureArgs figure;
  auto* cf = app.add_subcommand("figure", "Emit figure CSV data for all branches");
  cf->add_option("--bc", figure.bc, "dirichlet | neumann")->required();
  cf->add_option("--out-dir", figure.out_dir, "output directory")->required();
  cf->add_option("--b-max", figure.b_max, "highest field value (default 50)");
  cf->add_option("--b-steps", figure.b_steps, "field grid size")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*cb) return landau::cli::cmd_branch(branch, std::cout, std::cerr);
    if (*cs) return landau::cli::cmd_spectrum(spectrum, std::cout, std::cerr);
    if (*ck) return landau::cli::cmd_bracket(bracket, std::cout, std::cerr);
    if (*cv) return landau::cli::cmd_verify(verify, std::cout, std::cerr);
    if (*cf) return landau::cli::cmd_figure(figure, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
