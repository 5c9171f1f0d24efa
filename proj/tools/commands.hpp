#ifndef LANDAU_TOOLS_COMMANDS_HPP
#define LANDAU_TOOLS_COMMANDS_HPP

#include <iosfwd>
#include <string>

namespace landau::cli {

// Exit codes shared by every subcommand: 0 ok, 1 verification failure,
// 2 usage error, 3 runtime/solver failure. Commands write CSV to `out`
// only after the whole table is computed, so a failing run emits nothing.

struct BranchArgs {
  int m = 0;
  int n = 1;
  std::string bc = "neumann";
  double b_min = 10.0;
  double b_max = 30.0;
  int b_steps = 5;
  std::string method = "all";  // fem | kummer | asymptotic | all
};
int cmd_branch(const BranchArgs& args, std::ostream& out, std::ostream& err);

struct SpectrumArgs {
  double b = 25.0;
  std::string bc = "neumann";
  int m_max = 10;
  int n_max = 3;
  double lambda_max = 125.0;
  std::string method = "fem";  // fem | kummer
};
int cmd_spectrum(const SpectrumArgs& args, std::ostream& out, std::ostream& err);

struct BracketArgs {
  int m = 0;
  int n = 1;
  double b = 25.0;
  std::string bc = "neumann";
  double floor_c = 2.0;
};
int cmd_bracket(const BracketArgs& args, std::ostream& out, std::ostream& err);

struct VerifyArgs {
  std::string suite = "all";  // specfun | trial | variational | fiber | kummer | all
  double floor_c = 2.0;
};
int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);

struct FigureArgs {
  std::string bc = "neumann";  // dirichlet | neumann
  std::string out_dir;
  double b_max = 50.0;
  int b_steps = 25;
};
int cmd_figure(const FigureArgs& args, std::ostream& out, std::ostream& err);

}  // namespace landau::cli

#endif
