// Command-line front end; links only the public C API.
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "perihyp.h"

int main(int argc, char** argv) {
  CLI::App app{"Spectral solver for time-periodic transport systems on [0,1]"};
  app.set_version_flag("--version", std::string(perihyp_version()));
  app.require_subcommand(1);

  std::string problem_path;
  std::string out_path;
  long k_max = -1;
  double tol = -1.0;

  const char* commands[] = {"check",  "solve",       "kernel",  "adjoint-kernel",
                            "index",  "solvability", "diagnose"};
  const char* descriptions[] = {
      "Evaluate the nonresonance condition",
      "Solve the boundary value problem for the given right-hand side",
      "Scan for kernel modes up to the cutoff",
      "Scan for adjoint kernel modes up to the cutoff",
      "Report kernel dimensions and the Fredholm index",
      "Test the right-hand side against the adjoint kernel",
      "Emit smoothing-decay and shift-modulus diagnostic tables"};

  for (int i = 0; i < 7; ++i) {
    CLI::App* sub = app.add_subcommand(commands[i], descriptions[i]);
    sub->add_option("--problem", problem_path, "Problem file (JSON)")
        ->required();
    sub->add_option("--out", out_path, "Report output path (JSON)")->required();
    sub->add_option("--k-max", k_max, "Override the mode cutoff");
    sub->add_option("--tol", tol, "Override the resonance/solvability tolerance");
  }

  CLI11_PARSE(app, argc, argv);

  const std::string command = app.get_subcommands().front()->get_name();
  const int status = perihyp_run_file(command.c_str(), problem_path.c_str(),
                                      out_path.c_str(), k_max, tol);
  if (status != PERIHYP_OK) {
    const char* message = perihyp_last_error();
    if (message && message[0] != '\0')
      std::fprintf(stderr, "%s: %s\n", command.c_str(), message);
    else
      std::fprintf(stderr, "%s: failed with status %d (see %s)\n",
                   command.c_str(), status, out_path.c_str());
  }
  return status;
}
