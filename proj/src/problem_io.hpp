#pragma once

#include <optional>
#include <string>

#include "diagnostics.hpp"
#include "json_format.hpp"
#include "spectral_solver.hpp"

namespace perihyp {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

/// Raised on malformed problem files; message names the offending field or
/// invariant.
struct ProblemFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LoadedProblem {
  ProblemConfig config;
  FourierField rhs;
  SolverOptions options;
};

LoadedProblem parse_problem(const Json& file);
LoadedProblem load_problem(const std::string& path);

/// Problem serialization; the right-hand side is written as raw samples, so a
/// write/load cycle reproduces every sample bit-exactly.
Json problem_to_json(const LoadedProblem& problem);

Json field_to_json(const FourierField& field);
FourierField field_from_json(const Json& value);

/// Exit statuses of run_command (also used by the CLI).
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitConditionViolated = 2;
inline constexpr int kExitUnsolvable = 3;

struct CommandOverrides {
  std::optional<long> k_max;
  std::optional<double> tolerance;
};

/// Runs one of: check, solve, kernel, adjoint-kernel, index, solvability,
/// diagnose.  Writes a deterministic JSON report to out_path (plus companion
/// CSV tables for diagnose) and returns the exit status.
int run_command(const std::string& command, const std::string& problem_path,
                const std::string& out_path, const CommandOverrides& overrides = {});

/// In-memory variant: report JSON is returned through `report`.
int run_command_json(const std::string& command, const Json& problem_file,
                     const CommandOverrides& overrides, Json& report);

}  // namespace perihyp
