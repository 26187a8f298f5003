#include "perihyp.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <string>

#include "problem_io.hpp"

using namespace perihyp;

struct perihyp_problem {
  Json file;  // validated at construction; commands re-parse to stay stateless
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int set_error(const std::string& message, int status) {
  g_last_error = message;
  return status;
}

CommandOverrides make_overrides(long k_max_override, double tol_override) {
  CommandOverrides overrides;
  if (k_max_override >= 0) overrides.k_max = k_max_override;
  if (tol_override > 0) overrides.tolerance = tol_override;
  return overrides;
}

}  // namespace

extern "C" {

const char* perihyp_version(void) { return kToolVersion; }

int perihyp_problem_parse(const char* json_text, perihyp_problem** out) {
  if (!json_text || !out) return set_error("null argument", PERIHYP_INPUT_ERROR);
  *out = nullptr;
  try {
    Json file = Json::parse(json_text);
    parse_problem(file);  // validate now so the handle is known-good
    *out = new perihyp_problem{std::move(file)};
    g_last_error.clear();
    return PERIHYP_OK;
  } catch (const std::exception& e) {
    return set_error(e.what(), PERIHYP_INPUT_ERROR);
  }
}

int perihyp_problem_load(const char* path, perihyp_problem** out) {
  if (!path || !out) return set_error("null argument", PERIHYP_INPUT_ERROR);
  *out = nullptr;
  try {
    std::ifstream in(path);
    if (!in)
      return set_error(std::string("cannot open problem file: ") + path,
                       PERIHYP_INPUT_ERROR);
    Json file = Json::parse(in);
    parse_problem(file);
    *out = new perihyp_problem{std::move(file)};
    g_last_error.clear();
    return PERIHYP_OK;
  } catch (const std::exception& e) {
    return set_error(e.what(), PERIHYP_INPUT_ERROR);
  }
}

void perihyp_problem_free(perihyp_problem* problem) { delete problem; }

int perihyp_problem_dump(const perihyp_problem* problem, char** json_out) {
  if (!problem || !json_out) return set_error("null argument", PERIHYP_INPUT_ERROR);
  *json_out = nullptr;
  try {
    const LoadedProblem loaded = parse_problem(problem->file);
    *json_out = dup_string(dump_deterministic(problem_to_json(loaded)));
    if (!*json_out) return set_error("out of memory", PERIHYP_INPUT_ERROR);
    g_last_error.clear();
    return PERIHYP_OK;
  } catch (const std::exception& e) {
    return set_error(e.what(), PERIHYP_INPUT_ERROR);
  }
}

int perihyp_run(const perihyp_problem* problem, const char* command,
                long k_max_override, double tol_override, char** report_out) {
  if (!problem || !command || !report_out)
    return set_error("null argument", PERIHYP_INPUT_ERROR);
  *report_out = nullptr;
  try {
    Json report;
    const int status = run_command_json(
        command, problem->file, make_overrides(k_max_override, tol_override),
        report);
    *report_out = dup_string(dump_deterministic(report));
    if (!*report_out) return set_error("out of memory", PERIHYP_INPUT_ERROR);
    if (status == PERIHYP_OK)
      g_last_error.clear();
    else if (report.contains("error"))
      g_last_error = report["error"]["message"].get<std::string>();
    return status;
  } catch (const std::exception& e) {
    return set_error(e.what(), PERIHYP_INPUT_ERROR);
  }
}

int perihyp_run_file(const char* command, const char* problem_path,
                     const char* out_path, long k_max_override,
                     double tol_override) {
  if (!command || !problem_path || !out_path)
    return set_error("null argument", PERIHYP_INPUT_ERROR);
  try {
    const int status = run_command(command, problem_path, out_path,
                                   make_overrides(k_max_override, tol_override));
    if (status == PERIHYP_OK) g_last_error.clear();
    return status;
  } catch (const std::exception& e) {
    return set_error(e.what(), PERIHYP_INPUT_ERROR);
  }
}

const char* perihyp_last_error(void) { return g_last_error.c_str(); }

void perihyp_string_free(char* text) { std::free(text); }

}  // extern "C"
