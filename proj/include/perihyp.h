/* C interface to the periodic transport solver.
 *
 * All functions are thread-compatible: distinct handles may be used from
 * distinct threads.  Strings returned through out-parameters are heap
 * allocated and must be released with perihyp_string_free.
 */
#ifndef PERIHYP_H
#define PERIHYP_H

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as process exit codes of the CLI. */
enum {
  PERIHYP_OK = 0,
  PERIHYP_INPUT_ERROR = 1,
  PERIHYP_CONDITION_VIOLATED = 2,
  PERIHYP_UNSOLVABLE = 3
};

typedef struct perihyp_problem perihyp_problem;

const char* perihyp_version(void);

/* Parses a problem from a JSON string / loads it from a file.  On success
 * returns PERIHYP_OK and stores a handle in *out; on failure stores NULL and
 * the error is retrievable via perihyp_last_error. */
int perihyp_problem_parse(const char* json_text, perihyp_problem** out);
int perihyp_problem_load(const char* path, perihyp_problem** out);
void perihyp_problem_free(perihyp_problem* problem);

/* Serializes the problem back to deterministic JSON (round-trip safe). */
int perihyp_problem_dump(const perihyp_problem* problem, char** json_out);

/* Runs one command (check, solve, kernel, adjoint-kernel, index, solvability,
 * diagnose) against a parsed problem and returns the report as JSON text in
 * *report_out.  k_max_override < 0 and tol_override <= 0 mean "use the
 * problem's own options".  The returned status is the CLI exit code; a report
 * is produced even for failing statuses whenever the input parsed. */
int perihyp_run(const perihyp_problem* problem, const char* command,
                long k_max_override, double tol_override, char** report_out);

/* File-to-file variant used by the CLI: reads the problem from problem_path,
 * writes the JSON report to out_path (plus companion CSV tables for
 * diagnose). */
int perihyp_run_file(const char* command, const char* problem_path,
                     const char* out_path, long k_max_override,
                     double tol_override);

/* Last error message of the calling thread ("" if none). */
const char* perihyp_last_error(void);

void perihyp_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* PERIHYP_H */
