#include "problem_io.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "diagnostics.hpp"
#include "errors.hpp"

namespace perihyp {

namespace {

constexpr double kPi = 3.14159265358979323846;

[[noreturn]] void fail(const std::string& context, const std::string& what) {
  throw ProblemFormatError(context + ": " + what);
}

const Json& require_key(const Json& obj, const char* key, const std::string& context) {
  if (!obj.is_object()) fail(context, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(context, std::string("missing field '") + key + "'");
  return *it;
}

double as_number(const Json& value, const std::string& context) {
  if (!value.is_number()) fail(context, "expected a number");
  return value.get<double>();
}

long as_integer(const Json& value, const std::string& context) {
  if (!value.is_number_integer()) fail(context, "expected an integer");
  return value.get<long>();
}

std::vector<double> as_number_array(const Json& value, const std::string& context) {
  if (!value.is_array()) fail(context, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(value.size());
  for (const auto& item : value) out.push_back(as_number(item, context));
  return out;
}

Complex as_complex(const Json& value, const std::string& context) {
  if (value.is_number()) return Complex(value.get<double>(), 0.0);
  if (value.is_array() && value.size() == 2)
    return Complex(as_number(value[0], context), as_number(value[1], context));
  fail(context, "expected a number or [re, im] pair");
}

PiecewiseCoefficient parse_coefficient(const Json& value, const std::string& context) {
  if (value.is_number()) return PiecewiseCoefficient(value.get<double>());
  std::vector<double> breakpoints =
      as_number_array(require_key(value, "breakpoints", context), context + ".breakpoints");
  std::vector<double> values =
      as_number_array(require_key(value, "values", context), context + ".values");
  try {
    return PiecewiseCoefficient(std::move(breakpoints), std::move(values));
  } catch (const std::invalid_argument& e) {
    fail(context, e.what());
  }
}

/// One side of a mode right-hand side: either a closed-form evaluator (sampled
/// onto the solve grid later) or raw per-segment samples on their own grid.
struct ParsedExpr {
  std::function<Complex(double)> fn;
  ModeFunction raw;
};

ParsedExpr parse_expression(const Json& value, const std::string& context) {
  ParsedExpr out;
  if (value.is_null()) {
    out.fn = [](double) { return Complex(0.0); };
    return out;
  }
  if (value.is_number() || (value.is_array() && value.size() == 2)) {
    const Complex c = as_complex(value, context);
    out.fn = [c](double) { return c; };
    return out;
  }
  const Json& id = require_key(value, "expr", context);
  if (!id.is_string()) fail(context + ".expr", "expected a string");
  const std::string expr = id.get<std::string>();

  if (expr == "const") {
    Complex c(0.0);
    if (value.contains("value")) {
      c = as_complex(value["value"], context + ".value");
    } else {
      c = Complex(value.contains("re") ? as_number(value["re"], context + ".re") : 0.0,
                  value.contains("im") ? as_number(value["im"], context + ".im") : 0.0);
    }
    out.fn = [c](double) { return c; };
    return out;
  }
  if (expr == "poly") {
    const Json& coeffs = require_key(value, "coeffs", context);
    if (!coeffs.is_array()) fail(context + ".coeffs", "expected an array");
    std::vector<Complex> c;
    c.reserve(coeffs.size());
    for (const auto& item : coeffs) c.push_back(as_complex(item, context + ".coeffs"));
    out.fn = [c = std::move(c)](double x) {
      Complex acc(0.0);
      for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
      return acc;
    };
    return out;
  }
  if (expr == "trig") {
    const Json& fn_id = require_key(value, "fn", context);
    if (!fn_id.is_string()) fail(context + ".fn", "expected \"sin\" or \"cos\"");
    const std::string fn = fn_id.get<std::string>();
    if (fn != "sin" && fn != "cos") fail(context + ".fn", "expected \"sin\" or \"cos\"");
    const double p = as_number(require_key(value, "p", context), context + ".p");
    const Complex scale = value.contains("scale")
                              ? as_complex(value["scale"], context + ".scale")
                              : Complex(1.0);
    const bool is_sin = (fn == "sin");
    out.fn = [p, scale, is_sin](double x) {
      const double arg = p * kPi * x;
      return scale * (is_sin ? std::sin(arg) : std::cos(arg));
    };
    return out;
  }
  if (expr == "samples") {
    std::vector<double> breakpoints = as_number_array(
        require_key(value, "breakpoints", context), context + ".breakpoints");
    const long degree =
        as_integer(require_key(value, "degree", context), context + ".degree");
    if (degree < 3 || degree > 4096) fail(context + ".degree", "degree out of range");
    GridPtr grid;
    try {
      grid = SegmentGrid::create(std::move(breakpoints), static_cast<int>(degree));
    } catch (const std::invalid_argument& e) {
      fail(context, e.what());
    }
    const Json& re = require_key(value, "re", context);
    const Json* im = value.contains("im") ? &value["im"] : nullptr;
    if (!re.is_array() || re.size() != grid->num_segments())
      fail(context + ".re", "expected one sample array per segment");
    if (im && (!im->is_array() || im->size() != grid->num_segments()))
      fail(context + ".im", "expected one sample array per segment");
    ModeFunction f = ModeFunction::zero(grid);
    for (std::size_t s = 0; s < grid->num_segments(); ++s) {
      std::vector<double> res = as_number_array(re[s], context + ".re");
      if (res.size() != grid->points_per_segment())
        fail(context + ".re", "expected degree+1 samples per segment");
      std::vector<double> ims;
      if (im) {
        ims = as_number_array((*im)[s], context + ".im");
        if (ims.size() != grid->points_per_segment())
          fail(context + ".im", "expected degree+1 samples per segment");
      }
      for (std::size_t i = 0; i < grid->points_per_segment(); ++i)
        f.sample(s, i) = Complex(res[i], im ? ims[i] : 0.0);
    }
    out.raw = std::move(f);
    return out;
  }
  fail(context + ".expr", "unknown expression id '" + expr + "'");
}

ModeFunction realize(const ParsedExpr& expr, GridPtr grid) {
  if (expr.raw.empty()) return ModeFunction::from_function(grid, expr.fn);
  return expr.raw.resampled(std::move(grid));
}

std::vector<double> union_breakpoints(std::vector<double> base,
                                      const ParsedExpr& expr) {
  if (expr.raw.empty()) return base;
  for (double bp : expr.raw.grid()->breakpoints()) base.push_back(bp);
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  return base;
}

Json coefficient_to_json(const PiecewiseCoefficient& coef) {
  return Json{{"breakpoints", coef.breakpoints()}, {"values", coef.values()}};
}

Json samples_to_json(const ModeFunction& f, bool with_imag) {
  Json re = Json::array();
  Json im = Json::array();
  const auto& grid = *f.grid();
  for (std::size_t s = 0; s < grid.num_segments(); ++s) {
    Json seg_re = Json::array();
    Json seg_im = Json::array();
    for (std::size_t i = 0; i < grid.points_per_segment(); ++i) {
      seg_re.push_back(f.sample(s, i).real());
      seg_im.push_back(f.sample(s, i).imag());
    }
    re.push_back(std::move(seg_re));
    im.push_back(std::move(seg_im));
  }
  Json out{{"re", std::move(re)}};
  if (with_imag) out["im"] = std::move(im);
  return out;
}

Json mode_function_to_json(const ModeFunction& f) {
  Json out{{"grid",
            Json{{"breakpoints", f.grid()->breakpoints()},
                 {"degree", f.grid()->degree()}}}};
  Json samples = samples_to_json(f, true);
  out["re"] = std::move(samples["re"]);
  out["im"] = std::move(samples["im"]);
  return out;
}

ModeFunction mode_function_from_json(const Json& value, const std::string& context) {
  const Json& grid_json = require_key(value, "grid", context);
  std::vector<double> breakpoints = as_number_array(
      require_key(grid_json, "breakpoints", context), context + ".grid.breakpoints");
  const long degree = as_integer(require_key(grid_json, "degree", context),
                                 context + ".grid.degree");
  GridPtr grid;
  try {
    grid = SegmentGrid::create(std::move(breakpoints), static_cast<int>(degree));
  } catch (const std::invalid_argument& e) {
    fail(context, e.what());
  }
  const Json& re = require_key(value, "re", context);
  const Json& im = require_key(value, "im", context);
  ModeFunction f = ModeFunction::zero(grid);
  if (!re.is_array() || re.size() != grid->num_segments() || !im.is_array() ||
      im.size() != grid->num_segments())
    fail(context, "expected one sample array per segment");
  for (std::size_t s = 0; s < grid->num_segments(); ++s) {
    std::vector<double> res = as_number_array(re[s], context + ".re");
    std::vector<double> ims = as_number_array(im[s], context + ".im");
    if (res.size() != grid->points_per_segment() ||
        ims.size() != grid->points_per_segment())
      fail(context, "expected degree+1 samples per segment");
    for (std::size_t i = 0; i < grid->points_per_segment(); ++i)
      f.sample(s, i) = Complex(res[i], ims[i]);
  }
  return f;
}

Json condition_to_json(const ConditionReport& report) {
  return Json{{"lhs", report.lhs},
              {"rhs", report.rhs},
              {"satisfied", report.satisfied},
              {"delta_lower_bound", report.delta_lower_bound}};
}

Json options_to_json(const SolverOptions& options) {
  return Json{{"k_max", options.k_max},
              {"degree", options.degree},
              {"tol", options.tolerance}};
}

Json kernel_to_json(const KernelReport& report, bool include_basis) {
  Json modes = Json::array();
  for (const KernelModeEntry& entry : report.per_mode) {
    if (entry.complex_dimension == 0) continue;
    Json mode{{"k", entry.k},
              {"complex_dimension", entry.complex_dimension},
              {"abs_boundary_determinant", entry.abs_boundary_determinant},
              {"threshold", entry.threshold}};
    if (include_basis) {
      Json basis = Json::array();
      for (const ModePair& pair : entry.basis) {
        basis.push_back(Json{{"u", mode_function_to_json(pair.u)},
                             {"v", mode_function_to_json(pair.v)}});
      }
      mode["basis"] = std::move(basis);
    }
    modes.push_back(std::move(mode));
  }
  return Json{{"k_max_scanned", report.k_max_scanned},
              {"total_real_dimension", report.total_real_dimension},
              {"certification",
               report.certification == Certification::clean ? "clean" : "heuristic"},
              {"modes", std::move(modes)}};
}

Json report_envelope(const std::string& command, const SolverOptions& options) {
  return Json{{"schema_version", kSchemaVersion},
              {"tool_version", kToolVersion},
              {"command", command},
              {"options", options_to_json(options)}};
}

int error_report(Json& report, const std::string& code, const std::string& message,
                 int status) {
  report["error"] = Json{{"code", code}, {"message", message}};
  return status;
}

std::vector<long> diagnose_k_list(long cap) {
  std::vector<long> ks;
  for (long k = 1; k <= cap; k *= 2) ks.push_back(k);
  if (ks.empty()) ks.push_back(1);
  return ks;
}

}  // namespace

LoadedProblem parse_problem(const Json& file) {
  if (!file.is_object()) fail("problem", "expected a JSON object");
  const long version =
      as_integer(require_key(file, "schema_version", "problem"), "schema_version");
  if (version != kSchemaVersion)
    fail("schema_version", "unsupported schema version " + std::to_string(version));

  LoadedProblem out;
  out.config.omega = as_number(require_key(file, "omega", "problem"), "omega");
  out.config.gamma = as_number(require_key(file, "gamma", "problem"), "gamma");
  out.config.r0 = as_number(require_key(file, "r0", "problem"), "r0");
  out.config.r1 = as_number(require_key(file, "r1", "problem"), "r1");

  if (file.contains("coefficients")) {
    const Json& coeffs = file["coefficients"];
    if (!coeffs.is_object()) fail("coefficients", "expected an object");
    const char* names[] = {"a", "b", "c", "d"};
    PiecewiseCoefficient* slots[] = {&out.config.a, &out.config.b, &out.config.c,
                                     &out.config.d};
    for (int i = 0; i < 4; ++i) {
      if (coeffs.contains(names[i]))
        *slots[i] = parse_coefficient(coeffs[names[i]],
                                      std::string("coefficients.") + names[i]);
    }
  }
  try {
    out.config.validate();
  } catch (const std::invalid_argument& e) {
    fail("problem", e.what());
  }

  if (file.contains("options")) {
    const Json& options = file["options"];
    if (!options.is_object()) fail("options", "expected an object");
    if (options.contains("k_max"))
      out.options.k_max = as_integer(options["k_max"], "options.k_max");
    if (options.contains("degree"))
      out.options.degree =
          static_cast<int>(as_integer(options["degree"], "options.degree"));
    if (options.contains("tol"))
      out.options.tolerance = as_number(options["tol"], "options.tol");
    if (out.options.k_max < 0) fail("options.k_max", "must be nonnegative");
    if (out.options.degree < 3) fail("options.degree", "must be at least 3");
    if (!(out.options.tolerance > 0)) fail("options.tol", "must be positive");
  }

  out.rhs.set_gamma(out.config.gamma);
  if (file.contains("rhs")) {
    const Json& rhs = file["rhs"];
    if (!rhs.is_array()) fail("rhs", "expected an array of mode entries");
    std::size_t index = 0;
    for (const auto& entry : rhs) {
      const std::string context = "rhs[" + std::to_string(index++) + "]";
      const long k = as_integer(require_key(entry, "k", context), context + ".k");
      if (k < 0)
        fail(context + ".k",
             "negative modes are derived by conjugation; list k >= 0 only");
      if (out.rhs.has_mode(k)) fail(context + ".k", "duplicate mode");
      ParsedExpr f = parse_expression(
          entry.is_object() && entry.contains("f") ? entry["f"] : Json(nullptr),
          context + ".f");
      ParsedExpr g = parse_expression(
          entry.is_object() && entry.contains("g") ? entry["g"] : Json(nullptr),
          context + ".g");
      std::vector<double> cuts =
          union_breakpoints(union_breakpoints(out.config.merged_breakpoints(), f), g);
      int degree = solve_degree(out.config, k, out.options.degree);
      if (!f.raw.empty()) degree = std::max(degree, f.raw.grid()->degree());
      if (!g.raw.empty()) degree = std::max(degree, g.raw.grid()->degree());
      GridPtr grid = SegmentGrid::create(std::move(cuts), degree);
      out.rhs.set_mode(k, realize(f, grid), realize(g, grid));
      (void)context;
    }
  }
  out.rhs.complete_conjugate_modes();
  return out;
}

LoadedProblem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ProblemFormatError("cannot open problem file: " + path);
  Json file;
  try {
    file = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ProblemFormatError(std::string("JSON parse error: ") + e.what());
  }
  return parse_problem(file);
}

Json problem_to_json(const LoadedProblem& problem) {
  Json out{{"schema_version", kSchemaVersion},
           {"omega", problem.config.omega},
           {"gamma", problem.config.gamma},
           {"r0", problem.config.r0},
           {"r1", problem.config.r1},
           {"coefficients",
            Json{{"a", coefficient_to_json(problem.config.a)},
                 {"b", coefficient_to_json(problem.config.b)},
                 {"c", coefficient_to_json(problem.config.c)},
                 {"d", coefficient_to_json(problem.config.d)}}},
           {"options", options_to_json(problem.options)}};
  Json rhs = Json::array();
  for (const auto& [k, pair] : problem.rhs.entries()) {
    if (k < 0) continue;  // regenerated by conjugation at load time
    Json entry{{"k", k}};
    for (const auto& [name, fn] : {std::pair<const char*, const ModeFunction*>{
                                       "f", &pair.u},
                                   {"g", &pair.v}}) {
      Json expr{{"expr", "samples"},
                {"breakpoints", fn->grid()->breakpoints()},
                {"degree", fn->grid()->degree()}};
      Json samples = samples_to_json(*fn, true);
      expr["re"] = std::move(samples["re"]);
      expr["im"] = std::move(samples["im"]);
      entry[name] = std::move(expr);
    }
    rhs.push_back(std::move(entry));
  }
  out["rhs"] = std::move(rhs);
  return out;
}

Json field_to_json(const FourierField& field) {
  Json modes = Json::array();
  for (const auto& [k, pair] : field.entries()) {
    modes.push_back(Json{{"k", k},
                         {"u", mode_function_to_json(pair.u)},
                         {"v", mode_function_to_json(pair.v)}});
  }
  return Json{{"gamma", field.gamma()}, {"modes", std::move(modes)}};
}

FourierField field_from_json(const Json& value) {
  FourierField field(as_number(require_key(value, "gamma", "field"), "field.gamma"));
  const Json& modes = require_key(value, "modes", "field");
  if (!modes.is_array()) fail("field.modes", "expected an array");
  std::size_t index = 0;
  for (const auto& entry : modes) {
    const std::string context = "field.modes[" + std::to_string(index++) + "]";
    const long k = as_integer(require_key(entry, "k", context), context + ".k");
    field.set_mode(k,
                   mode_function_from_json(require_key(entry, "u", context),
                                           context + ".u"),
                   mode_function_from_json(require_key(entry, "v", context),
                                           context + ".v"));
  }
  return field;
}

int run_command_json(const std::string& command, const Json& problem_file,
                     const CommandOverrides& overrides, Json& report) {
  LoadedProblem problem;
  try {
    problem = parse_problem(problem_file);
  } catch (const ProblemFormatError& e) {
    report = report_envelope(command, SolverOptions{});
    return error_report(report, "invalid_problem", e.what(), kExitInputError);
  }
  if (overrides.k_max) problem.options.k_max = *overrides.k_max;
  if (overrides.tolerance) problem.options.tolerance = *overrides.tolerance;
  const SolverOptions& options = problem.options;
  report = report_envelope(command, options);

  try {
    if (command == "check") {
      const ConditionReport cond = check_condition(problem.config);
      report["condition"] = condition_to_json(cond);
      return cond.satisfied ? kExitOk : kExitConditionViolated;
    }
    if (command == "solve") {
      report["condition"] = condition_to_json(check_condition(problem.config));
      SolveReport solved = solve_full(problem.config, problem.rhs, options);
      report["solvable"] = solved.solvable;
      report["residual"] = solved.residual;
      Json singular = Json::array();
      for (const auto& [k, defect] : solved.singular_modes)
        singular.push_back(Json{{"k", k}, {"defect", defect}});
      report["singular_modes"] = std::move(singular);
      if (!solved.solvable)
        return error_report(report, "unsolvable_rhs",
                            "right-hand side violates a kernel orthogonality "
                            "constraint",
                            kExitUnsolvable);
      report["solution"] = field_to_json(solved.solution);
      report["solution_norm_w"] = norm_w(solved.solution, problem.config.omega);
      return kExitOk;
    }
    if (command == "kernel" || command == "adjoint-kernel") {
      report["condition"] = condition_to_json(check_condition(problem.config));
      const KernelReport result =
          command == "kernel" ? kernel(problem.config, options.k_max, options)
                              : adjoint_kernel(problem.config, options.k_max, options);
      report[command == "kernel" ? "kernel" : "adjoint_kernel"] =
          kernel_to_json(result, true);
      return kExitOk;
    }
    if (command == "index") {
      const FredholmReport result =
          index_report(problem.config, options.k_max, options);
      report["condition"] = condition_to_json(result.condition_report);
      report["dim_kernel"] = result.dim_kernel;
      report["dim_adjoint_kernel"] = result.dim_adjoint_kernel;
      report["index"] = result.index;
      report["kernel"] = kernel_to_json(result.kernel_report, false);
      report["adjoint_kernel"] = kernel_to_json(result.adjoint_kernel_report, false);
      return kExitOk;
    }
    if (command == "solvability") {
      report["condition"] = condition_to_json(check_condition(problem.config));
      const std::vector<SolvabilityDefect> defects =
          solvability_test(problem.config, problem.rhs, options.k_max, options);
      Json rows = Json::array();
      double max_defect = 0.0;
      for (const SolvabilityDefect& d : defects) {
        rows.push_back(Json{{"k", d.k}, {"element", d.element}, {"defect", d.defect}});
        max_defect = std::max(max_defect, d.defect);
      }
      report["defects"] = std::move(rows);
      report["max_defect"] = max_defect;
      const bool solvable = max_defect <= options.tolerance;
      report["solvable"] = solvable;
      if (!solvable)
        return error_report(report, "unsolvable_rhs",
                            "right-hand side has a nonzero defect against the "
                            "adjoint kernel",
                            kExitUnsolvable);
      return kExitOk;
    }
    if (command == "diagnose") {
      const ConditionReport cond = check_condition(problem.config);
      report["condition"] = condition_to_json(cond);
      if (!cond.satisfied) throw ConditionViolated(cond);

      const long cap = overrides.k_max ? *overrides.k_max : 128;
      const std::vector<long> ks = diagnose_k_list(cap);
      const std::vector<SmoothingRow> rows =
          smoothing_decay(problem.config, ks, options.degree);
      Json smoothing = Json::array();
      std::size_t positive = 0;
      for (const SmoothingRow& row : rows) {
        smoothing.push_back(Json{{"k", row.k},
                                 {"output_norm", row.output_norm},
                                 {"ratio", row.ratio}});
        if (row.output_norm > 0.0) ++positive;
      }
      report["smoothing"] = std::move(smoothing);
      report["smoothing_slope"] =
          positive >= 2 ? Json(log_log_slope(rows)) : Json(nullptr);

      const FourierField witness = noncompact_sequence(problem.config, 8);
      const double period = 2.0 * kPi / problem.config.omega;
      Json shifts = Json::array();
      for (double xi : {0.0, 0.02, 0.05, 0.1}) {
        for (double tau : {0.0, period / 8.0, period / 4.0}) {
          shifts.push_back(
              Json{{"xi", xi},
                   {"tau", tau},
                   {"modulus",
                    shift_modulus(witness, problem.config.omega, xi, tau)}});
        }
      }
      report["shift_modulus"] = std::move(shifts);
      return kExitOk;
    }
  } catch (const ConditionViolated& e) {
    report["condition"] = condition_to_json(e.report);
    return error_report(report, "condition_violated", e.what(),
                        kExitConditionViolated);
  } catch (const std::exception& e) {
    return error_report(report, "internal_error", e.what(), kExitInputError);
  }
  return error_report(report, "unknown_command",
                      "unknown command '" + command + "'", kExitInputError);
}

namespace {

bool write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << text;
  return static_cast<bool>(out);
}

std::string csv_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void write_diagnose_csv(const Json& report, const std::string& out_path) {
  if (report.contains("smoothing")) {
    std::string csv = "k,output_norm,ratio\n";
    for (const auto& row : report["smoothing"]) {
      csv += std::to_string(row["k"].get<long>()) + "," +
             csv_number(row["output_norm"].get<double>()) + "," +
             csv_number(row["ratio"].get<double>()) + "\n";
    }
    write_text(out_path + ".smoothing.csv", csv);
  }
  if (report.contains("shift_modulus")) {
    std::string csv = "xi,tau,modulus\n";
    for (const auto& row : report["shift_modulus"]) {
      csv += csv_number(row["xi"].get<double>()) + "," +
             csv_number(row["tau"].get<double>()) + "," +
             csv_number(row["modulus"].get<double>()) + "\n";
    }
    write_text(out_path + ".shift.csv", csv);
  }
}

}  // namespace

int run_command(const std::string& command, const std::string& problem_path,
                const std::string& out_path, const CommandOverrides& overrides) {
  Json report;
  int status;
  std::ifstream in(problem_path);
  if (!in) {
    report = Json{{"schema_version", kSchemaVersion},
                  {"tool_version", kToolVersion},
                  {"command", command}};
    status = error_report(report, "io_error",
                          "cannot open problem file: " + problem_path,
                          kExitInputError);
  } else {
    Json file;
    try {
      file = Json::parse(in);
      status = run_command_json(command, file, overrides, report);
    } catch (const Json::parse_error& e) {
      report = Json{{"schema_version", kSchemaVersion},
                    {"tool_version", kToolVersion},
                    {"command", command}};
      status = error_report(report, "parse_error", e.what(), kExitInputError);
    }
  }
  if (!write_text(out_path, dump_deterministic(report)))
    return kExitInputError;
  if (command == "diagnose" && status == kExitOk)
    write_diagnose_csv(report, out_path);
  return status;
}

}  // namespace perihyp
