// convsolve command-line front end: forward convolution, solvability
// analysis, structured solves, the solvability sweep, the emboss-reflexive
// spectrum experiment, and the property-verification harness.
//
// Exit codes: 0 ok, 1 property failure, 2 usage/parse error, 3 dimension
// error, 4 analytic/numeric mismatch or spectrum check failure, 5 not
// uniquely solvable, 6 residual verification failure.

#include <convsolve/convsolve.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDimension = 3;
constexpr int kExitMismatch = 4;
constexpr int kExitNotSolvable = 5;
constexpr int kExitResidual = 6;

struct Mat {
  int64_t rows = 0;
  int64_t cols = 0;
  std::vector<double> data;  // row-major
};

std::string format_entry(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

bool write_matrix_csv(const std::string& path, const Mat& m) {
  std::ofstream out(path);
  if (!out) return false;
  for (int64_t i = 0; i < m.rows; ++i) {
    for (int64_t j = 0; j < m.cols; ++j) {
      if (j > 0) out << ',';
      out << format_entry(m.data[static_cast<size_t>(i * m.cols + j)]);
    }
    out << '\n';
  }
  return static_cast<bool>(out);
}

std::optional<Mat> read_matrix_csv(const std::string& path, std::string& error) {
  std::ifstream in(path);
  if (!in) {
    error = "cannot open '" + path + "'";
    return std::nullopt;
  }
  Mat m;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() && in.peek() == EOF) break;  // trailing newline
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      size_t consumed = 0;
      double value = 0.0;
      try {
        value = std::stod(cell, &consumed);
      } catch (...) {
        error = "malformed number '" + cell + "' in '" + path + "'";
        return std::nullopt;
      }
      while (consumed < cell.size() && std::isspace(static_cast<unsigned char>(cell[consumed]))) {
        ++consumed;
      }
      if (consumed != cell.size()) {
        error = "malformed number '" + cell + "' in '" + path + "'";
        return std::nullopt;
      }
      row.push_back(value);
    }
    if (row.empty()) {
      error = "empty row in '" + path + "'";
      return std::nullopt;
    }
    if (m.cols == 0) {
      m.cols = static_cast<int64_t>(row.size());
    } else if (m.cols != static_cast<int64_t>(row.size())) {
      error = "ragged rows in '" + path + "'";
      return std::nullopt;
    }
    m.data.insert(m.data.end(), row.begin(), row.end());
    ++m.rows;
  }
  if (m.rows == 0) {
    error = "no rows in '" + path + "'";
    return std::nullopt;
  }
  return m;
}

struct MatrixHandle {
  convsolve_matrix* ptr = nullptr;
  ~MatrixHandle() { convsolve_matrix_free(ptr); }
};

Mat extract(const convsolve_matrix* handle) {
  Mat m;
  m.rows = convsolve_matrix_rows(handle);
  m.cols = convsolve_matrix_cols(handle);
  m.data.resize(static_cast<size_t>(m.rows * m.cols));
  convsolve_matrix_data(handle, m.data.data());
  return m;
}

struct FilterSpec {
  std::string argument;     // as given on the command line
  bool catalog = false;     // true when argument names a catalog filter
  double kernel[9] = {0.0};
};

// Resolves --filter: a catalog name, or a path to a 3x3 CSV kernel.
std::optional<FilterSpec> resolve_filter(const std::string& arg, std::string& error) {
  FilterSpec spec;
  spec.argument = arg;
  if (convsolve_filter_is_known(arg.c_str())) {
    spec.catalog = true;
    convsolve_filter_kernel(arg.c_str(), spec.kernel);
    return spec;
  }
  const auto m = read_matrix_csv(arg, error);
  if (!m) {
    error = "filter '" + arg + "' is not a catalog name and " + error;
    return std::nullopt;
  }
  if (m->rows != 3 || m->cols != 3) {
    error = "kernel file '" + arg + "' must be exactly 3x3";
    return std::nullopt;
  }
  for (int k = 0; k < 9; ++k) spec.kernel[k] = m->data[static_cast<size_t>(k)];
  return spec;
}

std::optional<convsolve_bc> resolve_bc(const std::string& name) {
  if (name == "zero") return CONVSOLVE_BC_ZERO;
  if (name == "periodic") return CONVSOLVE_BC_PERIODIC;
  if (name == "reflexive") return CONVSOLVE_BC_REFLEXIVE;
  return std::nullopt;
}

const char* bc_label(convsolve_bc bc) {
  switch (bc) {
    case CONVSOLVE_BC_ZERO: return "zero";
    case CONVSOLVE_BC_PERIODIC: return "periodic";
    case CONVSOLVE_BC_REFLEXIVE: return "reflexive";
  }
  return "?";
}

const char* verdict_label(convsolve_solvable s) {
  switch (s) {
    case CONVSOLVE_UNSOLVABLE: return "no";
    case CONVSOLVE_SOLVABLE: return "yes";
    case CONVSOLVE_CONJECTURED_SOLVABLE: return "conjectured-yes";
  }
  return "?";
}

json verdict_to_json(const std::string& filter, convsolve_bc bc, int64_t m,
                     int64_t n, const convsolve_verdict& v) {
  json j;
  j["filter"] = filter;
  j["bc"] = bc_label(bc);
  j["m"] = m;
  j["n"] = n;
  j["verdict"] = verdict_label(v.solvable);
  j["condition"] = v.condition;
  j["witness_re"] = v.has_witness ? json(v.witness_re) : json(nullptr);
  j["witness_im"] = v.has_witness ? json(v.witness_im) : json(nullptr);
  j["residual"] = nullptr;
  j["path"] = nullptr;
  return j;
}

int fail_usage(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return kExitUsage;
}

// ---- apply -------------------------------------------------------------

int cmd_apply(const std::string& filter_arg, const std::string& bc_arg,
              const std::string& input, const std::string& output) {
  std::string error;
  const auto filter = resolve_filter(filter_arg, error);
  if (!filter) return fail_usage(error);
  const auto bc = resolve_bc(bc_arg);
  if (!bc) return fail_usage("unknown boundary condition '" + bc_arg + "'");
  const auto x = read_matrix_csv(input, error);
  if (!x) return fail_usage(error);

  MatrixHandle xh;
  if (convsolve_matrix_create(x->rows, x->cols, x->data.data(), &xh.ptr) != CONVSOLVE_OK) {
    return fail_usage("cannot create matrix from '" + input + "'");
  }
  MatrixHandle bh;
  const convsolve_status st = convsolve_convolve(filter->kernel, *bc, xh.ptr, &bh.ptr);
  if (st == CONVSOLVE_ERROR_DIMENSION_TOO_SMALL) {
    std::cerr << "error: input must be at least 2x2\n";
    return kExitDimension;
  }
  if (st != CONVSOLVE_OK) return fail_usage(convsolve_status_name(st));
  if (!write_matrix_csv(output, extract(bh.ptr))) {
    return fail_usage("cannot write '" + output + "'");
  }
  return kExitOk;
}

// ---- analyze -------------------------------------------------------------

int cmd_analyze(const std::string& filter_arg, const std::string& bc_arg,
                int64_t m, int64_t n, bool numeric, bool as_json) {
  const std::vector<std::string> catalog = {"box", "gus", "eda", "edb",
                                            "edc", "shp", "emb"};
  std::vector<std::string> filters;
  std::optional<FilterSpec> generic;
  if (filter_arg == "all") {
    filters = catalog;
  } else if (convsolve_filter_is_known(filter_arg.c_str())) {
    filters = {filter_arg};
  } else {
    std::string error;
    generic = resolve_filter(filter_arg, error);
    if (!generic) return fail_usage(error);
  }
  std::vector<convsolve_bc> bcs;
  if (bc_arg == "all") {
    bcs = {CONVSOLVE_BC_ZERO, CONVSOLVE_BC_PERIODIC, CONVSOLVE_BC_REFLEXIVE};
  } else {
    const auto bc = resolve_bc(bc_arg);
    if (!bc) return fail_usage("unknown boundary condition '" + bc_arg + "'");
    bcs = {*bc};
  }

  json out = json::array();
  bool mismatch = false;

  auto check_dimension = [&](convsolve_status st) {
    if (st == CONVSOLVE_ERROR_DIMENSION_TOO_SMALL) {
      std::cerr << "error: m and n must be at least 2\n";
      return true;
    }
    if (st == CONVSOLVE_ERROR_SIZE_CAP_EXCEEDED) {
      std::cerr << "error: m*n exceeds the operator size cap ("
                << convsolve_size_cap() << ")\n";
      return true;
    }
    return false;
  };

  if (generic) {
    // Generic kernels have no analytic rule; only the numeric path applies.
    for (convsolve_bc bc : bcs) {
      convsolve_verdict v;
      const convsolve_status st = convsolve_analyze_numeric(generic->kernel, bc, m, n, &v);
      if (check_dimension(st)) return kExitDimension;
      if (st != CONVSOLVE_OK) return fail_usage(convsolve_status_name(st));
      if (as_json) {
        out.push_back(verdict_to_json(filter_arg, bc, m, n, v));
      } else {
        std::cout << filter_arg << " " << bc_label(bc) << " " << m << "x" << n
                  << ": " << verdict_label(v.solvable) << " (" << v.condition
                  << ")\n";
      }
    }
  } else {
    for (const std::string& name : filters) {
      double kernel[9];
      convsolve_filter_kernel(name.c_str(), kernel);
      for (convsolve_bc bc : bcs) {
        convsolve_verdict v;
        convsolve_status st = convsolve_analyze_filter(name.c_str(), bc, m, n, &v);
        if (check_dimension(st)) return kExitDimension;
        if (st != CONVSOLVE_OK) return fail_usage(convsolve_status_name(st));
        bool cell_mismatch = false;
        convsolve_verdict numeric_verdict{};
        if (numeric) {
          st = convsolve_analyze_numeric(kernel, bc, m, n, &numeric_verdict);
          if (check_dimension(st)) return kExitDimension;
          if (st != CONVSOLVE_OK) return fail_usage(convsolve_status_name(st));
          const bool analytic_yes = v.solvable != CONVSOLVE_UNSOLVABLE;
          const bool numeric_yes = numeric_verdict.solvable != CONVSOLVE_UNSOLVABLE;
          cell_mismatch = analytic_yes != numeric_yes;
          mismatch = mismatch || cell_mismatch;
        }
        if (as_json) {
          json j = verdict_to_json(name, bc, m, n, v);
          if (numeric) {
            j["numeric_verdict"] = verdict_label(numeric_verdict.solvable);
            j["numeric_witness_re"] = numeric_verdict.witness_re;
            j["numeric_witness_im"] = numeric_verdict.witness_im;
            j["mismatch"] = cell_mismatch;
          }
          out.push_back(j);
        } else {
          std::cout << name << " " << bc_label(bc) << " " << m << "x" << n
                    << ": " << verdict_label(v.solvable) << " (" << v.condition
                    << ")";
          if (numeric) {
            std::cout << " | numeric: " << verdict_label(numeric_verdict.solvable);
            if (cell_mismatch) std::cout << "  MISMATCH";
          }
          std::cout << "\n";
        }
      }
    }
  }

  if (as_json) {
    if (out.size() == 1) {
      std::cout << out.front().dump(2) << "\n";
    } else {
      std::cout << out.dump(2) << "\n";
    }
  }
  if (mismatch) {
    std::cerr << "error: analytic and numeric verdicts disagree\n";
    return kExitMismatch;
  }
  return kExitOk;
}

// ---- solve -------------------------------------------------------------

int cmd_solve(const std::string& filter_arg, const std::string& bc_arg,
              const std::string& rhs, const std::string& output,
              const std::string& report_path) {
  std::string error;
  const auto filter = resolve_filter(filter_arg, error);
  if (!filter) return fail_usage(error);
  const auto bc = resolve_bc(bc_arg);
  if (!bc) return fail_usage("unknown boundary condition '" + bc_arg + "'");
  const auto b = read_matrix_csv(rhs, error);
  if (!b) return fail_usage(error);

  MatrixHandle bh;
  if (convsolve_matrix_create(b->rows, b->cols, b->data.data(), &bh.ptr) != CONVSOLVE_OK) {
    return fail_usage("cannot create matrix from '" + rhs + "'");
  }
  MatrixHandle xh;
  convsolve_report report{};
  const convsolve_status st =
      convsolve_solve(filter->catalog ? filter->argument.c_str() : nullptr,
                      filter->kernel, *bc, bh.ptr, &xh.ptr, &report);

  auto write_report = [&](bool solved) {
    if (report_path.empty()) return true;
    json j = verdict_to_json(filter->argument, *bc, b->rows, b->cols, report.verdict);
    j["residual"] = solved ? json(report.residual) : json(nullptr);
    j["path"] = solved ? json(std::string(report.path)) : json(nullptr);
    std::ofstream out(report_path);
    if (!out) return false;
    out << j.dump(2) << "\n";
    return static_cast<bool>(out);
  };

  switch (st) {
    case CONVSOLVE_OK:
      break;
    case CONVSOLVE_ERROR_DIMENSION_TOO_SMALL:
      std::cerr << "error: right-hand side must be at least 2x2\n";
      return kExitDimension;
    case CONVSOLVE_ERROR_NOT_UNIQUELY_SOLVABLE:
      std::cerr << "error: not uniquely solvable: " << report.verdict.condition
                << "\n";
      write_report(false);
      return kExitNotSolvable;
    case CONVSOLVE_ERROR_RESIDUAL_CHECK_FAILED:
      std::cerr << "error: residual verification failed\n";
      return kExitResidual;
    default:
      return fail_usage(convsolve_status_name(st));
  }

  if (!write_matrix_csv(output, extract(xh.ptr))) {
    return fail_usage("cannot write '" + output + "'");
  }
  if (!write_report(true)) return fail_usage("cannot write '" + report_path + "'");
  return kExitOk;
}

// ---- table1 -------------------------------------------------------------

int cmd_table1(int64_t max_size) {
  const std::vector<std::string> catalog = {"box", "gus", "eda", "edb",
                                            "edc", "shp", "emb"};
  const std::vector<convsolve_bc> bcs = {CONVSOLVE_BC_ZERO, CONVSOLVE_BC_PERIODIC,
                                         CONVSOLVE_BC_REFLEXIVE};
  bool any_mismatch = false;
  std::string first_mismatch;
  std::printf("%-6s %-10s %-44s %-22s %s\n", "filter", "bc", "criterion",
              "unsolvable sizes", "numeric");
  for (const std::string& name : catalog) {
    double kernel[9];
    convsolve_filter_kernel(name.c_str(), kernel);
    for (convsolve_bc bc : bcs) {
      std::string criterion;
      std::vector<int64_t> bad_sizes;
      bool row_mismatch = false;
      for (int64_t m = 2; m <= max_size; ++m) {
        for (int64_t n = 2; n <= max_size; ++n) {
          convsolve_verdict analytic;
          if (convsolve_analyze_filter(name.c_str(), bc, m, n, &analytic) != CONVSOLVE_OK) {
            return fail_usage("analysis failed");
          }
          convsolve_verdict numeric;
          if (convsolve_analyze_numeric(kernel, bc, m, n, &numeric) != CONVSOLVE_OK) {
            return fail_usage("numeric analysis failed");
          }
          const bool analytic_yes = analytic.solvable != CONVSOLVE_UNSOLVABLE;
          const bool numeric_yes = numeric.solvable != CONVSOLVE_UNSOLVABLE;
          if (analytic_yes != numeric_yes) {
            row_mismatch = true;
            any_mismatch = true;
            if (first_mismatch.empty()) {
              first_mismatch = name + "/" + bc_label(bc) + " at m=" +
                               std::to_string(m) + " n=" + std::to_string(n);
            }
          }
          if (m == n) {
            if (analytic_yes && criterion.empty()) criterion = analytic.condition;
            if (!analytic_yes && n == m) {
              bad_sizes.push_back(m);
            }
          }
        }
      }
      if (criterion.empty()) {
        convsolve_verdict v;
        convsolve_analyze_filter(name.c_str(), bc, 2, 2, &v);
        criterion = v.condition;
      }
      std::string sizes = "{";
      for (size_t i = 0; i < bad_sizes.size(); ++i) {
        if (i > 0) sizes += ",";
        sizes += std::to_string(bad_sizes[i]);
      }
      sizes += "}";
      if (bad_sizes.size() == static_cast<size_t>(max_size - 1)) sizes = "all";
      if (bad_sizes.empty()) sizes = "none";
      std::printf("%-6s %-10s %-44s %-22s %s\n", name.c_str(), bc_label(bc),
                  criterion.c_str(), sizes.c_str(),
                  row_mismatch ? "MISMATCH" : "confirmed");
    }
  }
  if (any_mismatch) {
    std::cerr << "error: analytic/numeric mismatch at " << first_mismatch << "\n";
    return kExitMismatch;
  }
  return kExitOk;
}

// ---- spectrum -------------------------------------------------------------

int cmd_spectrum(int64_t m, int64_t n, bool grid, const std::string& output) {
  std::vector<std::pair<int64_t, int64_t>> sizes;
  if (grid) {
    sizes = {{4, 3}, {4, 4}, {5, 3}, {5, 4}, {5, 5},
             {6, 3}, {6, 4}, {6, 5}, {6, 6}};
  } else {
    if (m < 2 || n < 2) return fail_usage("--m and --n (each >= 2) or --grid required");
    sizes = {{m, n}};
  }
  std::ofstream out(output);
  if (!out) return fail_usage("cannot write '" + output + "'");

  bool conjecture_holds = true;
  for (const auto& [sm, sn] : sizes) {
    const size_t count = static_cast<size_t>(sm * sn);
    std::vector<double> re(count), im(count);
    const convsolve_status st =
        convsolve_emboss_reflexive_spectrum(sm, sn, re.data(), im.data());
    if (st == CONVSOLVE_ERROR_SIZE_CAP_EXCEEDED) {
      std::cerr << "error: m*n exceeds the operator size cap ("
                << convsolve_size_cap() << ")\n";
      return kExitDimension;
    }
    if (st != CONVSOLVE_OK) return fail_usage(convsolve_status_name(st));
    double max_re_dev = 0.0;
    double min_abs = std::numeric_limits<double>::infinity();
    for (size_t k = 0; k < count; ++k) {
      max_re_dev = std::max(max_re_dev, std::abs(re[k] - 1.0));
      min_abs = std::min(min_abs, std::hypot(re[k], im[k]));
      out << sm << ',' << sn << ',' << format_entry(re[k]) << ','
          << format_entry(im[k]) << '\n';
    }
    std::printf("m=%" PRId64 " n=%" PRId64 ": max |Re(lambda)-1| = %.3e, min |lambda| = %.12f\n",
                sm, sn, max_re_dev, min_abs);
    if (max_re_dev > 1e-9) conjecture_holds = false;
  }
  if (!conjecture_holds) {
    std::cerr << "error: Re(lambda) = 1 check failed; possible counterexample, "
                 "inspect the eigenvalue output\n";
    return kExitMismatch;
  }
  return kExitOk;
}

// ---- verify -------------------------------------------------------------

int cmd_verify(uint64_t trials, uint64_t seed, int64_t max_size) {
  const convsolve_suite suites[] = {
      CONVSOLVE_SUITE_SHIFT_IDENTITIES, CONVSOLVE_SUITE_FORM_EQUIVALENCE,
      CONVSOLVE_SUITE_CLOSED_FORM_SPECTRA, CONVSOLVE_SUITE_DETERMINANT_SPLIT};
  bool failed = false;
  for (convsolve_suite suite : suites) {
    convsolve_suite_result result;
    const convsolve_status st = convsolve_run_suite(suite, trials, seed, max_size, &result);
    if (st != CONVSOLVE_OK) return fail_usage(convsolve_status_name(st));
    std::printf("%-22s checks=%" PRId64 " failures=%" PRId64 "\n", result.name,
                result.checks, result.failures);
    if (result.failures > 0) {
      failed = true;
      std::cerr << "first failure: " << result.first_failure << "\n";
    }
  }
  if (failed) {
    std::cerr << "error: property verification failed (seed=" << seed
              << ", trials=" << trials << ", max-size=" << max_size << ")\n";
    return kExitPropertyFailure;
  }
  std::printf("all property suites passed (seed=%" PRIu64 ", trials=%" PRIu64
              ", max-size=%" PRId64 ")\n",
              seed, trials, max_size);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"structured solvers for 3x3-kernel deconvolution under zero, "
               "periodic, and reflexive boundary conditions"};
  app.require_subcommand(1);

  std::string filter_arg, bc_arg, input, output, rhs, report_path;
  int64_t m = 0, n = 0, max_size = 10;
  bool numeric = false, as_json = false, grid = false;
  uint64_t trials = 100, seed = 1;
  int64_t verify_max = 7;

  auto* apply = app.add_subcommand("apply", "compute B = F*X");
  apply->add_option("--filter", filter_arg, "catalog filter or 3x3 kernel CSV")->required();
  apply->add_option("--bc", bc_arg, "zero|periodic|reflexive")->required();
  apply->add_option("--input", input, "input matrix CSV")->required();
  apply->add_option("--output", output, "output matrix CSV")->required();

  auto* analyze = app.add_subcommand("analyze", "unique-solvability verdict");
  analyze->add_option("--filter", filter_arg, "catalog filter, kernel CSV, or 'all'")->required();
  analyze->add_option("--bc", bc_arg, "zero|periodic|reflexive|all")->required();
  analyze->add_option("--m", m, "row count")->required();
  analyze->add_option("--n", n, "column count")->required();
  analyze->add_flag("--numeric", numeric, "also run the numeric spectrum check");
  analyze->add_flag("--json", as_json, "emit JSON report(s)");

  auto* solve = app.add_subcommand("solve", "solve F*X = B");
  solve->add_option("--filter", filter_arg, "catalog filter or 3x3 kernel CSV")->required();
  solve->add_option("--bc", bc_arg, "zero|periodic|reflexive")->required();
  solve->add_option("--rhs", rhs, "right-hand side CSV")->required();
  solve->add_option("--output", output, "solution CSV")->required();
  solve->add_option("--report", report_path, "write a JSON solve report");

  auto* table1 = app.add_subcommand(
      "table1", "sweep the filter/boundary-condition solvability grid");
  table1->add_option("--max", max_size, "largest m and n (default 10)");

  auto* spectrum = app.add_subcommand(
      "spectrum", "eigenvalues of the vectorized emboss-reflexive operator");
  spectrum->add_option("--m", m, "row count");
  spectrum->add_option("--n", n, "column count");
  spectrum->add_flag("--grid", grid, "run the standard size grid (4,3)..(6,6)");
  spectrum->add_option("--output", output, "eigenvalue CSV (m,n,re,im rows)")->required();

  auto* verify = app.add_subcommand("verify", "run the property suites");
  verify->add_option("--trials", trials, "random trials per suite (default 100)");
  verify->add_option("--seed", seed, "random seed (default 1)");
  verify->add_option("--max-size", verify_max, "largest random dimension (default 7)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << app.help() << "\n";
    return kExitUsage;
  }

  try {
    if (apply->parsed()) return cmd_apply(filter_arg, bc_arg, input, output);
    if (analyze->parsed()) return cmd_analyze(filter_arg, bc_arg, m, n, numeric, as_json);
    if (solve->parsed()) return cmd_solve(filter_arg, bc_arg, rhs, output, report_path);
    if (table1->parsed()) return cmd_table1(max_size);
    if (spectrum->parsed()) return cmd_spectrum(m, n, grid, output);
    if (verify->parsed()) return cmd_verify(trials, seed, verify_max);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
