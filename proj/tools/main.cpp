#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "emit.hpp"
#include "exrobin/disk_solver.hpp"
#include "exrobin/errors.hpp"
#include "exrobin/geometry.hpp"
#include "exrobin/radial_oracle.hpp"
#include "exrobin/verifier.hpp"
#include "options.hpp"

namespace {

using namespace exrobin;
using cli::ConfigBinder;
using cli::num;
using cli::ordered_json;

// Exit codes: 0 success, 1 validation error, 2 solver or accuracy failure,
// 3 verification ran but at least one check failed.
constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitSolver = 2;
constexpr int kExitVerificationFailed = 3;

const char* kind_name(disk::SpectralKind kind) {
  return kind == disk::SpectralKind::discrete_eigenvalue ? "discrete_eigenvalue"
                                                         : "essential_bottom";
}

// ---- shared option groups ------------------------------------------------

struct OutputOpts {
  std::string out;
  int precision = 12;
};

void add_output_options(CLI::App* sub, OutputOpts& o, ConfigBinder& binder) {
  auto* oo = sub->add_option("--out", o.out, "Write the result here instead of stdout");
  binder.bind(oo, [&o](const std::string& v) { o.out = v; });
  auto* op = sub->add_option("--precision", o.precision,
                             "Significant digits for numeric output")
                 ->check(CLI::Range(1, 17))
                 ->capture_default_str();
  binder.bind(op, [&o](const std::string& v) {
    o.precision = cli::parse_int("precision", v);
    if (o.precision < 1 || o.precision > 17)
      throw validation_error("config: precision must lie in [1, 17]");
  });
}

struct NumericOpts {
  double truncation = 40.0;
  int grid_points = 8000;
  double grading = 1.001;
  std::string far_bc = "dirichlet";

  oracle::NumericParams to_params() const {
    oracle::NumericParams p;
    p.truncation = truncation;
    p.grid_points = grid_points;
    p.grading = grading;
    if (far_bc == "dirichlet")
      p.far_bc = oracle::FarBC::dirichlet;
    else if (far_bc == "neumann")
      p.far_bc = oracle::FarBC::neumann;
    else
      throw validation_error("far-bc must be 'dirichlet' or 'neumann'");
    return p;
  }

  void echo(ordered_json& config, int precision) const {
    config["truncation"] = num(truncation, precision);
    config["grid_points"] = grid_points;
    config["grading"] = num(grading, precision);
    config["far_bc"] = far_bc;
  }
};

void add_numeric_options(CLI::App* sub, NumericOpts& n, ConfigBinder& binder) {
  auto* ot = sub->add_option("--truncation", n.truncation,
                             "Far-boundary truncation T of the discretized problem")
                 ->capture_default_str();
  binder.bind(ot, [&n](const std::string& v) { n.truncation = cli::parse_double("truncation", v); });
  auto* og = sub->add_option("--grid-points", n.grid_points, "Number of grid cells")
                 ->capture_default_str();
  binder.bind(og, [&n](const std::string& v) { n.grid_points = cli::parse_int("grid-points", v); });
  auto* or_ = sub->add_option("--grading", n.grading,
                              "Geometric cell-size ratio (1 = uniform grid)")
                  ->capture_default_str();
  binder.bind(or_, [&n](const std::string& v) { n.grading = cli::parse_double("grading", v); });
  auto* ob = sub->add_option("--far-bc", n.far_bc, "Far-boundary condition")
                 ->check(CLI::IsMember({"dirichlet", "neumann"}))
                 ->capture_default_str();
  binder.bind(ob, [&n](const std::string& v) { n.far_bc = v; });
}

void apply_config(const std::string& path, const ConfigBinder& binder) {
  if (!path.empty()) binder.apply(cli::load_config_file(path));
}

template <typename T>
T require_option(const std::optional<T>& value, const char* name) {
  if (!value) throw validation_error(std::string("missing required option --") + name +
                                     " (command line or config)");
  return *value;
}

// ---- subcommands ---------------------------------------------------------

int run_disk_eigen(double alpha, double radius, const OutputOpts& out) {
  const disk::SpectralResult res = disk::lambda1_disk(alpha, radius);
  const double astar = disk::alpha_star_disk(radius);

  ordered_json config;
  config["alpha"] = num(alpha, out.precision);
  config["radius"] = num(radius, out.precision);
  config["precision"] = out.precision;
  ordered_json doc = cli::document("disk-eigen", std::move(config));

  ordered_json result;
  result["lambda"] = num(res.lambda, out.precision);
  if (res.nu)
    result["nu"] = num(*res.nu, out.precision);
  else
    result["nu"] = nullptr;
  result["kind"] = kind_name(res.kind);
  result["residual"] = num(res.residual, out.precision);
  result["alpha_star"] = num(astar, out.precision);
  if (std::fabs(alpha - astar) <= disk::tie_tolerance)
    result["note"] =
        "alpha within tie tolerance of the critical parameter; "
        "classified as essential bottom by convention";
  doc["result"] = std::move(result);
  cli::write_output(out.out, cli::dump(doc));
  return kExitOk;
}

int run_alpha_star(double radius, const OutputOpts& out) {
  const double astar = disk::alpha_star_disk(radius);
  const double ub = disk::alpha_star_upper_bound(radius);

  ordered_json config;
  config["radius"] = num(radius, out.precision);
  config["precision"] = out.precision;
  ordered_json doc = cli::document("alpha-star", std::move(config));

  ordered_json result;
  result["alpha_star"] = num(astar, out.precision);
  result["upper_bound"] = num(ub, out.precision);
  result["within_upper_bound"] = astar <= ub + 1e-10;
  doc["result"] = std::move(result);
  cli::write_output(out.out, cli::dump(doc));
  return kExitOk;
}

int run_sweep(const std::vector<double>& alphas, const std::vector<double>& radii,
              const std::string& format, const OutputOpts& out) {
  if (alphas.empty() || radii.empty())
    throw validation_error("sweep: alpha and radius grids must be nonempty");

  struct Point {
    double alpha, radius;
  };
  std::vector<Point> points;
  points.reserve(alphas.size() * radii.size());
  for (double a : alphas)
    for (double r : radii) points.push_back({a, r});

  // Points are independent closed-form solves; evaluate them concurrently but
  // emit in enumeration order so output is deterministic.
  std::vector<cli::SweepRow> rows(points.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= points.size()) return;
      try {
        const disk::SpectralResult res = disk::lambda1_disk(points[i].alpha, points[i].radius);
        rows[i] = {points[i].alpha, points[i].radius, res.lambda, res.nu, kind_name(res.kind)};
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  const unsigned hw = std::thread::hardware_concurrency();
  const std::size_t n_threads =
      std::min<std::size_t>(points.size(), hw == 0 ? 1 : hw);
  std::vector<std::thread> threads;
  threads.reserve(n_threads);
  for (std::size_t i = 0; i < n_threads; ++i) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);

  ordered_json config;
  {
    ordered_json ja = ordered_json::array();
    for (double a : alphas) ja.push_back(num(a, out.precision));
    ordered_json jr = ordered_json::array();
    for (double r : radii) jr.push_back(num(r, out.precision));
    config["alphas"] = std::move(ja);
    config["radii"] = std::move(jr);
    config["format"] = format;
    config["precision"] = out.precision;
  }

  if (format == "csv") {
    cli::write_output(out.out, cli::sweep_csv(rows, config, out.precision));
  } else if (format == "json") {
    ordered_json doc = cli::document("sweep", std::move(config));
    doc["rows"] = cli::sweep_rows_json(rows, out.precision);
    cli::write_output(out.out, cli::dump(doc));
  } else {
    throw validation_error("sweep: format must be 'csv' or 'json'");
  }
  return kExitOk;
}

int run_oracle_compare(double alpha, double radius, const NumericOpts& numeric,
                       const OutputOpts& out) {
  const oracle::NumericParams params = numeric.to_params();
  const disk::SpectralResult closed = disk::lambda1_disk(alpha, radius);
  const double oracle_min =
      oracle::min_rayleigh({oracle::WeightSpec::sinh_shift(radius), alpha, params});
  const double abs_diff = std::fabs(closed.lambda - oracle_min);
  const double rel_diff = abs_diff / std::fmax(1.0, std::fabs(closed.lambda));

  ordered_json config;
  config["alpha"] = num(alpha, out.precision);
  config["radius"] = num(radius, out.precision);
  numeric.echo(config, out.precision);
  config["precision"] = out.precision;
  ordered_json doc = cli::document("oracle-compare", std::move(config));

  ordered_json closed_json;
  closed_json["lambda"] = num(closed.lambda, out.precision);
  if (closed.nu)
    closed_json["nu"] = num(*closed.nu, out.precision);
  else
    closed_json["nu"] = nullptr;
  closed_json["kind"] = kind_name(closed.kind);
  closed_json["residual"] = num(closed.residual, out.precision);

  ordered_json result;
  result["closed_form"] = std::move(closed_json);
  result["oracle_min"] = num(oracle_min, out.precision);
  result["abs_diff"] = num(abs_diff, out.precision);
  result["rel_diff"] = num(rel_diff, out.precision);
  result["oracle_detects_discrete"] = oracle::detects_discrete(oracle_min);
  doc["result"] = std::move(result);
  cli::write_output(out.out, cli::dump(doc));
  return kExitOk;
}

int run_poincare_check(const std::string& kind_name_in, double b, std::optional<double> alpha,
                       const NumericOpts& numeric, const OutputOpts& out) {
  oracle::PoincareKind kind;
  if (kind_name_in == "sinh")
    kind = oracle::PoincareKind::sinh;
  else if (kind_name_in == "cosh")
    kind = oracle::PoincareKind::cosh;
  else if (kind_name_in == "exp")
    kind = oracle::PoincareKind::exp;
  else
    throw validation_error("poincare-check: kind must be 'sinh', 'cosh', or 'exp'");

  const oracle::NumericParams params = numeric.to_params();
  const double threshold = oracle::poincare_threshold(kind, b);
  const double alpha_used = alpha.value_or(threshold);
  const double min_value = oracle::poincare_min(kind, b, alpha_used, params);

  ordered_json config;
  config["kind"] = kind_name_in;
  config["b"] = num(b, out.precision);
  config["alpha"] = num(alpha_used, out.precision);
  numeric.echo(config, out.precision);
  config["precision"] = out.precision;
  ordered_json doc = cli::document("poincare-check", std::move(config));

  ordered_json result;
  result["threshold"] = num(threshold, out.precision);
  result["alpha_at_threshold"] = !alpha.has_value();
  result["min_value"] = num(min_value, out.precision);
  result["gap_above_essential"] = num(min_value - 0.25, out.precision);
  result["detects_discrete"] = oracle::detects_discrete(min_value);
  doc["result"] = std::move(result);
  cli::write_output(out.out, cli::dump(doc));
  return kExitOk;
}

int run_verify(const std::string& suite_name, const NumericOpts& numeric, const OutputOpts& out) {
  verify::Suite suite;
  if (suite_name == "monotonicity")
    suite = verify::Suite::monotonicity;
  else if (suite_name == "main-theorem")
    suite = verify::Suite::main_theorem;
  else if (suite_name == "corollaries")
    suite = verify::Suite::corollaries;
  else if (suite_name == "alpha-star-bounds")
    suite = verify::Suite::alpha_star_bounds;
  else if (suite_name == "essential-bottom")
    suite = verify::Suite::essential_bottom;
  else if (suite_name == "all")
    suite = verify::Suite::all;
  else
    throw validation_error("verify: unknown suite '" + suite_name + "'");

  const oracle::NumericParams params = numeric.to_params();
  const std::vector<verify::VerificationReport> reports = verify::run_suite(suite, params);

  ordered_json config;
  config["suite"] = suite_name;
  numeric.echo(config, out.precision);
  config["precision"] = out.precision;
  ordered_json doc = cli::document("verify", std::move(config));

  bool all_pass = true;
  ordered_json checks = ordered_json::array();
  for (const auto& report : reports) {
    all_pass = all_pass && report.pass;
    checks.push_back(cli::report_to_json(report, out.precision));
  }
  doc["checks"] = std::move(checks);
  doc["pass"] = all_pass;
  cli::write_output(out.out, cli::dump(doc));
  return all_pass ? kExitOk : kExitVerificationFailed;
}

int run_geometry(std::optional<double> radius, std::optional<double> perimeter,
                 std::optional<double> area, std::optional<double> parallel_t,
                 const OutputOpts& out) {
  if (radius && (perimeter || area))
    throw validation_error("geometry: give either --radius or --perimeter with --area");
  geometry::DomainSpec spec;
  ordered_json config;
  if (radius) {
    spec = geometry::disk_geometry(*radius);
    config["radius"] = num(*radius, out.precision);
  } else {
    if (!perimeter || !area)
      throw validation_error("geometry: --perimeter and --area are both required");
    spec = {*perimeter, *area};
  }
  config["perimeter"] = num(spec.perimeter, out.precision);
  config["area"] = num(spec.area, out.precision);
  if (parallel_t) config["parallel_t"] = num(*parallel_t, out.precision);
  config["precision"] = out.precision;
  ordered_json doc = cli::document("geometry", std::move(config));

  const geometry::ValidationResult v = geometry::validate_domain_spec(spec);
  ordered_json result;
  result["valid"] = v.ok;
  result["deficit"] = num(v.deficit, out.precision);
  if (!v.ok) {
    result["message"] = v.message;
    doc["result"] = std::move(result);
    cli::write_output(out.out, cli::dump(doc));
    return kExitValidation;
  }
  result["avg_curvature"] = num(geometry::avg_curvature(spec), out.precision);
  const auto matching = geometry::matching_disk_radius(spec);
  if (matching)
    result["matching_disk_radius"] = num(*matching, out.precision);
  else
    result["matching_disk_radius"] = nullptr;
  const geometry::ComparisonRadii comparison = geometry::comparison_disks(spec);
  result["r_area"] = num(comparison.r_area, out.precision);
  result["r_perimeter"] = num(comparison.r_perimeter, out.precision);
  if (parallel_t)
    result["parallel_perimeter"] = num(geometry::parallel_perimeter(spec, *parallel_t), out.precision);
  doc["result"] = std::move(result);
  cli::write_output(out.out, cli::dump(doc));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Lowest eigenvalue of the Robin Laplacian on the exterior of a geodesic "
      "disk in the hyperbolic plane: closed-form solver, discretized "
      "variational oracle, and verification checks"};
  app.set_version_flag("--version", std::string("exrobin ") + "1.0.0");
  app.require_subcommand(1);

  int rc = kExitOk;

  // disk-eigen
  {
    auto* sub = app.add_subcommand("disk-eigen",
                                   "Lowest spectral point for one (alpha, radius) pair");
    auto binder = std::make_shared<ConfigBinder>();
    auto alpha = std::make_shared<std::optional<double>>();
    auto radius = std::make_shared<std::optional<double>>();
    auto out = std::make_shared<OutputOpts>();
    auto config_path = std::make_shared<std::string>();
    binder->bind(sub->add_option("--alpha", *alpha, "Boundary parameter"),
                 [alpha](const std::string& v) { *alpha = cli::parse_double("alpha", v); });
    binder->bind(sub->add_option("--radius", *radius, "Disk radius"),
                 [radius](const std::string& v) { *radius = cli::parse_double("radius", v); });
    add_output_options(sub, *out, *binder);
    sub->add_option("--config", *config_path, "Flat key=value configuration file");
    sub->callback([=, &rc] {
      apply_config(*config_path, *binder);
      rc = run_disk_eigen(require_option(*alpha, "alpha"), require_option(*radius, "radius"),
                          *out);
    });
  }

  // alpha-star
  {
    auto* sub = app.add_subcommand("alpha-star",
                                   "Critical boundary parameter and its elementary upper bound");
    auto binder = std::make_shared<ConfigBinder>();
    auto radius = std::make_shared<std::optional<double>>();
    auto out = std::make_shared<OutputOpts>();
    auto config_path = std::make_shared<std::string>();
    binder->bind(sub->add_option("--radius", *radius, "Disk radius"),
                 [radius](const std::string& v) { *radius = cli::parse_double("radius", v); });
    add_output_options(sub, *out, *binder);
    sub->add_option("--config", *config_path, "Flat key=value configuration file");
    sub->callback([=, &rc] {
      apply_config(*config_path, *binder);
      rc = run_alpha_star(require_option(*radius, "radius"), *out);
    });
  }

  // sweep
  {
    auto* sub = app.add_subcommand("sweep", "Closed-form eigenvalues over an (alpha, radius) grid");
    auto binder = std::make_shared<ConfigBinder>();
    auto alphas = std::make_shared<std::vector<double>>();
    auto radii = std::make_shared<std::vector<double>>();
    auto format = std::make_shared<std::string>("csv");
    auto out = std::make_shared<OutputOpts>();
    auto config_path = std::make_shared<std::string>();
    binder->bind(sub->add_option("--alphas", *alphas, "Comma-separated boundary parameters")
                     ->delimiter(','),
                 [alphas](const std::string& v) { *alphas = cli::parse_double_list("alphas", v); });
    binder->bind(sub->add_option("--radii", *radii, "Comma-separated radii")->delimiter(','),
                 [radii](const std::string& v) { *radii = cli::parse_double_list("radii", v); });
    binder->bind(sub->add_option("--format", *format, "Output format")
                     ->check(CLI::IsMember({"csv", "json"}))
                     ->capture_default_str(),
                 [format](const std::string& v) { *format = v; });
    add_output_options(sub, *out, *binder);
    sub->add_option("--config", *config_path, "Flat key=value configuration file");
    sub->callback([=, &rc] {
      apply_config(*config_path, *binder);
      if (alphas->empty()) throw validation_error("missing required option --alphas");
      if (radii->empty()) throw validation_error("missing required option --radii");
      rc = run_sweep(*alphas, *radii, *format, *out);
    });
  }

  // oracle-compare
  {
    auto* sub = app.add_subcommand(
        "oracle-compare", "Closed-form eigenvalue next to the discretized oracle's minimum");
    auto binder = std::make_shared<ConfigBinder>();
    auto alpha = std::make_shared<std::optional<double>>();
    auto radius = std::make_shared<std::optional<double>>();
    auto numeric = std::make_shared<NumericOpts>();
    auto out = std::make_shared<OutputOpts>();
    auto config_path = std::make_shared<std::string>();
    binder->bind(sub->add_option("--alpha", *alpha, "Boundary parameter"),
                 [alpha](const std::string& v) { *alpha = cli::parse_double("alpha", v); });
    binder->bind(sub->add_option("--radius", *radius, "Disk radius"),
                 [radius](const std::string& v) { *radius = cli::parse_double("radius", v); });
    add_numeric_options(sub, *numeric, *binder);
    add_output_options(sub, *out, *binder);
    sub->add_option("--config", *config_path, "Flat key=value configuration file");
    sub->callback([=, &rc] {
      apply_config(*config_path, *binder);
      rc = run_oracle_compare(require_option(*alpha, "alpha"), require_option(*radius, "radius"),
                              *numeric, *out);
    });
  }

  // poincare-check
  {
    auto* sub = app.add_subcommand(
        "poincare-check", "Discretized minimum for a weighted family at or near its threshold");
    auto binder = std::make_shared<ConfigBinder>();
    auto kind = std::make_shared<std::string>();
    auto b = std::make_shared<std::optional<double>>();
    auto alpha = std::make_shared<std::optional<double>>();
    auto numeric = std::make_shared<NumericOpts>();
    auto out = std::make_shared<OutputOpts>();
    auto config_path = std::make_shared<std::string>();
    binder->bind(sub->add_option("--kind", *kind, "Weight family")
                     ->check(CLI::IsMember({"sinh", "cosh", "exp"})),
                 [kind](const std::string& v) { *kind = v; });
    binder->bind(sub->add_option("--b", *b, "Family shift parameter"),
                 [b](const std::string& v) { *b = cli::parse_double("b", v); });
    binder->bind(sub->add_option("--alpha", *alpha,
                                 "Boundary parameter (defaults to the family threshold)"),
                 [alpha](const std::string& v) { *alpha = cli::parse_double("alpha", v); });
    add_numeric_options(sub, *numeric, *binder);
    add_output_options(sub, *out, *binder);
    sub->add_option("--config", *config_path, "Flat key=value configuration file");
    sub->callback([=, &rc] {
      apply_config(*config_path, *binder);
      if (kind->empty()) throw validation_error("missing required option --kind");
      rc = run_poincare_check(*kind, require_option(*b, "b"), *alpha, *numeric, *out);
    });
  }

  // verify
  {
    auto* sub = app.add_subcommand("verify", "Run a verification suite and report every outcome");
    auto binder = std::make_shared<ConfigBinder>();
    auto suite = std::make_shared<std::string>();
    auto numeric = std::make_shared<NumericOpts>();
    auto out = std::make_shared<OutputOpts>();
    auto config_path = std::make_shared<std::string>();
    binder->bind(sub->add_option("--suite", *suite, "Which checks to run")
                     ->check(CLI::IsMember({"monotonicity", "main-theorem", "corollaries",
                                            "alpha-star-bounds", "essential-bottom", "all"})),
                 [suite](const std::string& v) { *suite = v; });
    add_numeric_options(sub, *numeric, *binder);
    add_output_options(sub, *out, *binder);
    sub->add_option("--config", *config_path, "Flat key=value configuration file");
    sub->callback([=, &rc] {
      apply_config(*config_path, *binder);
      if (suite->empty()) throw validation_error("missing required option --suite");
      rc = run_verify(*suite, *numeric, *out);
    });
  }

  // geometry
  {
    auto* sub = app.add_subcommand(
        "geometry", "Hyperbolic domain quantities: validation, curvature, comparison radii");
    auto binder = std::make_shared<ConfigBinder>();
    auto radius = std::make_shared<std::optional<double>>();
    auto perimeter = std::make_shared<std::optional<double>>();
    auto area = std::make_shared<std::optional<double>>();
    auto parallel_t = std::make_shared<std::optional<double>>();
    auto out = std::make_shared<OutputOpts>();
    auto config_path = std::make_shared<std::string>();
    binder->bind(sub->add_option("--radius", *radius, "Describe the geodesic disk of this radius"),
                 [radius](const std::string& v) { *radius = cli::parse_double("radius", v); });
    binder->bind(sub->add_option("--perimeter", *perimeter, "Domain perimeter"),
                 [perimeter](const std::string& v) { *perimeter = cli::parse_double("perimeter", v); });
    binder->bind(sub->add_option("--area", *area, "Domain area"),
                 [area](const std::string& v) { *area = cli::parse_double("area", v); });
    binder->bind(sub->add_option("--parallel", *parallel_t,
                                 "Also report the perimeter of the outer parallel set at this distance"),
                 [parallel_t](const std::string& v) { *parallel_t = cli::parse_double("parallel", v); });
    add_output_options(sub, *out, *binder);
    sub->add_option("--config", *config_path, "Flat key=value configuration file");
    sub->callback([=, &rc] {
      apply_config(*config_path, *binder);
      rc = run_geometry(*radius, *perimeter, *area, *parallel_t, *out);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // help, version
    app.exit(e);
    return kExitValidation;
  } catch (const accuracy_error& e) {
    std::fprintf(stderr, "accuracy failure: %s\n", e.what());
    return kExitSolver;
  } catch (const solver_error& e) {
    std::fprintf(stderr, "solver failure: %s\n", e.what());
    return kExitSolver;
  } catch (const std::invalid_argument& e) {  // includes validation_error
    std::fprintf(stderr, "validation error: %s\n", e.what());
    return kExitValidation;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "validation error: %s\n", e.what());
    return kExitValidation;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return kExitSolver;
  }
  return rc;
}
