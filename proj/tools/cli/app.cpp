#include "app.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <numbers>
#include <optional>

#include "checks.hpp"
#include "titeica/error.hpp"
#include "titeica/pde.hpp"
#include "titeica/solutions.hpp"
#include "titeica/surface.hpp"

namespace titeica::cli {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json to_json(const Check& c) {
  json j{{"name", c.name},
         {"ref", c.ref},
         {"n_samples", c.n_samples},
         {"max_defect", number(c.max_defect)},
         {"tolerance", c.tolerance},
         {"pass", c.pass}};
  if (!c.error.empty()) j["error"] = c.error;
  return j;
}

json report(const std::string& command, json echo, const std::vector<Check>& checks,
            Clock::time_point t0) {
  json arr = json::array();
  int passed = 0;
  for (const auto& c : checks) {
    arr.push_back(to_json(c));
    passed += c.pass;
  }
  json r{{"command", command},
         {"config_echo", std::move(echo)},
         {"checks", std::move(arr)},
         {"summary", {{"passed", passed}, {"failed", static_cast<int>(checks.size()) - passed}}}};
  r["timing_ms"] = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return r;
}

std::string pretty(const json& r) {
  std::string s;
  char line[256];
  for (const auto& c : r["checks"]) {
    const double d = c["max_defect"].is_null() ? NAN : c["max_defect"].get<double>();
    std::snprintf(line, sizeof line, "%-4s %-32s %8ld  %10.3e <= %8.1e  ", c["pass"].get<bool>() ? "ok" : "FAIL",
                  c["ref"].get<std::string>().c_str(), c["n_samples"].get<long>(), d,
                  c["tolerance"].get<double>());
    s += line + c["name"].get<std::string>();
    if (c.contains("error")) s += "  [" + c["error"].get<std::string>() + "]";
    s += '\n';
  }
  std::snprintf(line, sizeof line, "%d passed, %d failed, %.0f ms\n", r["summary"]["passed"].get<int>(),
                r["summary"]["failed"].get<int>(), r["timing_ms"].get<double>());
  return s + line;
}

void emit(const json& r, bool as_table, const std::string& path, std::ostream& out) {
  const std::string text = as_table ? pretty(r) : r.dump(2) + "\n";
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw IoError("write to '" + path + "' failed");
}

int exit_code(const json& r) { return r["summary"]["failed"].get<int>() == 0 ? 0 : 1; }

json tolerances_echo(const Tolerances& t) {
  return {{"identity", t.identity},     {"solution", t.solution},
          {"ode", t.ode},               {"asymptotic", t.asymptotic},
          {"integration", t.integration}};
}

// --- surface -----------------------------------------------------------------------

struct SurfaceArgs {
  std::string frame;
  int nu = 51, nv = 51;
  double du = 0.02, dv = 0.02;
  std::optional<double> u0, v0;
  double c1 = 0.0, c = 1.0;
  std::string format, out, report;
};

struct SurfaceRun {
  SurfaceGrid grid;
  bool integrated = true;
};

SurfaceRun build_surface(const SurfaceArgs& a, GridSpec& g) {
  const double s3 = std::numbers::sqrt3;
  const std::array<std::array<double, 3>, 3> unit{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  const double base = a.frame == "nonruled-const" ? 0.0 : a.frame == "hyperbolic" ? -0.5 : 0.5;
  g.u0 = a.u0.value_or(base);
  g.v0 = a.v0.value_or(base);
  if (a.frame == "nonruled-const")
    return {integrate_surface(nonruled_frame(Bivariate::constant(1.0)),
                              {{{1, 1, 1}, {1, -0.5, -0.5}, {0, 0.5 * s3, -0.5 * s3}}}, g),
            true};
  if (a.frame == "nonruled-sinh")
    return {integrate_surface(nonruled_frame(titeica_sinh(a.c1).h), unit, g), true};
  if (a.frame == "ruled-liouville")
    return {integrate_surface(ruled_frame(liouville_preset(LiouvillePreset::Identity).h,
                                          Curve::constant(1.0)),
                              unit, g),
            true};
  return {sample_surface(hyperbolic_surface(a.c), g), false};
}

int cmd_surface(const SurfaceArgs& a, const Tolerances& tol, bool table, std::ostream& out,
                Clock::time_point t0) {
  GridSpec g;
  g.nu = a.nu;
  g.nv = a.nv;
  g.du = a.du;
  g.dv = a.dv;
  const SurfaceRun run = build_surface(a, g);
  const GeometryReport geo = geometry(run.grid);

  std::vector<Check> checks;
  checks.push_back(run_check("relative spread of I = K / d^4",
                             run.integrated ? "surface.I_spread" : "surface.I_spread_analytic",
                             run.integrated ? tol.integration : tol.solution, [&](Accumulator& acc) {
                               acc.n = static_cast<long>(geo.nodes.size());
                               acc.worst = geo.spread_I;
                             }));
  if (run.integrated)
    checks.push_back(run_check("second-form diagonal (max |L|, |N|)", "surface.asymptotic",
                               tol.asymptotic, [&](Accumulator& acc) {
                                 for (double d : asymptotic_defect(geo)) acc.add(d);
                               }));
  if (!a.format.empty()) export_mesh(run.grid, geo, parse_mesh_format(a.format), a.out);

  json echo{{"frame", a.frame}, {"u0", g.u0}, {"v0", g.v0}, {"nu", g.nu}, {"nv", g.nv},
            {"du", g.du},       {"dv", g.dv}, {"c1", a.c1}, {"c", a.c},   {"tolerances", tolerances_echo(tol)}};
  if (!a.format.empty()) echo["export"] = {{"format", a.format}, {"path", a.out}};
  json r = report("surface", std::move(echo), checks, t0);
  r["result"] = {{"nodes", geo.nodes.size()},
                 {"mean_I", geo.mean_I},
                 {"spread_I", geo.spread_I},
                 {"max_abs_L", geo.max_abs_L},
                 {"max_abs_N", geo.max_abs_N}};
  emit(r, table, a.report, out);
  return exit_code(r);
}

// --- eval --------------------------------------------------------------------------

struct EvalArgs {
  std::string solution, preset = "identity", out;
  double u = 1.0, v = 1.0, c1 = 0.0;
  int order = 2;
};

int cmd_eval(const EvalArgs& a, const Tolerances& tol, bool table, std::ostream& out,
             Clock::time_point t0) {
  SolutionH sol;
  PdeKind h_form = PdeKind::titeica_h(), w_form = PdeKind::titeica_omega();
  if (a.solution == "liouville-general") {
    sol = liouville_preset(parse_liouville_preset(a.preset));
    h_form = PdeKind::liouville_h();
    w_form = PdeKind::liouville_omega();
  } else if (a.solution == "titeica-sinh") {
    sol = titeica_sinh(a.c1);
  } else {
    sol = titeica_constant();
  }
  const int order = std::max(a.order, 2);
  const Jet2 h = sol.eval(a.u, a.v, order);
  const Jet2 w = sol.omega(a.u, a.v, order);
  const double rh = residual_scalar(h_form, h), rw = residual_scalar(w_form, w);

  json jet = json::array();
  for (int s = 0; s < Jet2::kSize; ++s)
    if (Jet2::degree_of(s) <= a.order) {
      const auto& m = Jet2::multi_index(s);
      jet.push_back({{"du", m[0]}, {"dv", m[1]}, {"h", h.coeff(s)}, {"omega", w.coeff(s)}});
    }

  const std::vector<Check> checks{run_check("residual at the point, h and omega forms",
                                            a.solution == "liouville-general" ? "liouville.residual"
                                                                              : "titeica.residual",
                                            tol.solution, [&](Accumulator& acc) {
                                              acc.add(rh);
                                              acc.add(rw);
                                            })};
  json echo{{"solution", a.solution}, {"u", a.u}, {"v", a.v}, {"order", a.order}};
  if (a.solution == "liouville-general") echo["preset"] = a.preset;
  if (a.solution == "titeica-sinh") echo["c1"] = a.c1;
  echo["tolerances"] = tolerances_echo(tol);
  json r = report("eval", std::move(echo), checks, t0);
  r["result"] = {{"h", h.value()},
                 {"omega", w.value()},
                 {"residual_h", rh},
                 {"residual_omega", rw},
                 {"equation", w_form.name()},
                 {"jet", std::move(jet)}};
  emit(r, table, a.out, out);
  return exit_code(r);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  const auto t0 = Clock::now();
  CLI::App app{"Titeica surface verification toolkit", "titeica"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key = value config file, one [section] per command");
  app.allow_config_extras(CLI::config_extras_mode::error);

  std::uint64_t seed = 1;
  bool table = false;
  Tolerances tol;
  app.add_option("--seed", seed, "seed for random batteries")->envname("TITEICA_SEED");
  app.add_flag("--pretty", table, "print a table instead of JSON");
  app.add_option("--tol-identity", tol.identity, "identity-level tolerance")->check(CLI::PositiveNumber);
  app.add_option("--tol-solution", tol.solution, "on-solution tolerance")->check(CLI::PositiveNumber);
  app.add_option("--tol-ode", tol.ode, "ODE and quadrature tolerance")->check(CLI::PositiveNumber);
  app.add_option("--tol-asymptotic", tol.asymptotic, "second-form tolerance")->check(CLI::PositiveNumber);
  app.add_option("--tol-integration", tol.integration, "spread of I on integrated surfaces")
      ->check(CLI::PositiveNumber);
  app.fallthrough();

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all", verify_out;
  VerifyConfig cfg;
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("suite", suite, "suite name")->check(CLI::IsMember(suites));
  verify->add_option("--points", cfg.points, "points per closed-form battery")->check(CLI::Range(1, 1000000));
  verify->add_option("--samples", cfg.samples, "points per field")->check(CLI::Range(1, 1000000));
  verify->add_option("--jets", cfg.jets, "random jets per identity battery")->check(CLI::Range(1, 10000000));
  verify->add_option("--eps", cfg.eps, "adjoint parameters")->expected(1, -1);
  verify->add_option("--out", verify_out, "write the report here");

  // surface
  auto* surface = app.add_subcommand("surface", "integrate or sample a surface and certify I");
  SurfaceArgs sa;
  surface->add_option("frame", sa.frame, "frame preset")
      ->required()
      ->check(CLI::IsMember({"nonruled-sinh", "nonruled-const", "ruled-liouville", "hyperbolic"}));
  surface->add_option("--nu", sa.nu, "nodes along u")->check(CLI::Range(2, 1000000));
  surface->add_option("--nv", sa.nv, "nodes along v")->check(CLI::Range(2, 1000000));
  surface->add_option("--du", sa.du, "step along u")->check(CLI::PositiveNumber);
  surface->add_option("--dv", sa.dv, "step along v")->check(CLI::PositiveNumber);
  surface->add_option("--u0", sa.u0, "grid origin u");
  surface->add_option("--v0", sa.v0, "grid origin v");
  surface->add_option("--c1", sa.c1, "phase of the sinh profile");
  surface->add_option("--c", sa.c, "constant of xyz = C");
  surface->add_option("--export", sa.format, "mesh format")->check(CLI::IsMember({"obj", "csv"}));
  surface->add_option("--out", sa.out, "mesh path");
  surface->add_option("--report", sa.report, "write the report here");

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate a closed-form solution at a point");
  EvalArgs ea;
  eval->add_option("solution", ea.solution, "solution preset")
      ->required()
      ->check(CLI::IsMember({"liouville-general", "titeica-sinh", "titeica-const"}));
  eval->add_option("--preset", ea.preset, "U, V for liouville-general")
      ->check(CLI::IsMember({"identity", "exp", "tanh"}));
  eval->add_option("--u", ea.u, "u coordinate");
  eval->add_option("--v", ea.v, "v coordinate");
  eval->add_option("--c1", ea.c1, "phase of the sinh profile");
  eval->add_option("--order", ea.order, "jet order to print")->check(CLI::Range(0, 3));
  eval->add_option("--out", ea.out, "write the report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    cfg.seed = seed;
    cfg.tol = tol;
    if (*verify) {
      json echo{{"suite", suite},       {"seed", seed},          {"points", cfg.points},
                {"samples", cfg.samples}, {"jets", cfg.jets},    {"eps", cfg.eps},
                {"tolerances", tolerances_echo(tol)}};
      const json r = report("verify", std::move(echo), run_suite(suite, cfg), t0);
      emit(r, table, verify_out, out);
      return exit_code(r);
    }
    if (*surface) {
      if (!sa.format.empty() && sa.out.empty()) {
        err << "error: --export needs --out\n";
        return 2;
      }
      return cmd_surface(sa, tol, table, out, t0);
    }
    return cmd_eval(ea, tol, table, out, t0);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace titeica::cli
