#include "checks.hpp"

#include <Eigen/Core>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include "titeica/error.hpp"
#include "titeica/pde.hpp"
#include "titeica/sampling.hpp"
#include "titeica/solutions.hpp"
#include "titeica/surface.hpp"
#include "titeica/symmetry.hpp"
#include "titeica/variational.hpp"

namespace titeica::cli {

void Accumulator::add(double d) {
  ++n;
  if (!std::isfinite(d))
    worst = std::numeric_limits<double>::infinity();
  else
    worst = std::max(worst, std::abs(d));
}

Check run_check(std::string name, std::string ref, double tol,
                const std::function<void(Accumulator&)>& body) {
  Check c{std::move(name), std::move(ref), 0, 0.0, tol, false, {}};
  Accumulator acc;
  try {
    body(acc);
    c.max_defect = acc.worst;
    c.pass = acc.worst <= tol;
  } catch (const std::exception& e) {
    c.max_defect = std::numeric_limits<double>::quiet_NaN();
    c.error = e.what();
  }
  c.n_samples = acc.n;
  return c;
}

std::uint64_t sub_seed(std::uint64_t seed, const std::string& label) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char ch : label) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::uint64_t z = seed ^ h;  // splitmix64 finalizer
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;

using Suite = std::vector<Check>;
using J2 = const Jet2&;

// a0 + a1 t + a2 t^2 + a3 sin(b t)
Curve random_curve(JetSampler& gen) {
  const double a0 = gen.uniform(-1, 1), a1 = gen.uniform(-1, 1), a2 = gen.uniform(-1, 1);
  const double a3 = gen.uniform(-1, 1), b = gen.uniform(0.5, 2);
  return Curve::from_expr([=](const Jet1& t) { return a0 + a1 * t + a2 * t * t + a3 * sin(b * t); });
}

const char* preset_name(LiouvillePreset p) {
  switch (p) {
    case LiouvillePreset::Identity: return "identity";
    case LiouvillePreset::Exp: return "exp";
    case LiouvillePreset::Tanh: return "tanh";
  }
  return "?";
}

constexpr LiouvillePreset kPresets[] = {LiouvillePreset::Identity, LiouvillePreset::Exp,
                                        LiouvillePreset::Tanh};

void residual_battery(Accumulator& acc, const SolutionH& sol, const PdeKind& kind, JetSampler& gen,
                      int n) {
  for (int i = 0; i < n; ++i) {
    const auto p = gen.point(sol.window);
    acc.add(residual_scalar(kind, sol.eval(p[0], p[1], 2)));
  }
}

// --- liouville ---------------------------------------------------------------------

Suite liouville(const VerifyConfig& c) {
  Suite out;
  for (auto preset : kPresets) {
    const std::string name = std::string("Liouville residual, ") + preset_name(preset) + " preset";
    out.push_back(run_check(name, "liouville.residual", c.tol.solution, [&](Accumulator& acc) {
      JetSampler gen(sub_seed(c.seed, name));
      residual_battery(acc, liouville_preset(preset), PdeKind::liouville_h(), gen, c.points);
    }));
  }
  const std::string fam = "Liouville residual, mu(u + v) profiles";
  out.push_back(run_check(fam, "liouville.mu_family", c.tol.solution, [&](Accumulator& acc) {
    JetSampler gen(sub_seed(c.seed, fam));
    const Box<2> win{{0.1, 0.1}, {0.6, 0.6}};
    for (const Curve& mu : {mu_family(MuCase::Zero, 0.0, 1.0), mu_family(MuCase::NegL2, 1.0, 0.1),
                            mu_family(MuCase::PosL2, 1.0, 0.5)})
      residual_battery(acc, mu_profile(mu, win), PdeKind::liouville_h(), gen, c.points);
  }));
  const std::string eq = "h and omega forms agree, Liouville";
  out.push_back(run_check(eq, "pde.forms", c.tol.identity, [&](Accumulator& acc) {
    JetSampler gen(sub_seed(c.seed, eq));
    for (int i = 0; i < c.jets; ++i) {
      const Jet2 h = gen.positive_jet(2);
      acc.add(residual_scalar(PdeKind::liouville_h(), h) -
              residual_scalar(PdeKind::liouville_omega(), log(h)));
    }
  }));
  return out;
}

// --- titeica -----------------------------------------------------------------------

Suite titeica_suite(const VerifyConfig& c) {
  Suite out;
  const std::string one = "Titeica residual, h = 1";
  out.push_back(run_check(one, "titeica.residual", c.tol.solution, [&](Accumulator& acc) {
    JetSampler gen(sub_seed(c.seed, one));
    residual_battery(acc, titeica_constant(), PdeKind::titeica_h(), gen, c.points);
  }));
  for (double C1 : {0.0, 0.3, -0.8}) {
    std::ostringstream os;
    os << "Titeica residual, sinh profile C1 = " << C1;
    const std::string name = os.str();
    out.push_back(run_check(name, "titeica.residual", c.tol.solution, [&](Accumulator& acc) {
      JetSampler gen(sub_seed(c.seed, name));
      residual_battery(acc, titeica_sinh(C1), PdeKind::titeica_h(), gen, c.points);
    }));
  }
  const std::string tanh_name = "sinh profile equals the tanh form plus one";
  out.push_back(run_check(tanh_name, "titeica.tanh_form", c.tol.solution, [&](Accumulator& acc) {
    JetSampler gen(sub_seed(c.seed, tanh_name));
    const SolutionH s = titeica_sinh(0.3);
    const Bivariate t = titeica_sinh_from_tanh(0.3);
    for (int i = 0; i < c.points; ++i) {
      const auto p = gen.point(s.window);
      acc.add(s.value(p[0], p[1]) - t.value({p[0], p[1]}));
    }
  }));
  const std::string ode_name = "sinh profile solves w'^2 = (3 w^2 + 1) / 4";
  out.push_back(run_check(ode_name, "titeica.profile_ode", c.tol.solution, [&](Accumulator& acc) {
    const Curve w = titeica_sinh_w(0.0);
    for (int i = 0; i < c.points; ++i) acc.add(residual_ode_w(w.eval(0.2 + 2.8 * i / c.points, 1)));
  }));
  const std::string eq = "h and omega forms agree, Titeica";
  out.push_back(run_check(eq, "pde.forms", c.tol.identity, [&](Accumulator& acc) {
    JetSampler gen(sub_seed(c.seed, eq));
    for (int i = 0; i < c.jets; ++i) {
      const Jet2 h = gen.positive_jet(2);
      acc.add(residual_scalar(PdeKind::titeica_h(), h) -
              residual_scalar(PdeKind::titeica_omega(), log(h)));
    }
  }));
  return out;
}

// --- symmetry ----------------------------------------------------------------------

Suite symmetry(const VerifyConfig& c) {
  Suite out;
  const std::string liou = "f d/du + g d/dv - (f' + g') d/dw on Liouville solutions (20 random f, g per preset)";
  out.push_back(run_check(liou, "symmetry.liouville", c.tol.solution, [&](Accumulator& acc) {
    JetSampler gen(sub_seed(c.seed, liou));
    for (auto preset : kPresets) {
      const SolutionH sol = liouville_preset(preset);
      for (int k = 0; k < 20; ++k) {
        const auto W = liouville_symmetry(random_curve(gen), random_curve(gen));
        for (int s = 0; s < c.samples; ++s) {
          const auto p = gen.point(sol.window);
          acc.add(invariance_defect(W, PdeKind::liouville_omega(), sol.omega(p[0], p[1], 3)));
        }
      }
    }
  }));
  const std::string tit = "scaling and translations on Titeica solutions";
  out.push_back(run_check(tit, "symmetry.titeica", c.tol.solution, [&](Accumulator& acc) {
    JetSampler gen(sub_seed(c.seed, tit));
    for (const SolutionH& sol : {titeica_constant(), titeica_sinh(0.3)})
      for (const auto& X : titeica_symmetries())
        for (int s = 0; s < c.samples; ++s) {
          const auto p = gen.point(sol.window);
          acc.add(invariance_defect(X, PdeKind::titeica_omega(), sol.omega(p[0], p[1], 3)));
        }
  }));
  const std::string fin = "finite actions map solutions to solutions";
  out.push_back(run_check(fin, "symmetry.finite_actions", c.tol.solution, [&](Accumulator& acc) {
    JetSampler gen(sub_seed(c.seed, fin));
    const std::pair<SolutionH, PdeKind> cases[] = {
        {titeica_sinh(0.3), PdeKind::titeica_omega()},
        {liouville_preset(LiouvillePreset::Exp), PdeKind::liouville_omega()}};
    for (const auto& [sol, kind] : cases) {
      const Bivariate w = sol.omega_fn();
      for (double eps : {0.1, -0.1, 1.0, -1.0})
        for (auto a : {FiniteAction::scale(eps), FiniteAction::shift_u(eps), FiniteAction::shift_v(eps)}) {
          const Bivariate t = transform_solution(a, w);
          for (int s = 0; s < c.samples; ++s) {
            auto q = gen.point(sol.window);
            if (a.kind == FiniteActionKind::Scale) q = {std::exp(-eps) * q[0], std::exp(eps) * q[1]};
            if (a.kind == FiniteActionKind::ShiftU) q[0] += eps;
            if (a.kind == FiniteActionKind::ShiftV) q[1] += eps;
            acc.add(residual_scalar(kind, t.eval(q, 2)));
          }
        }
    }
  }));
  const std::string br = "bracket antisymmetry and Jacobi identity on the Titeica algebra";
  out.push_back(run_check(br, "symmetry.brackets", c.tol.identity, [&](Accumulator& acc) {
    JetSampler gen(sub_seed(c.seed, br));
    const auto U = titeica_symmetries();
    for (const auto& X : U)
      for (const auto& Y : U)
        for (const auto& Z : U) {
          const auto anti = lie_bracket(X, Y) + lie_bracket(Y, X);
          const auto jac = lie_bracket(X, lie_bracket(Y, Z)) + lie_bracket(Y, lie_bracket(Z, X)) +
                           lie_bracket(Z, lie_bracket(X, Y));
          const std::array<double, 3> p{gen.uniform(-2, 2), gen.uniform(-2, 2), gen.uniform(-2, 2)};
          for (const auto& j : anti.eval(p, 0)) acc.add(j.value());
          for (const auto& j : jac.eval(p, 0)) acc.add(j.value());
        }
  }));
  const std::string inv = "scaling invariants w, w_u w_v, w_uv, w_uu w_vv";
  out.push_back(run_check(inv, "symmetry.invariants", c.tol.identity, [&](Accumulator& acc) {
    JetSampler gen(sub_seed(c.seed, inv));
    for (int i = 0; i < c.jets; ++i)
      for (double d : scaling_invariants_check(gen.jet(2))) acc.add(d);
  }));
  const std::string det = "determining equations for both generator families";
  out.push_back(run_check(det, "symmetry.determining", c.tol.identity, [&](Accumulator& acc) {
    JetSampler gen(sub_seed(c.seed, det));
    const Curve eH = Curve::from_expr([](const Jet1& w) { return exp(w); });
    const Curve tH = PdeKind::titeica_omega().nonlinearity();
    for (int k = 0; k < 20; ++k) {
      const auto W = liouville_symmetry(random_curve(gen), random_curve(gen));
      const std::array<double, 3> p{gen.uniform(-2, 2), gen.uniform(-2, 2), gen.uniform(-2, 2)};
      for (double r : determining_residual(W, eH, p)) acc.add(r);
      for (const auto& X : titeica_symmetries())
        for (double r : determining_residual(X, tH, p)) acc.add(r);
    }
  }));
  const std::string tr = "translations of travelling profiles h = mu(C1 v - C2 u)";
  out.push_back(run_check(tr, "symmetry.translations", c.tol.solution, [&](Accumulator& acc) {
    JetSampler gen(sub_seed(c.seed, tr));
    for (int k = 0; k < 10; ++k) {
      const double C1 = gen.uniform(-2, 2), C2 = gen.uniform(-2, 2);
      const Bivariate h = Bivariate::from_expr([=](J2 u, J2 v) { return 2.0 + sin(C1 * v - C2 * u); });
      const auto F = nonruled_frame(h);
      for (int s = 0; s < 5; ++s)
        for (double r : frame_symmetry_residual(Curve::constant(C1), Curve::constant(C2), F,
                                             gen.uniform(-2, 2), gen.uniform(-2, 2)))
          acc.add(r);
    }
  }));
  const std::string xyz = "xyz is invariant under Y1 and Y2";
  out.push_back(run_check(xyz, "symmetry.xyz", c.tol.identity, [&](Accumulator& acc) {
    JetSampler gen(sub_seed(c.seed, xyz));
    const auto Y = unimodular_fields();
    const Trivariate F = xyz_product();
    for (int s = 0; s < c.samples; ++s) {
      const std::array<double, 3> x{gen.uniform(-2, 2), gen.uniform(-2, 2), gen.uniform(-2, 2)};
      acc.add(apply_linear_field(Y[0], F, x));
      acc.add(apply_linear_field(Y[1], F, x));
    }
    for (const auto& y : Y) acc.add(y.A.trace());
  }));
  return out;
}

// --- adjoint -----------------------------------------------------------------------

Suite adjoint_suite(const VerifyConfig& c) {
  Suite out;
  const LieBasis B(titeica_symmetries());
  for (double e : c.eps) {
    const double E = std::exp(e), Ei = std::exp(-e);
    // rows i, columns j of the adjoint table, as coefficient vectors
    const Eigen::Vector3d table[3][3] = {
        {{1, 0, 0}, {0, E, 0}, {0, 0, Ei}},
        {{1, -e, 0}, {0, 1, 0}, {0, 0, 1}},
        {{1, 0, e}, {0, 1, 0}, {0, 0, 1}},
    };
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        std::ostringstream os;
        os << "Ad(exp(" << e << " U" << i + 1 << ")) U" << j + 1;
        out.push_back(run_check(os.str(), "adjoint.table", c.tol.identity, [&](Accumulator& acc) {
          acc.add((adjoint(B, i, e, j) - table[i][j]).norm());
        }));
      }
  }
  return out;
}

// --- variational -------------------------------------------------------------------

Suite variational(const VerifyConfig& c) {
  Suite out;
  auto jets_check = [&](const std::string& name, const std::string& ref, int order,
                        const std::function<void(Accumulator&, const Jet2&)>& f) {
    out.push_back(run_check(name, ref, c.tol.identity, [&](Accumulator& acc) {
      JetSampler gen(sub_seed(c.seed, name));
      for (int i = 0; i < c.jets; ++i) f(acc, gen.jet(order));
    }));
  };
  jets_check("E(L1) is the Liouville operator", "variational.euler_lagrange", 2,
             [](Accumulator& acc, const Jet2& w) {
               acc.add(euler_lagrange(Lagrangian::L1(), w) -
                       residual_scalar(PdeKind::liouville_omega(), w));
             });
  jets_check("E(L2) is the Titeica operator", "variational.euler_lagrange", 2,
             [](Accumulator& acc, const Jet2& w) {
               acc.add(euler_lagrange(Lagrangian::L2(), w) -
                       residual_scalar(PdeKind::titeica_omega(), w));
             });
  jets_check("Helmholtz conditions, Liouville and Titeica", "variational.helmholtz", 3,
             [](Accumulator& acc, const Jet2& w) {
               for (const auto& kind : {PdeKind::liouville_omega(), PdeKind::titeica_omega()})
                 for (double r : helmholtz_residual(kind, w)) acc.add(r);
             });
  jets_check("Liouville variational generators on L1", "variational.symmetry", 2,
             [](Accumulator& acc, const Jet2& w) {
               for (const auto& X : liouville_variational_symmetries()) acc.add(variational_defect(X, Lagrangian::L1(), w));
             });
  jets_check("Titeica variational generators on L2", "variational.symmetry", 2,
             [](Accumulator& acc, const Jet2& w) {
               for (const auto& X : titeica_variational_symmetries()) acc.add(variational_defect(X, Lagrangian::L2(), w));
             });
  jets_check("u^2 d/du - 2u d/dw on L1 leaves the defect w_v", "variational.nonvariational", 2,
             [](Accumulator& acc, const Jet2& w) {
               static const auto W = liouville_symmetry(
                   Curve::from_expr([](const Jet1& u) { return u * u; }), Curve::constant(0.0));
               acc.add(variational_defect(W, Lagrangian::L1(), w) - w.d(0, 1));
             });
  out.push_back(run_check("integrating factor 1/h^3 for L1 and L2", "variational.integrating_factor",
                          c.tol.identity, [&](Accumulator& acc) {
                            JetSampler gen(sub_seed(c.seed, "integrating factor"));
                            for (int i = 0; i < c.jets; ++i) {
                              const Jet2 h = gen.positive_jet(2);
                              acc.add(integrating_factor_defect(Lagrangian::L1(), h));
                              acc.add(integrating_factor_defect(Lagrangian::L2(), h));
                            }
                          }));
  return out;
}

// --- conservation ------------------------------------------------------------------

Suite conservation(const VerifyConfig& c) {
  Suite out;
  for (const auto& label : conservation_table_labels()) {
    const std::string name = "conservation law " + label + " (divergence and Noether form)";
    out.push_back(run_check(name, "conservation.table", c.tol.identity, [&](Accumulator& acc) {
      const ConservationLaw table = conservation_table(label);
      const ConservationLaw law = noether_law(conservation_table_field(label),
                                              conservation_table_lagrangian(label), table.kind);
      JetSampler gen(sub_seed(c.seed, name));
      for (int i = 0; i < c.jets; ++i) {
        const Jet2 w = gen.jet(2);
        acc.add(conservation_divergence_defect(table, table.kind, w));
        for (auto f : {&ConservationLaw::P1, &ConservationLaw::P2, &ConservationLaw::Q})
          acc.add(along(law.*f, w, 0).value() - along(table.*f, w, 0).value());
      }
    }));
  }
  return out;
}

// --- integrability -----------------------------------------------------------------

Suite integrability(const VerifyConfig& c) {
  Suite out;
  const std::string nr = "non-ruled frames of Titeica solutions";
  out.push_back(run_check(nr, "integrability.nonruled", c.tol.solution, [&](Accumulator& acc) {
    JetSampler gen(sub_seed(c.seed, nr));
    for (const SolutionH& s : {titeica_constant(), titeica_sinh(0.0), titeica_sinh(0.3)}) {
      const auto f = nonruled_frame(s.h);
      for (int i = 0; i < c.samples; ++i) {
        const auto p = gen.point(s.window);
        for (double r : residual_integrability(f, p[0], p[1])) acc.add(r);
      }
    }
  }));
  const std::string ru = "ruled frames of Liouville solutions, relative to 1 + h";
  out.push_back(run_check(ru, "integrability.ruled", c.tol.solution, [&](Accumulator& acc) {
    JetSampler gen(sub_seed(c.seed, ru));
    const Curve phi = Curve::from_expr([](const Jet1& u) { return 1.0 + u * u; });
    for (auto preset : kPresets) {
      const SolutionH s = liouville_preset(preset);
      const auto f = ruled_frame(s.h, phi);
      for (int i = 0; i < c.samples; ++i) {
        const auto p = gen.point(s.window);
        const double scale = 1.0 + s.value(p[0], p[1]);
        for (double r : residual_integrability(f, p[0], p[1])) acc.add(r / scale);
      }
    }
  }));
  const std::string cube = "cube-root solutions of the h = 1 system";
  out.push_back(run_check(cube, "integrability.linear_system", c.tol.identity, [&](Accumulator& acc) {
    JetSampler gen(sub_seed(c.seed, cube));
    const auto f = nonruled_frame(Bivariate::constant(1.0));
    const double s3 = 0.5 * kSqrt3;
    const Bivariate sols[] = {
        Bivariate::from_expr([](J2 u, J2 v) { return exp(u + v); }),
        Bivariate::from_expr([=](J2 u, J2 v) { return exp(-0.5 * (u + v)) * cos(s3 * (u - v)); }),
        Bivariate::from_expr([=](J2 u, J2 v) { return exp(-0.5 * (u + v)) * sin(s3 * (u - v)); })};
    for (const auto& th : sols)
      for (int i = 0; i < c.samples; ++i)
        for (double r : residual_linear_system(f, th.eval({gen.uniform(-1, 1), gen.uniform(-1, 1)}, 2)))
          acc.add(r);
  }));
  const std::string rev = "rotation-type solutions built from the sinh profile";
  out.push_back(run_check(rev, "integrability.revolution", c.tol.ode, [&](Accumulator& acc) {
    JetSampler gen(sub_seed(c.seed, rev));
    const Curve mu = titeica_sinh_mu(0.0);
    const auto frame = nonruled_frame(titeica_sinh(0.0).h);
    for (int term = 0; term < 3; ++term) {
      RevolutionParams p{.k = kSqrt3 / 2, .alpha0 = 2.5, .alpha_lo = 2.0, .alpha_hi = 3.5};
      (term == 0 ? p.k1 : term == 1 ? p.k2 : p.k3) = 1.0;
      const Bivariate th = revolution_theta(mu, p);
      for (int i = 0; i < 10; ++i) {
        const double a = gen.uniform(2.05, 3.45), b = gen.uniform(-1, 1);
        for (double r : residual_linear_system(frame, th.eval({0.5 * (a + b), 0.5 * (a - b)}, 2)))
          acc.add(r);
      }
    }
  }));
  return out;
}

// --- surface -----------------------------------------------------------------------

const std::array<std::array<double, 3>, 3> kCubeRootIcs{
    {{1, 1, 1}, {1, -0.5, -0.5}, {0, 0.5 * kSqrt3, -0.5 * kSqrt3}}};

double exp_error(double step) {
  const GridSpec g = GridSpec::unit(step);
  const ComponentField f =
      integrate_component(nonruled_frame(Bivariate::constant(1.0)), {1, 1, 1}, g);
  double err = 0;
  for (int j = 0; j < g.nv; ++j)
    for (int i = 0; i < g.nu; ++i)
      err = std::max(err, std::abs(f.theta[g.index(i, j)] - std::exp(g.u(i) + g.v(j))));
  return err;
}

Suite surface_suite(const VerifyConfig& c) {
  Suite out;
  const auto unit = nonruled_frame(Bivariate::constant(1.0));
  out.push_back(run_check("relative spread of I, h = 1 surface, step 0.02", "surface.I_spread",
                          c.tol.integration, [&](Accumulator& acc) {
                            const GeometryReport rep =
                                geometry(integrate_surface(unit, kCubeRootIcs, GridSpec::unit(0.02)));
                            acc.n = static_cast<long>(rep.nodes.size());
                            acc.worst = rep.spread_I;
                          }));
  out.push_back(run_check("second-form diagonal on integrated surfaces", "surface.asymptotic",
                          c.tol.asymptotic, [&](Accumulator& acc) {
                            const auto sinh_frame = nonruled_frame(titeica_sinh(0.0).h);
                            const std::array<std::array<double, 3>, 3> e{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
                            for (const auto& rep :
                                 {geometry(integrate_surface(unit, kCubeRootIcs, GridSpec::unit(0.05))),
                                  geometry(integrate_surface(sinh_frame, e, GridSpec::unit(0.05, 0.5, 0.5)))})
                              for (double d : asymptotic_defect(rep)) acc.add(d);
                          }));
  out.push_back(run_check("relative spread of I, xyz = C", "surface.I_spread_analytic",
                          c.tol.solution, [&](Accumulator& acc) {
                            for (double C : {1.0, 2.5}) {
                              const GeometryReport rep =
                                  geometry(hyperbolic_surface(C), GridSpec::unit(0.02, -0.5, -0.5));
                              acc.n += static_cast<long>(rep.nodes.size());
                              acc.worst = std::max(acc.worst, rep.spread_I);
                            }
                          }));
  out.push_back(run_check("unimodular maps keep I per node", "surface.centroaffine", c.tol.solution,
                          [&](Accumulator& acc) {
                            const SurfaceGrid s = integrate_surface(unit, kCubeRootIcs, GridSpec::unit(0.05));
                            const GeometryReport base = geometry(s);
                            for (const auto& Y : unimodular_fields()) {
                              const GeometryReport rep = geometry(apply_linear_map(s, Y.flow(0.7)));
                              for (std::size_t k = 0; k < rep.nodes.size(); ++k)
                                acc.add((rep.nodes[k].I - base.nodes[k].I) / base.nodes[k].I);
                            }
                          }));
  out.push_back(run_check("RK4 order: closed-form error ratio (fine / coarse)", "surface.order",
                          1.0 / 12.0, [&](Accumulator& acc) { acc.add(exp_error(0.02) / exp_error(0.04)); }));
  out.push_back(run_check("RK4 order: marching-order discrepancy ratio (fine / coarse)",
                          "surface.order", 1.0 / 12.0, [&](Accumulator& acc) {
                            const auto f = nonruled_frame(titeica_sinh(0.0).h);
                            const std::array<double, 3> ic{1, 0.3, -0.2};
                            acc.add(marching_discrepancy(f, ic, GridSpec::unit(0.02, 0.5, 0.5)) /
                                    marching_discrepancy(f, ic, GridSpec::unit(0.04, 0.5, 0.5)));
                          }));
  return out;
}

// --- ode ---------------------------------------------------------------------------

Suite ode(const VerifyConfig& c) {
  Suite out;
  const Curve exact = titeica_sinh_mu(0.0);
  const Jet1 j0 = exact.eval(1.0, 1);
  out.push_back(run_check("RK4 profile matches the sinh closed form on [1, 3]", "ode.closed_form",
                          c.tol.ode, [&](Accumulator& acc) {
                            const auto tr = integrate_mu_ode(1.0, j0.value(), j0.d(1), 1.0, 3.0, 1e-3);
                            for (std::size_t i = 0; i < tr.t.size(); ++i)
                              acc.add(tr.mu[i] - exact.value(tr.t[i]));
                          }));
  out.push_back(run_check("drift of (mu'^2 - 2 mu^3 - 1) / (4 mu^2)", "ode.first_integral", c.tol.ode,
                          [&](Accumulator& acc) {
                            const auto tr = integrate_mu_ode(1.0, j0.value(), j0.d(1), 1.0, 3.0, 1e-3);
                            acc.n = static_cast<long>(tr.t.size());
                            acc.worst = tr.first_integral_drift;
                          }));
  out.push_back(run_check("RK4 order of the profile integrator (fine / coarse)", "ode.order",
                          1.0 / 12.0, [&](Accumulator& acc) {
                            auto err = [&](double h) {
                              const auto tr = integrate_mu_ode(1.0, j0.value(), j0.d(1), 1.0, 3.0, h);
                              return std::abs(tr.mu.back() - exact.value(3.0));
                            };
                            acc.add(err(0.02) / err(0.04));
                          }));
  return out;
}

const std::map<std::string, Suite (*)(const VerifyConfig&)>& registry() {
  static const std::map<std::string, Suite (*)(const VerifyConfig&)> r{
      {"liouville", liouville},         {"titeica", titeica_suite},
      {"symmetry", symmetry},           {"adjoint", adjoint_suite},
      {"variational", variational},     {"conservation", conservation},
      {"integrability", integrability}, {"surface", surface_suite},
      {"ode", ode},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"liouville",    "titeica",       "symmetry",
                                              "adjoint",      "variational",   "conservation",
                                              "integrability", "surface",      "ode"};
  return names;
}

std::vector<Check> run_suite(const std::string& suite, const VerifyConfig& cfg) {
  if (suite == "all") {
    std::vector<Check> out;
    for (const auto& name : suite_names()) {
      auto part = run_suite(name, cfg);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  const auto it = registry().find(suite);
  if (it == registry().end()) throw InvalidArgument("unknown suite '" + suite + "'");
  return it->second(cfg);
}

}  // namespace titeica::cli
