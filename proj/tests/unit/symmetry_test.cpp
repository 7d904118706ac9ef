#include <gtest/gtest.h>

#include <cmath>
#include <Eigen/LU>
#include <numbers>

#include "titeica/sampling.hpp"
#include "titeica/solutions.hpp"
#include "titeica/symmetry.hpp"

using namespace titeica;

namespace {

Curve curve(auto f) { return Curve::from_expr(f); }
Trivariate tri(auto f) { return Trivariate::from_expr(f); }

VectorField3 scaling_w() {
  return {"w d/dw", Trivariate::constant(0), Trivariate::constant(0),
          tri([](const Jet3&, const Jet3&, const Jet3& w) { return w; })};
}

VectorField3 d_omega() {
  return {"d/dw", Trivariate::constant(0), Trivariate::constant(0), Trivariate::constant(1)};
}

// a0 + a1 t + a2 t^2 + a3 sin(b t)
Curve random_curve(JetSampler& gen) {
  const double a0 = gen.uniform(-1, 1), a1 = gen.uniform(-1, 1), a2 = gen.uniform(-1, 1);
  const double a3 = gen.uniform(-1, 1), b = gen.uniform(0.5, 2);
  return curve([=](const Jet1& t) { return a0 + a1 * t + a2 * t * t + a3 * sin(b * t); });
}

double max_abs(const auto& r) {
  double m = 0;
  for (double x : r) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

// --- prolongation ---------------------------------------------------------------

TEST(Characteristic, Examples) {
  const auto U = titeica_symmetries();
  const Jet2 w = sin(seed_u(0.4, 0.9, 2)) * seed_v(0.4, 0.9, 2);
  EXPECT_NEAR(characteristic(U[1], w), -w.d(1, 0), 1e-15);

  const Jet2 w1 = 3.0 * seed_u(2.0, 0.5, 1);
  EXPECT_NEAR(characteristic(liouville_variational_symmetries()[0], w1), -7.0, 1e-14);

  const VectorField3 zero{"0", Trivariate::constant(0), Trivariate::constant(0),
                          Trivariate::constant(0)};
  EXPECT_EQ(characteristic(zero, w), 0.0);
  EXPECT_THROW(characteristic(zero, Jet2::constant(1.0, {0, 0}, 0)), OrderError);
}

TEST(Prolong, ScalingFieldIsLinear) {
  JetSampler gen(11);
  for (int i = 0; i < 20; ++i) {
    const Jet2 w = gen.jet(3);
    const ProlongedValue p = prolong2(scaling_w(), w);
    EXPECT_NEAR(p.au, w.d(1, 0), 1e-13);
    EXPECT_NEAR(p.av, w.d(0, 1), 1e-13);
    EXPECT_NEAR(p.auu, w.d(2, 0), 1e-13);
    EXPECT_NEAR(p.auv, w.d(1, 1), 1e-13);
    EXPECT_NEAR(p.avv, w.d(0, 2), 1e-13);
  }
}

TEST(Prolong, TranslationProlongsTrivially) {
  JetSampler gen(12);
  const Jet2 w = gen.jet(3);
  const ProlongedValue p = prolong2(titeica_symmetries()[1], w);
  EXPECT_EQ(max_abs(std::array{p.au, p.av, p.auu, p.auv, p.avv}), 0.0);
}

TEST(Prolong, ThirdDerivativesDoNotMatter) {
  JetSampler gen(13);
  const auto W = liouville_symmetry(random_curve(gen), random_curve(gen));
  const Jet2 w3 = gen.jet(3);
  const ProlongedValue a = prolong2(W, w3), b = prolong2(W, w3.truncated(2));
  EXPECT_NEAR(a.auv, b.auv, 1e-13);
  EXPECT_NEAR(a.avv, b.avv, 1e-13);
  EXPECT_NEAR(prolong1(W, w3).au, a.au, 1e-13);
  EXPECT_NEAR(prolong1(W, w3.truncated(1)).av, a.av, 1e-13);
  EXPECT_THROW(prolong2(W, w3.truncated(1)), OrderError);
}

// Hand expansion for U1 = u d/du - v d/dv: alpha^u = -w_u, alpha^uu = -2 w_uu.
TEST(Prolong, ScalingOfVariablesByHand) {
  JetSampler gen(14);
  const Jet2 w = gen.jet(3);
  const ProlongedValue p = prolong2(titeica_symmetries()[0], w);
  EXPECT_NEAR(p.au, -w.d(1, 0), 1e-13);
  EXPECT_NEAR(p.av, w.d(0, 1), 1e-13);
  EXPECT_NEAR(p.auu, -2 * w.d(2, 0), 1e-13);
  EXPECT_NEAR(p.auv, 0.0, 1e-13);
  EXPECT_NEAR(p.avv, 2 * w.d(0, 2), 1e-13);
}

// pr2 W (w_uv - e^w) = -(f' + g')(w_uv - e^w) for any jet.
TEST(Prolong, LiouvilleFieldIdentityOnArbitraryJets) {
  JetSampler gen(15);
  const auto kind = PdeKind::liouville_omega();
  const Curve f0 = curve([](const Jet1& u) { return u * u; });
  const Curve g0 = curve([](const Jet1& v) { return v; });
  for (int i = 0; i < 200; ++i) {
    const Curve f = i == 0 ? f0 : random_curve(gen);
    const Curve g = i == 0 ? g0 : random_curve(gen);
    const Jet2 w = gen.jet(3);
    const auto& b = w.base();
    const double fg = f.eval(b[0], 1).d(1) + g.eval(b[1], 1).d(1);
    const double lhs = prolonged_equation(liouville_symmetry(f, g), kind, w);
    EXPECT_NEAR(lhs, -fg * residual_scalar(kind, w), 1e-10 * (1 + std::abs(lhs)));
  }
}

// --- invariance -------------------------------------------------------------------

TEST(Invariance, LiouvilleFieldsOnLiouvilleSolutions) {
  JetSampler gen(21);
  const auto kind = PdeKind::liouville_omega();
  double worst = 0;
  for (auto preset : {LiouvillePreset::Identity, LiouvillePreset::Exp, LiouvillePreset::Tanh}) {
    const SolutionH sol = liouville_preset(preset);
    for (int k = 0; k < 20; ++k) {
      const auto W = liouville_symmetry(random_curve(gen), random_curve(gen));
      for (int s = 0; s < 50; ++s) {
        const auto p = gen.point(sol.window);
        worst = std::max(worst, std::abs(invariance_defect(W, kind, sol.omega(p[0], p[1], 3))));
      }
    }
  }
  EXPECT_LE(worst, 1e-10);
}

TEST(Invariance, SinAndCubeOnGeneralLiouville) {
  const Curve U = curve([](const Jet1& t) { return exp(t); });
  const Curve V = curve([](const Jet1& t) { return t * t * t + t; });
  const Curve dV = curve([](const Jet1& t) { return 3.0 * t * t + 1.0; });
  const SolutionH sol = liouville_general(U, U, V, dV, Box<2>{{0.1, 0.1}, {2.0, 2.0}});
  const auto W = liouville_symmetry(curve([](const Jet1& u) { return sin(u); }),
                             curve([](const Jet1& v) { return v * v * v; }));
  JetSampler gen(22);
  for (int s = 0; s < 50; ++s) {
    const auto p = gen.point(sol.window);
    EXPECT_LE(std::abs(invariance_defect(W, PdeKind::liouville_omega(), sol.omega(p[0], p[1], 3))),
              1e-10);
  }
}

TEST(Invariance, TiteicaFieldsOnTiteicaSolutions) {
  JetSampler gen(23);
  const auto kind = PdeKind::titeica_omega();
  for (const SolutionH& sol : {titeica_constant(), titeica_sinh(0.3), titeica_sinh(-0.8)}) {
    for (const auto& X : titeica_symmetries()) {
      for (int s = 0; s < 50; ++s) {
        const auto p = gen.point(sol.window);
        EXPECT_LE(std::abs(invariance_defect(X, kind, sol.omega(p[0], p[1], 3))), 1e-10)
            << X.name;
      }
    }
  }
}

TEST(Invariance, OmegaTranslationIsNotASymmetry) {
  const SolutionH sol = titeica_sinh(0.3);
  const auto p = JetSampler(24).point(sol.window);
  const Jet2 w = sol.omega(p[0], p[1], 3);
  const double x = w.value();
  const double expected = -(std::exp(x) + 2 * std::exp(-2 * x));
  EXPECT_NEAR(invariance_defect(d_omega(), PdeKind::titeica_omega(), w), expected, 1e-12);
  EXPECT_GT(std::abs(expected), 1e-3);
}

TEST(Invariance, OffSolutionSampleIsReported) {
  JetSampler gen(25);
  const Jet2 w = gen.jet(3);
  EXPECT_THROW(invariance_defect(titeica_symmetries()[0], PdeKind::titeica_omega(), w), DomainError);
  EXPECT_THROW(prolonged_equation(titeica_symmetries()[0], PdeKind::titeica_h(), w), InvalidArgument);
}

TEST(Invariance, ScalingInvariants) {
  JetSampler gen(26);
  for (int i = 0; i < 100; ++i) EXPECT_LE(max_abs(scaling_invariants_check(gen.jet(2))), 1e-12);
  EXPECT_THROW(scaling_invariants_check(gen.jet(1)), OrderError);
}

// --- finite actions ----------------------------------------------------------------

TEST(FiniteAction, ScaleZeroIsIdentity) {
  const SolutionH sol = titeica_sinh(0.3);
  const Bivariate w = sol.omega_fn();
  const Bivariate t = transform_solution(FiniteAction::scale(0.0), w);
  const Jet2 a = w.eval({0.7, 0.4}, 3), b = t.eval({0.7, 0.4}, 3);
  for (int s = 0; s < Jet2::kSize; ++s) EXPECT_EQ(a.coeff(s), b.coeff(s));
}

TEST(FiniteAction, ActionsPreserveSolutions) {
  JetSampler gen(31);
  struct Case {
    SolutionH sol;
    PdeKind kind;
  };
  const std::vector<Case> cases{{titeica_sinh(0.3), PdeKind::titeica_omega()},
                                {liouville_preset(LiouvillePreset::Exp), PdeKind::liouville_omega()}};
  for (const auto& c : cases) {
    const Bivariate w = c.sol.omega_fn();
    for (double eps : {0.1, -0.1, 1.0, -1.0}) {
      for (auto a : {FiniteAction::scale(eps), FiniteAction::shift_u(eps), FiniteAction::shift_v(eps)}) {
        const Bivariate t = transform_solution(a, w);
        for (int s = 0; s < 50; ++s) {
          // pick the image point in the window and pull it back
          auto q = gen.point(c.sol.window);
          switch (a.kind) {
            case FiniteActionKind::Scale: q = {std::exp(-eps) * q[0], std::exp(eps) * q[1]}; break;
            case FiniteActionKind::ShiftU: q[0] += eps; break;
            case FiniteActionKind::ShiftV: q[1] += eps; break;
          }
          EXPECT_LE(std::abs(residual_scalar(c.kind, t.eval(q, 2))), 1e-10);
        }
      }
    }
  }
}

TEST(FiniteAction, ShiftMatchesShiftedLiouvilleCurve) {
  const SolutionH sol = liouville_preset(LiouvillePreset::Identity);
  const Bivariate shifted = transform_solution(FiniteAction::shift_u(1.0), sol.h);
  const SolutionH ref = liouville_general(curve([](const Jet1& t) { return t - 1.0; }),
                                          curve([](const Jet1& t) { return t; }));
  JetSampler gen(32);
  for (int s = 0; s < 20; ++s) {
    const double u = gen.uniform(1.3, 3.5), v = gen.uniform(0.2, 3);
    EXPECT_NEAR(shifted.value({u, v}), ref.value(u, v), 1e-14);
  }
}

TEST(FiniteAction, DomainExitPropagates) {
  const SolutionH sol = titeica_sinh(0.3);
  const Bivariate t = transform_solution(FiniteAction::shift_u(5.0), sol.h);
  const double t0 = -2 * 0.3 / std::numbers::sqrt3;
  // image point lands on the pole u + v = t0
  EXPECT_THROW(t.eval({t0 + 5.0, 0.0}, 2), DomainError);
}

// --- brackets and adjoint -------------------------------------------------------------

TEST(Bracket, HandBrackets) {
  const auto U = titeica_symmetries();
  const LieBasis B(U);
  EXPECT_LE((B.bracket(1, 2)).norm(), 1e-14);
  EXPECT_LE((B.bracket(0, 1) - Eigen::Vector3d(0, -1, 0)).norm(), 1e-13);
  EXPECT_LE((B.bracket(0, 2) - Eigen::Vector3d(0, 0, 1)).norm(), 1e-13);

  const auto c = lie_bracket(U[0], U[1]).eval({0.3, -0.7, 1.1}, 0);
  EXPECT_NEAR(c[0].value(), -1.0, 1e-15);
  EXPECT_NEAR(c[1].value(), 0.0, 1e-15);
}

TEST(Bracket, AntisymmetryAndJacobi) {
  JetSampler gen(41);
  for (const auto& basis : {titeica_symmetries(), liouville_variational_symmetries()}) {
    for (const auto& X : basis)
      for (const auto& Y : basis)
        for (const auto& Z : basis) {
          const auto anti = lie_bracket(X, Y) + lie_bracket(Y, X);
          const auto jac = lie_bracket(X, lie_bracket(Y, Z)) + lie_bracket(Y, lie_bracket(Z, X)) +
                           lie_bracket(Z, lie_bracket(X, Y));
          for (int s = 0; s < 5; ++s) {
            const std::array<double, 3> p{gen.uniform(-2, 2), gen.uniform(-2, 2), gen.uniform(-2, 2)};
            for (const auto& j : anti.eval(p, 0)) EXPECT_LE(std::abs(j.value()), 1e-12);
            for (const auto& j : jac.eval(p, 0)) EXPECT_LE(std::abs(j.value()), 1e-12);
          }
        }
  }
}

TEST(Bracket, JacobiForNonPolynomialFields) {
  JetSampler gen(42);
  const auto X = liouville_symmetry(random_curve(gen), random_curve(gen));
  const auto Y = liouville_symmetry(random_curve(gen), random_curve(gen));
  const auto Z = titeica_symmetries()[0];
  const auto jac = lie_bracket(X, lie_bracket(Y, Z)) + lie_bracket(Y, lie_bracket(Z, X)) +
                   lie_bracket(Z, lie_bracket(X, Y));
  for (const auto& j : jac.eval({0.2, 0.4, 0.1}, 0)) EXPECT_LE(std::abs(j.value()), 1e-12);
}

TEST(LieBasisTest, RejectsDependentOrOpenBases) {
  auto U = titeica_symmetries();
  EXPECT_THROW(LieBasis({U[1], 2.0 * U[1]}), InvalidArgument);
  EXPECT_THROW(LieBasis({U[0], U[1]}).coordinates(U[2]), InvalidArgument);
  // {U1, scaling in w} brackets stay inside; {U2, w d/du} do not
  const VectorField3 wdu{"w d/du", tri([](const Jet3&, const Jet3&, const Jet3& w) { return w; }),
                         Trivariate::constant(0), Trivariate::constant(0)};
  EXPECT_THROW(LieBasis({wdu, d_omega()}), InvalidArgument);
  EXPECT_THROW(LieBasis({}), InvalidArgument);
}

TEST(Adjoint, ClosedFormsForTheTiteicaAlgebra) {
  const LieBasis B(titeica_symmetries());
  for (double e : {0.1, 0.5, 1.0}) {
    const double E = std::exp(e), Ei = std::exp(-e);
    const Eigen::Matrix3d table[3] = {
        (Eigen::Matrix3d() << 1, 0, 0, 0, E, 0, 0, 0, Ei).finished(),
        (Eigen::Matrix3d() << 1, 0, 0, -e, 1, 0, 0, 0, 1).finished(),
        (Eigen::Matrix3d() << 1, 0, 0, 0, 1, 0, e, 0, 1).finished(),
    };
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        EXPECT_LE((adjoint(B, i, e, j) - table[i].col(j)).norm(), 1e-12)
            << "i=" << i << " j=" << j << " eps=" << e;
  }
}

TEST(Adjoint, Examples) {
  const LieBasis B(titeica_symmetries());
  EXPECT_NEAR(adjoint(B, 0, 1.0, 1)(1), std::numbers::e, 1e-14);
  EXPECT_LE((adjoint(B, 1, 0.5, 0) - Eigen::Vector3d(1, -0.5, 0)).norm(), 1e-15);
  for (int j = 0; j < 3; ++j)
    EXPECT_EQ(adjoint(B, 2, 0.0, j), Eigen::VectorXd(Eigen::VectorXd::Unit(3, j)));
  EXPECT_THROW(adjoint(B, 3, 0.1, 0), InvalidArgument);
}

TEST(Adjoint, LargeParameterDoesNotConverge) {
  const LieBasis B(titeica_symmetries());
  EXPECT_THROW(adjoint(B, 0, 40.0, 1), NumericalError);
}

TEST(Adjoint, LiouvilleVariationalTranslationsAndScalings) {
  const LieBasis B(liouville_variational_symmetries());
  // [W1, W3] = -W3, so Ad(exp eps W1) W3 = e^eps W3
  EXPECT_NEAR(adjoint(B, 0, 0.7, 2)(2), std::exp(0.7), 1e-13);
  EXPECT_NEAR(adjoint(B, 1, 0.7, 3)(3), std::exp(0.7), 1e-13);
  EXPECT_LE((adjoint(B, 0, 0.7, 1) - Eigen::Vector4d(0, 1, 0, 0)).norm(), 1e-15);
}

// --- defining equations -------------------------------------------------------------

TEST(Defining20, TranslationsOfTravellingProfile) {
  const double C1 = 0.6, C2 = -1.3;
  const Bivariate h = Bivariate::from_expr(
      [=](const Jet2& u, const Jet2& v) { return 2.0 + sin(C1 * v - C2 * u); });
  const CoefficientFrame F = nonruled_frame(h);
  JetSampler gen(51);
  for (int s = 0; s < 20; ++s) {
    const double u = gen.uniform(-2, 2), v = gen.uniform(-2, 2);
    EXPECT_LE(max_abs(frame_symmetry_residual(Curve::constant(C1), Curve::constant(C2), F, u, v)),
              1e-10);
  }
}

TEST(Defining20, RuledChangeOfVariables) {
  const Curve U = curve([](const Jet1& t) { return exp(t); });
  const Curve V = curve([](const Jet1& t) { return t * t * t + t; });
  const Bivariate h = Bivariate::from_expr([](const Jet2& u, const Jet2& v) {
    return exp(u) * (3.0 * v * v + 1.0) * (2.0 + cos(exp(u) + v * v * v + v));
  });
  const CoefficientFrame F = ruled_frame(h, Curve::constant(1.0));
  const Curve zeta = curve([](const Jet1& t) { return exp(-t); });
  const Curve eta = curve([](const Jet1& t) { return -1.0 / (3.0 * t * t + 1.0); });
  JetSampler gen(52);
  for (int s = 0; s < 20; ++s) {
    const double u = gen.uniform(-1, 1), v = gen.uniform(-1, 1);
    EXPECT_LE(std::abs(frame_symmetry_residual(zeta, eta, F, u, v)[2]), 1e-10);
  }
  (void)U;
  (void)V;
}

TEST(Defining20, NegativeControl) {
  const Bivariate h =
      Bivariate::from_expr([](const Jet2& u, const Jet2& v) { return 2.0 + sin(u + v); });
  const auto r = frame_symmetry_residual(curve([](const Jet1& u) { return u; }), Curve::constant(0.0),
                                      nonruled_frame(h), 0.4, 0.3);
  EXPECT_GT(std::abs(r[2]), 1e-3);
}

TEST(Defining20, RuledZetaCondition) {
  const double k = 0.75;
  const Curve zeta = curve([](const Jet1& u) { return 1.0 + u * u; });
  const Curve phi = curve([=](const Jet1& u) { return k / ((1.0 + u * u) * (1.0 + u * u) * (1.0 + u * u)); });
  EXPECT_NEAR(ruled_zeta_residual(zeta, phi, k, 0.8), 0.0, 1e-14);
  EXPECT_NEAR(ruled_zeta_residual(zeta, phi, 2 * k, 0.8), -k, 1e-14);
}

TEST(Determining, LiouvilleFieldWithExponential) {
  JetSampler gen(61);
  const Curve H = curve([](const Jet1& w) { return exp(w); });
  for (int k = 0; k < 20; ++k) {
    const auto W = liouville_symmetry(random_curve(gen), random_curve(gen));
    const std::array<double, 3> p{gen.uniform(-2, 2), gen.uniform(-2, 2), gen.uniform(-2, 2)};
    EXPECT_LE(max_abs(determining_residual(W, H, p)), 1e-12);
  }
}

TEST(Determining, TiteicaFieldsWithTiteicaNonlinearity) {
  JetSampler gen(62);
  const Curve H = PdeKind::titeica_omega().nonlinearity();
  for (const auto& X : titeica_symmetries())
    for (int s = 0; s < 10; ++s) {
      const std::array<double, 3> p{gen.uniform(-2, 2), gen.uniform(-2, 2), gen.uniform(-1, 1)};
      EXPECT_LE(max_abs(determining_residual(X, H, p)), 1e-12) << X.name;
    }
}

TEST(Defining26, OmegaScalingIsNegativeControl) {
  const Curve H = curve([](const Jet1& w) { return exp(w); });
  const double w = 0.3;
  const auto r = determining_residual(scaling_w(), H, {0.5, 0.5, w});
  EXPECT_LE(max_abs(std::array{r[0], r[1], r[2], r[3], r[4], r[5], r[6]}), 0.0);
  EXPECT_NEAR(r[7], std::exp(w) * (1 - w), 1e-14);
  EXPECT_GT(std::abs(r[7]), 1e-3);
}

// With an extra -phi H term the last equation rejects the Liouville field on e^w.
TEST(Determining, ExtraPhiTermRejectsLiouvilleField) {
  const Curve f = curve([](const Jet1& u) { return u * u; });
  const Curve g = curve([](const Jet1& v) { return v; });
  const auto W = liouville_symmetry(f, g);
  const std::array<double, 3> p{0.5, 0.2, 0.1};
  const auto r = determining_residual(W, curve([](const Jet1& w) { return exp(w); }), p);
  const double phi = W.phi.value(p);
  EXPECT_LE(std::abs(r[7]), 1e-12);
  EXPECT_GT(std::abs(r[7] - phi * std::exp(p[2])), 1e-3);
}

// --- catalogs ------------------------------------------------------------------------

TEST(Catalog, UnimodularMatrices) {
  const auto Y = unimodular_fields();
  ASSERT_EQ(Y.size(), 8u);
  EXPECT_EQ(Y[0].A, Eigen::Matrix3d(Eigen::Vector3d(1, 0, -1).asDiagonal()));
  EXPECT_EQ(Y[1].A, Eigen::Matrix3d(Eigen::Vector3d(0, 1, -1).asDiagonal()));
  for (const auto& y : Y) EXPECT_EQ(y.A.trace(), 0.0) << y.name;
  for (const auto& y : Y) EXPECT_NEAR(y.flow(0.7).determinant(), 1.0, 1e-13) << y.name;
}

TEST(Catalog, NamedBases) {
  const auto U = catalog("titeica");
  ASSERT_EQ(U.size(), 3u);
  const auto c = U[0].eval({2.0, 3.0, 0.5}, 0);
  EXPECT_EQ(c[0].value(), 2.0);
  EXPECT_EQ(c[1].value(), -3.0);
  EXPECT_EQ(c[2].value(), 0.0);

  const auto W = catalog("liouville-variational");
  ASSERT_EQ(W.size(), 4u);
  const auto w3 = W[2].eval({2.0, 3.0, 0.5}, 0);
  EXPECT_EQ(w3[0].value(), 1.0);
  EXPECT_EQ(w3[1].value(), 0.0);
  EXPECT_EQ(w3[2].value(), 0.0);

  EXPECT_EQ(catalog("titeica-variational").size(), 3u);
  EXPECT_EQ(catalog("theta-scaling")[0].phi.value({0, 0, 1.5}), 1.5);
  EXPECT_THROW(catalog("nope"), InvalidArgument);
}

TEST(Catalog, ReparametrizationLifts) {
  const auto Z = reparametrization_field(curve([](const Jet1& u) { return u * u; }),
                                curve([](const Jet1& v) { return sin(v); }));
  const auto c = Z.eval({0.5, 0.3, 9.0}, 1);
  EXPECT_NEAR(c[0].value(), 0.25, 1e-15);
  EXPECT_NEAR(c[0].d(1, 0, 0), 1.0, 1e-15);
  EXPECT_NEAR(c[1].d(0, 1, 0), std::cos(0.3), 1e-15);
  EXPECT_EQ(c[1].d(1, 0, 0), 0.0);
}

TEST(Catalog, ThetaScalingScalesTheta) {
  JetSampler gen(71);
  const Jet2 w = gen.jet(3);
  const ProlongedValue p = prolong2(theta_scaling_field(), w);
  EXPECT_NEAR(p.auv, w.d(1, 1), 1e-13);
}

TEST(Catalog, XyzInvariance) {
  const auto Y = unimodular_fields();
  const Trivariate F = xyz_product();
  EXPECT_EQ(apply_linear_field(Y[0], F, {1, 2, 3}), 0.0);
  JetSampler gen(72);
  for (int s = 0; s < 20; ++s) {
    const std::array<double, 3> x{gen.uniform(-2, 2), gen.uniform(-2, 2), gen.uniform(-2, 2)};
    EXPECT_LE(std::abs(apply_linear_field(Y[0], F, x)), 1e-13);
    EXPECT_LE(std::abs(apply_linear_field(Y[1], F, x)), 1e-13);
  }
  const std::array<double, 3> x{0.7, 1.3, -0.4};
  EXPECT_NEAR(apply_linear_field(Y[2], F, x), x[1] * x[1] * x[2], 1e-14);
}

TEST(VectorFieldOps, LinearCombination) {
  const auto U = titeica_symmetries();
  const auto X = 2.0 * U[0] + -U[1];
  const auto c = X.eval({0.5, 0.25, 0}, 0);
  EXPECT_EQ(c[0].value(), 0.0);
  EXPECT_EQ(c[1].value(), -0.5);
}
