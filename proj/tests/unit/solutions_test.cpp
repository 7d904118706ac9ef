#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fd_oracle.hpp"
#include "titeica/pde.hpp"
#include "titeica/sampling.hpp"
#include "titeica/solutions.hpp"

using namespace titeica;
using titeica::testing::fd_oracle;

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;

Curve identity_curve() {
  return Curve::from_expr([](const Jet1& t) { return t; });
}

}  // namespace

TEST(Liouville, IdentityPresetValue) {
  const auto s = liouville_preset(LiouvillePreset::Identity);
  EXPECT_NEAR(s.value(1, 1), 0.5, 1e-15);
}

TEST(Liouville, ExpPresetValue) {
  const auto s = liouville_preset(LiouvillePreset::Exp);
  EXPECT_NEAR(s.value(0, 0), 0.5, 1e-15);
}

TEST(Liouville, JetsMatchOracleOfClosedForm) {
  const auto s = liouville_preset(LiouvillePreset::Identity);
  JetSampler gen(3);
  for (int i = 0; i < 20; ++i) {
    const auto p = gen.point(s.window);
    const Jet2 got = s.eval(p[0], p[1], 3);
    const Jet2 want =
        fd_oracle([](double u, double v) { return 2.0 / ((u + v) * (u + v)); }, p[0], p[1], 3);
    for (int k = 0; k < Jet2::kSize; ++k)
      EXPECT_NEAR(got.coeff(k), want.coeff(k), 1e-6 * (1 + std::abs(want.coeff(k))));
  }
}

TEST(Liouville, DegenerateDerivativeIsRejected) {
  const auto s = liouville_general(Curve::constant(1.0), identity_curve());
  EXPECT_THROW(s.eval(1, 1, 2), DomainError);
}

TEST(Liouville, DerivedDerivativesStopAtSecondOrder) {
  const auto s = liouville_general(identity_curve(), identity_curve());
  EXPECT_NEAR(s.eval(1, 1, 2).d(1, 1), 12.0 / 16.0, 1e-14);  // 2/t^2: 12/t^4 at t = 2
  EXPECT_THROW(s.eval(1, 1, 3), OrderError);
}

TEST(Liouville, PoleIsRejected) {
  const auto s = liouville_general(identity_curve(), identity_curve());
  EXPECT_THROW(s.eval(1, -1, 2), DomainError);
}

TEST(Liouville, PresetsSolveTheEquation) {
  for (auto preset : {LiouvillePreset::Identity, LiouvillePreset::Exp, LiouvillePreset::Tanh}) {
    const auto s = liouville_preset(preset);
    JetSampler gen(11);
    for (int i = 0; i < 100; ++i) {
      const auto p = gen.point(s.window);
      EXPECT_LE(std::abs(residual_scalar(PdeKind::liouville_h(), s.eval(p[0], p[1], 2))), 1e-10);
      EXPECT_LE(std::abs(residual_scalar(PdeKind::liouville_omega(), s.omega(p[0], p[1], 2))),
                1e-10);
    }
  }
}

TEST(Liouville, DependsOnlyOnDerivativesAndSum) {
  const double c = 0.7;
  const Curve one = Curve::constant(1.0);
  const auto a = liouville_general(identity_curve(), one, identity_curve(), one);
  const auto b = liouville_general(Curve::from_expr([c](const Jet1& t) { return t + c; }), one,
                                   Curve::from_expr([c](const Jet1& t) { return t - c; }), one);
  JetSampler gen(4);
  for (int i = 0; i < 50; ++i) {
    const double u = gen.uniform(0.2, 2), v = gen.uniform(0.2, 2);
    const Jet2 ja = a.eval(u, v, 3), jb = b.eval(u, v, 3);
    for (int k = 0; k < Jet2::kSize; ++k) EXPECT_NEAR(ja.coeff(k), jb.coeff(k), 1e-12);
  }
}

TEST(MuFamily, ZeroCaseValues) {
  const Curve mu = mu_family(MuCase::Zero, 0.0, 0.0);
  const Jet1 j = mu.eval(2.0, 2);
  EXPECT_NEAR(j.value(), 0.5, 1e-15);
  EXPECT_NEAR(j.d(1), -0.5, 1e-15);
}

TEST(MuFamily, AllCasesSolveTheLiouvilleReduction) {
  const Curve fams[] = {mu_family(MuCase::Zero, 0.0, 0.3), mu_family(MuCase::PosL2, 2.0, 0.0),
                        mu_family(MuCase::NegL2, 1.0, 0.1)};
  for (const auto& mu : fams)
    for (double t : {0.5, 1.0, 2.0})
      EXPECT_LE(std::abs(residual_ode_mu(mu.eval(t, 2), MuRhs::liouville())), 1e-10) << t;
}

TEST(MuFamily, PolesAreRejected) {
  EXPECT_THROW(mu_family(MuCase::Zero, 0.0, 1.0).eval(-1.0, 2), DomainError);
  EXPECT_THROW(mu_family(MuCase::PosL2, 2.0, 0.0).eval(0.0, 2), DomainError);
  EXPECT_THROW(mu_family(MuCase::NegL2, 2.0, 0.0).eval(std::numbers::pi / 2, 2), DomainError);
  EXPECT_THROW(mu_family(MuCase::PosL2, 0.0, 0.0), InvalidArgument);
}

TEST(TiteicaConstant, ValuesAndResiduals) {
  const auto s = titeica_constant();
  const Jet2 h = s.eval(0, 0, 3);
  EXPECT_EQ(h.value(), 1.0);
  for (int k = 1; k < Jet2::kSize; ++k) EXPECT_EQ(h.coeff(k), 0.0);
  EXPECT_EQ(residual_scalar(PdeKind::titeica_h(), h), 0.0);
  EXPECT_EQ(residual_scalar(PdeKind::titeica_omega(), s.omega(0, 0, 2)), 0.0);
}

TEST(TiteicaSinh, ClosedFormValue) {
  const auto s = titeica_sinh(0.0);
  const double sh = std::sinh(kSqrt3);
  EXPECT_NEAR(s.value(1, 1), 3.0 / (2.0 * sh * sh) + 1.0, 1e-14);
}

TEST(TiteicaSinh, SolvesTheEquation) {
  for (double C1 : {0.0, 0.4, -0.3}) {
    const auto s = titeica_sinh(C1);
    JetSampler gen(21);
    for (int i = 0; i < 50; ++i) {
      const auto p = gen.point(s.window);
      EXPECT_LE(std::abs(residual_scalar(PdeKind::titeica_h(), s.eval(p[0], p[1], 2))), 1e-10);
    }
  }
}

TEST(TiteicaSinh, ProfileSatisfiesFirstOrderEquations) {
  const Curve w = titeica_sinh_w(0.0);
  for (double t = 0.2; t <= 3.0; t += 0.1) {
    EXPECT_LE(std::abs(residual_ode_w(w.eval(t, 1))), 1e-10);
    // g = 1/w^2 + 2 solves g'^2 = (g + 1)(g - 2)^2
    const Jet1 wj = w.eval(t, 1);
    EXPECT_LE(std::abs(residual_ode_g(1.0 / (wj * wj) + 2.0, -3.0)), 1e-10 * (1 + 1 / std::pow(wj.value(), 6)));
  }
}

TEST(TiteicaSinh, PoleIsRejected) {
  EXPECT_THROW(titeica_sinh(0.0).eval(0.5, -0.5, 2), DomainError);
}

TEST(TiteicaSinh, EqualsLiouvilleFormPlusOne) {
  for (double C1 : {0.0, 0.35}) {
    const auto s = titeica_sinh(C1);
    const Bivariate alt = titeica_sinh_from_tanh(C1);
    for (int i = 0; i < 15; ++i)
      for (int j = 0; j < 15; ++j) {
        const double u = s.window.lo[0] + 0.05 + 0.12 * i;
        const double v = s.window.lo[1] + 0.05 + 0.12 * j;
        const Jet2 a = s.eval(u, v, 2), b = alt.eval({u, v}, 2);
        for (int k = 0; k < 6; ++k)
          EXPECT_NEAR(a.coeff(k), b.coeff(k), 1e-10 * (1 + std::abs(a.coeff(k))));
      }
  }
}

TEST(Hyperbolic, ProductIsConstant) {
  const auto s = hyperbolic_surface(1.0);
  const auto r = s.eval(0, 0, 1);
  EXPECT_NEAR(r[2].value(), 1.0, 1e-15);
  JetSampler gen(8);
  for (int i = 0; i < 20; ++i) {
    const double u = gen.uniform(-2, 2), v = gen.uniform(-2, 2);
    const auto q = hyperbolic_surface(2.5).eval(u, v, 0);
    EXPECT_NEAR(q[0].value() * q[1].value() * q[2].value(), 2.5, 1e-13);
  }
  EXPECT_THROW(hyperbolic_surface(0.0), InvalidArgument);
}

// --- revolution solutions ----------------------------------------------------

TEST(Revolution, UnitProfileReproducesCubeRootSolutions) {
  const Curve one = Curve::constant(1.0);
  RevolutionParams p{.k = kSqrt3 / 2, .k1 = 1.0, .alpha0 = 0.0, .alpha_lo = -1.0, .alpha_hi = 2.0};
  const Bivariate th = revolution_theta(one, p);
  for (double u : {-0.3, 0.1, 0.6})
    for (double v : {-0.2, 0.4}) {
      const double a = u + v, b = u - v;
      EXPECT_NEAR(th.value({u, v}), std::exp(-a / 2) * std::cos(kSqrt3 * b / 2), 1e-12);
    }
}

TEST(Revolution, AllTermsSolveTheLinearSystemForUnitProfile) {
  const Curve one = Curve::constant(1.0);
  const auto frame = nonruled_frame(Bivariate::constant(1.0));
  for (int term = 0; term < 3; ++term) {
    RevolutionParams p{.k = kSqrt3 / 2, .alpha0 = 0.0, .alpha_lo = -1.0, .alpha_hi = 2.0};
    (term == 0 ? p.k1 : term == 1 ? p.k2 : p.k3) = 1.0;
    const Bivariate th = revolution_theta(one, p);
    for (double u : {-0.3, 0.1, 0.6})
      for (double v : {-0.2, 0.4})
        for (double r : residual_linear_system(frame, th.eval({u, v}, 2)))
          EXPECT_LE(std::abs(r), 1e-10) << term;
  }
}

TEST(Revolution, AllTermsSolveTheLinearSystemForSinhProfile) {
  const Curve mu = titeica_sinh_mu(0.0);
  const auto frame = nonruled_frame(titeica_sinh(0.0).h);
  for (int term = 0; term < 3; ++term) {
    RevolutionParams p{.k = kSqrt3 / 2, .alpha0 = 2.5, .alpha_lo = 2.0, .alpha_hi = 3.5};
    (term == 0 ? p.k1 : term == 1 ? p.k2 : p.k3) = 1.0;
    const Bivariate th = revolution_theta(mu, p);
    JetSampler gen(40 + term);
    for (int i = 0; i < 20; ++i) {
      const double a = gen.uniform(2.05, 3.45), b = gen.uniform(-1, 1);
      const double u = 0.5 * (a + b), v = 0.5 * (a - b);
      for (double r : residual_linear_system(frame, th.eval({u, v}, 2)))
        EXPECT_LE(std::abs(r), 1e-8) << term;
    }
  }
}

TEST(Revolution, WrongFrequencyFails) {
  const Curve mu = titeica_sinh_mu(0.0);
  const auto frame = nonruled_frame(titeica_sinh(0.0).h);
  RevolutionParams p{.k = 0.5, .k1 = 1.0, .alpha0 = 2.5, .alpha_lo = 2.0, .alpha_hi = 3.5};
  const auto r = residual_linear_system(frame, revolution_theta(mu, p).eval({1.4, 1.3}, 2));
  EXPECT_GT(std::abs(r[0]) + std::abs(r[2]), 1e-3);
}

TEST(Revolution, SingularWindowIsRejected) {
  const Curve mu = titeica_sinh_mu(0.0);
  RevolutionParams p{.k = kSqrt3 / 2, .k1 = 1.0, .alpha0 = 1.5, .alpha_lo = 0.5, .alpha_hi = 3.0};
  EXPECT_THROW(revolution_theta(mu, p), DomainError);
}

TEST(Revolution, ZeroFrequencyNeedsOptIn) {
  RevolutionParams p{.k = 0.0, .k1 = 1.0, .alpha0 = 0.0, .alpha_lo = -1.0, .alpha_hi = 1.0};
  EXPECT_THROW(revolution_theta(Curve::constant(1.0), p), InvalidArgument);
}

TEST(Revolution, OutsideWindowIsRejected) {
  RevolutionParams p{.k = kSqrt3 / 2, .k1 = 1.0, .alpha0 = 0.0, .alpha_lo = -1.0, .alpha_hi = 1.0};
  const Bivariate th = revolution_theta(Curve::constant(1.0), p);
  EXPECT_THROW(th.eval({1.0, 0.5}, 2), DomainError);
}

TEST(Quadrature, PolynomialAndExponential) {
  EXPECT_NEAR(integrate([](double x) { return x * x; }, 0, 3), 9.0, 1e-12);
  EXPECT_NEAR(integrate([](double x) { return std::exp(x); }, 0, 1), std::exp(1.0) - 1, 1e-12);
  EXPECT_EQ(integrate([](double x) { return x; }, 2, 2), 0.0);
}

// Zero-frequency branch on the profile with mu'^2 = 2 mu^3 + 1, sampled by
// integrating mu mu'' - mu'^2 = mu^3 - 1 from mu = 1, mu' = sqrt3.
TEST(Revolution, ZeroFrequencyBranchOnIntegratedProfile) {
  const Curve mu = integrate_mu_ode(1.0, 1.0, kSqrt3, 0.0, 0.5, 1e-4).curve();
  const auto frame = nonruled_frame(mu_profile(mu).h);
  RevolutionParams p{.k = 0.0, .alpha0 = 0.2, .alpha_lo = 0.05, .alpha_hi = 0.45,
                     .experimental_k0 = true};
  double worst[3] = {0, 0, 0};
  for (int term = 0; term < 3; ++term) {
    p.k1 = term == 0, p.k2 = term == 1, p.k3 = term == 2;
    const Bivariate th = revolution_theta(mu, p);
    for (double a : {0.1, 0.25, 0.4})
      for (double b : {-0.5, 0.3}) {
        const auto r = residual_linear_system(frame, th.eval({0.5 * (a + b), 0.5 * (a - b)}, 2));
        for (double x : r) worst[term] = std::max(worst[term], std::abs(x));
      }
  }
  EXPECT_LE(worst[0], 1e-10);
  EXPECT_LE(worst[1], 1e-10);
  EXPECT_LE(worst[2], 1e-10);
}
