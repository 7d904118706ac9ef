#pragma once

#include <array>
#include <string>
#include <vector>

#include "titeica/jets.hpp"

namespace titeica {

enum class PdeForm { LiouvilleH, TiteicaH, LiouvilleOmega, TiteicaOmega, GeneralH };

/// Scalar equation selector. GeneralH is w_uv = H(w) with a caller-supplied H.
struct PdeKind {
  PdeForm form = PdeForm::LiouvilleOmega;
  Curve H;

  static PdeKind liouville_h() { return {PdeForm::LiouvilleH, {}}; }
  static PdeKind titeica_h() { return {PdeForm::TiteicaH, {}}; }
  static PdeKind liouville_omega() { return {PdeForm::LiouvilleOmega, {}}; }
  static PdeKind titeica_omega() { return {PdeForm::TiteicaOmega, {}}; }
  static PdeKind general(Curve H) { return {PdeForm::GeneralH, std::move(H)}; }

  bool is_omega_form() const { return form != PdeForm::LiouvilleH && form != PdeForm::TiteicaH; }
  /// The right-hand side H of w_uv = H(w); only for omega forms.
  Curve nonlinearity() const;
  std::string name() const;
};

/// (ln h)_uv - h, (ln h)_uv - h + 1/h^2, w_uv - e^w, w_uv - e^w + e^{-2w}
/// or w_uv - H(w).
double residual_scalar(const PdeKind& kind, const Jet2& w);

enum class FrameKind { Ruled, NonRuled, General };

/// Coefficients of theta_uu = a theta_u + b theta_v, theta_uv = h theta,
/// theta_vv = a2 theta_u + b2 theta_v. Entries built from h support jets
/// up to order 2.
struct CoefficientFrame {
  FrameKind kind = FrameKind::General;
  Bivariate a, b, h, a2, b2;
};

/// a = h_u/h, b = a2 = 1/h, b2 = h_v/h.
CoefficientFrame nonruled_frame(const Bivariate& h);
/// a = h_u/h, b = phi(u)/h, a2 = 0, b2 = h_v/h.
CoefficientFrame ruled_frame(const Bivariate& h, const Curve& phi);
CoefficientFrame general_frame(Bivariate a, Bivariate b, Bivariate h, Bivariate a2, Bivariate b2);

/// Compatibility conditions of the frame, left minus right:
///   a h - h_u, a_v + b a2 - h, b_v + b b2, h_v - b2 h, a2_u + a a2,
///   h - b2_u - a2 b.
std::array<double, 6> residual_integrability(const CoefficientFrame& f, double u, double v);

/// theta_uu - a theta_u - b theta_v, theta_uv - h theta,
/// theta_vv - a2 theta_u - b2 theta_v at theta's base point.
std::array<double, 3> residual_linear_system(const CoefficientFrame& f, const Jet2& theta);

/// det[r, r_u, r_v].
double surface_conditions(const Jet2& x, const Jet2& y, const Jet2& z);

/// Right side of mu mu'' - mu'^2 = rhs.
struct MuRhs {
  enum class Kind { Liouville, Titeica } kind = Kind::Liouville;
  double k = 1.0;
  static MuRhs liouville() { return {Kind::Liouville, 0.0}; }
  static MuRhs titeica(double k) { return {Kind::Titeica, k}; }
};

/// mu mu'' - mu'^2 - (mu^3 or k (mu^3 - 1)).
double residual_ode_mu(const Jet1& mu, const MuRhs& rhs);

/// g'^2 - g^3 - C g^2 - 4.
double residual_ode_g(const Jet1& g, double C);

/// w'^2 - (3 w^2 + 1) / 4.
double residual_ode_w(const Jet1& w);

/// Conserved along mu mu'' - mu'^2 = k (mu^3 - 1):
/// (mu'^2 - 2 k mu^3 - k) / (4 mu^2).
double mu_first_integral(double k, double mu, double dmu);

/// RK4 samples of mu mu'' - mu'^2 = k (mu^3 - 1) on a uniform grid.
struct MuTrajectory {
  double k = 1.0;
  double h = 0.0;
  std::vector<double> t, mu, dmu;
  /// max |E(t) - E(t0)| of mu_first_integral over the samples
  double first_integral_drift = 0.0;

  /// Hermite-interpolated mu with mu'' and mu''' taken from the ODE.
  Curve curve() const;
};

MuTrajectory integrate_mu_ode(double k, double mu0, double dmu0, double t0, double t1, double step);

}  // namespace titeica
