#pragma once

#include <Eigen/Core>
#include <array>
#include <string>
#include <vector>

#include "titeica/jets.hpp"
#include "titeica/pde.hpp"

namespace titeica {

/// zeta d/du + eta d/dv + phi d/dw with coefficients on (u, v, w).
struct VectorField3 {
  std::string name;
  Trivariate zeta, eta, phi;

  /// Coefficient jets of order `order` at (u, v, w).
  std::array<Jet3, 3> eval(const std::array<double, 3>& p, int order) const;
};

VectorField3 operator+(const VectorField3& a, const VectorField3& b);
VectorField3 operator*(double c, const VectorField3& a);
VectorField3 operator-(const VectorField3& a);

/// sum_{ab} A_ab x^b d/dx^a on (x, y, z).
struct LinearField {
  std::string name;
  Eigen::Matrix3d A;

  /// exp(eps A).
  Eigen::Matrix3d flow(double eps) const;
};

struct ProlongedValue {
  double au = 0, av = 0, auu = 0, auv = 0, avv = 0;
};

/// Q = phi - zeta w_u - eta w_v at the base point of w.
double characteristic(const VectorField3& X, const Jet2& w);
/// Q as a jet of total derivatives (order of w minus one, at most 2).
Jet2 characteristic_jet(const VectorField3& X, const Jet2& w);

/// First and second prolongation coefficients on the jet w (order >= 2).
/// Third derivatives of w cancel from the second-order coefficients, so an
/// order-2 w is padded with zeros.
ProlongedValue prolong2(const VectorField3& X, const Jet2& w);
/// Only alpha^u, alpha^v (order >= 1).
ProlongedValue prolong1(const VectorField3& X, const Jet2& w);

/// pr2 X applied to a function sigma of the jet coordinates, given its
/// gradient in the order (u, v, w, w_u, w_v, w_uu, w_uv, w_vv).
double prolonged_derivative(const VectorField3& X, const Jet2& w, const std::array<double, 8>& grad);

/// pr2 X (w_uv - H(w)) = alpha^uv - H'(w) phi. Throws DomainError when w is
/// not on the solution manifold (|residual| > manifold_tol).
double invariance_defect(const VectorField3& X, const PdeKind& kind, const Jet2& w,
                         double manifold_tol = 1e-8);
/// Same quantity without the on-solution check.
double prolonged_equation(const VectorField3& X, const PdeKind& kind, const Jet2& w);

enum class FiniteActionKind { Scale, ShiftU, ShiftV };

struct FiniteAction {
  FiniteActionKind kind;
  double eps;
  static FiniteAction scale(double e) { return {FiniteActionKind::Scale, e}; }
  static FiniteAction shift_u(double e) { return {FiniteActionKind::ShiftU, e}; }
  static FiniteAction shift_v(double e) { return {FiniteActionKind::ShiftV, e}; }
};

/// f(e^eps u, e^-eps v), f(u - eps, v) or f(u, v - eps).
Bivariate transform_solution(const FiniteAction& a, const Bivariate& f);

/// [X, Y] with coefficients X(Y^c) - Y(X^c). Coefficient jets of order n
/// need the inputs at order n + 1.
VectorField3 lie_bracket(const VectorField3& X, const VectorField3& Y);

/// Finite-dimensional algebra spanned by `fields`, with structure constants
/// c[i][j] = coordinates of [B_i, B_j] recovered by sampling.
class LieBasis {
 public:
  explicit LieBasis(std::vector<VectorField3> fields);

  int dim() const { return static_cast<int>(fields_.size()); }
  const std::vector<VectorField3>& fields() const { return fields_; }
  /// coordinates of [B_i, B_j]
  const Eigen::VectorXd& bracket(int i, int j) const { return c_[i * dim() + j]; }
  /// matrix of ad_{B_i} in the basis
  Eigen::MatrixXd ad(int i) const;
  /// coordinates of an arbitrary field, or InvalidArgument if outside the span
  Eigen::VectorXd coordinates(const VectorField3& X) const;

 private:
  std::vector<VectorField3> fields_;
  std::vector<std::array<double, 3>> samples_;
  std::vector<Eigen::VectorXd> c_;
};

/// Coordinates of Ad(exp(eps B_i)) B_j = sum_k (-eps)^k / k! ad_{B_i}^k B_j.
/// Stops after three consecutive zero terms or once terms drop below
/// 1e-16 relative; NumericalError after 60 terms.
Eigen::VectorXd adjoint(const LieBasis& basis, int i, double eps, int j);

/// Frame-level defining equations for Z = zeta(u) d/du + eta(v) d/dv on a frame.
std::array<double, 5> frame_symmetry_residual(const Curve& zeta, const Curve& eta,
                                           const CoefficientFrame& frame, double u, double v);
/// zeta^3 phi - k, the extra condition of the ruled case.
double ruled_zeta_residual(const Curve& zeta, const Curve& phi, double k, double u);

/// zeta_v, zeta_w, eta_u, eta_w, phi_ww, phi_uw, phi_vw and
/// phi_uv + (phi_w - zeta_u - eta_v) H - H' phi at (u, v, w).
std::array<double, 8> determining_residual(const VectorField3& X, const Curve& H,
                                           const std::array<double, 3>& p);

// --- generator catalogs ----------------------------------------------------------

std::vector<LinearField> unimodular_fields();
/// theta d/dtheta on (u, v, theta).
VectorField3 theta_scaling_field();
VectorField3 reparametrization_field(const Curve& zeta, const Curve& eta);
/// f d/du + g d/dv - (f' + g') d/dw; f' and g' come from the curves' jets,
/// so the field supports coefficient jets up to order 2.
VectorField3 liouville_symmetry(const Curve& f, const Curve& g);
std::vector<VectorField3> titeica_symmetries();
std::vector<VectorField3> liouville_variational_symmetries();
std::vector<VectorField3> titeica_variational_symmetries();

/// Fixed catalogs by name: "titeica", "liouville-variational",
/// "titeica-variational", "theta-scaling".
std::vector<VectorField3> catalog(const std::string& name);

/// Y(F) at x for the linear field Y and F given as a function of (x, y, z).
double apply_linear_field(const LinearField& Y, const Trivariate& F, const std::array<double, 3>& x);
Trivariate xyz_product();

/// pr2 U_1 applied to w, w_u w_v, w_uv, w_uu w_vv.
std::array<double, 4> scaling_invariants_check(const Jet2& w);

}  // namespace titeica
