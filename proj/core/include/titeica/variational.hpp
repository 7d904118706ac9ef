#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "titeica/jets.hpp"
#include "titeica/pde.hpp"
#include "titeica/symmetry.hpp"

namespace titeica {

/// F(u, v, w, w_u, w_v) evaluated on jets, so that it can be carried along
/// the jet of a function w(u, v).
using FirstOrderFn =
    std::function<Jet2(const Jet2& u, const Jet2& v, const Jet2& w, const Jet2& wu, const Jet2& wv)>;

/// F(u, v, w(u, v), w_u, w_v) as a jet of the given order; w needs order + 1.
Jet2 along(const FirstOrderFn& F, const Jet2& w, int order);

enum class LagrangianKind { L1, L2, Custom };

/// First-order Lagrangian with closed-form partials in w, w_u, w_v.
struct Lagrangian {
  LagrangianKind kind = LagrangianKind::Custom;
  std::string name;
  FirstOrderFn L, L_w, L_wu, L_wv;

  double eval(double u, double v, double w, double wu, double wv) const;

  /// -w_u w_v / 2 - e^w
  static Lagrangian L1();
  /// -w_u w_v / 2 - e^w - e^{-2w} / 2
  static Lagrangian L2();
  static Lagrangian custom(std::string name, FirstOrderFn L, FirstOrderFn L_w, FirstOrderFn L_wu,
                           FirstOrderFn L_wv);
};

/// dL/dw - D_u dL/dw_u - D_v dL/dw_v at the base point (order >= 2).
double euler_lagrange(const Lagrangian& L, const Jet2& w);

/// The jet coordinates (u, v, w, w_u, w_v, w_uu, w_uv, w_vv).
using JetCoords = std::array<Jet2, 8>;
using SecondOrderFn = std::function<Jet2(const JetCoords&)>;

/// Delta(u, v, w, ..., w_vv) with its partials in the derivative coordinates.
struct SecondOrderOperator {
  std::string name;
  SecondOrderFn delta, d_wu, d_wv, d_wuu, d_wuv, d_wvv;
};

/// Coordinates along w as jets of the given order; w needs order + 2.
JetCoords jet_coords(const Jet2& w, int order);

/// w_uv - H(w) for an omega form.
SecondOrderOperator operator_of(const PdeKind& kind);

/// dDelta/dw_u - D_u dDelta/dw_uu - D_v (dDelta/dw_uv / 2) and the
/// v counterpart, at the base point of w (order >= 3).
std::array<double, 2> helmholtz_residual(const SecondOrderOperator& op, const Jet2& w);
std::array<double, 2> helmholtz_residual(const PdeKind& kind, const Jet2& w);

/// pr1 X (L) + L (D_u zeta + D_v eta) at the base point (order >= 2).
double variational_defect(const VectorField3& X, const Lagrangian& L, const Jet2& w);

/// Conservation law in characteristic form: D_u P1 + D_v P2 = Q Delta.
struct ConservationLaw {
  std::string name;
  PdeKind kind;
  FirstOrderFn P1, P2, Q;
};

/// D_u P1 + D_v P2 - Q Delta at the base point (order >= 2). An identity in
/// the jet variables, so it vanishes on arbitrary jets.
double conservation_divergence_defect(const ConservationLaw& law, const PdeKind& kind,
                                      const Jet2& w);

/// P1 = -(Q dL/dw_u + L zeta), P2 = -(Q dL/dw_v + L eta), Q = phi - zeta w_u - eta w_v.
/// Runs variational_defect on a fixed battery of random jets first and throws
/// InvalidArgument when X is not a variational symmetry of L.
ConservationLaw noether_law(const VectorField3& X, const Lagrangian& L, const PdeKind& kind);

/// Conservation-law tables keyed by row label: "-W1".."-W4" for L1 and
/// "-U1".."-U3" for L2.
ConservationLaw conservation_table(const std::string& label);
std::vector<std::string> conservation_table_labels();
/// The generator a table row belongs to (the negated catalog field).
VectorField3 conservation_table_field(const std::string& label);
Lagrangian conservation_table_lagrangian(const std::string& label);

/// E_h of L(u, v, ln h, h_u / h, h_v / h), the Lagrangian in the h variable
/// (h order >= 2, h > 0).
double euler_lagrange_log(const Lagrangian& L, const Jet2& h);

/// euler_lagrange_log(L, h) - h^-3 * (h^2 Delta_h), with Delta_h the h-form
/// residual matching L (LiouvilleH for L1, TiteicaH for L2).
double integrating_factor_defect(const Lagrangian& L, const Jet2& h);

}  // namespace titeica
