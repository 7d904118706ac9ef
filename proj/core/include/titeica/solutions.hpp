#pragma once

#include <array>
#include <map>
#include <string>

#include "titeica/jets.hpp"

namespace titeica {

enum class SolutionKind { LiouvilleGeneral, MuProfile, Constant, SinhProfile, Custom };

const char* to_string(SolutionKind k);

/// A positive solution h(u, v) of one of the scalar equations. `window` is
/// where random sampling is safe; evaluation itself is checked pointwise.
struct SolutionH {
  SolutionKind kind = SolutionKind::Custom;
  std::map<std::string, double> params;
  Bivariate h;
  Box<2> window = Box<2>::everywhere();

  /// Jet of h; throws DomainError unless h > 0 at the point.
  Jet2 eval(double u, double v, int order) const;
  /// Jet of ln h.
  Jet2 omega(double u, double v, int order) const;
  double value(double u, double v) const { return eval(u, v, 0).value(); }

  Bivariate omega_fn() const;
};

/// h = 2 U' V' / (U + V)^2 for arbitrary Curves U(u), V(v) with U', V' > 0.
/// U' is taken from U's jet, so h is available up to order 2.
SolutionH liouville_general(Curve Ut, Curve Vt, Box<2> window = Box<2>::everywhere());
/// Same with U', V' supplied in closed form; h is available up to order 3.
SolutionH liouville_general(Curve Ut, Curve dUt, Curve Vt, Curve dVt,
                            Box<2> window = Box<2>::everywhere());

enum class LiouvillePreset { Identity, Exp, Tanh };

/// (U, V) = (u, v), (e^u, e^v) or (th u, th v) with a pole-free window.
SolutionH liouville_preset(LiouvillePreset p);
LiouvillePreset parse_liouville_preset(const std::string& name);

enum class MuCase { Zero, NegL2, PosL2 };

/// 2/(t+C)^2, l^2/(2 cos^2(lt/2+C)) or l^2/(2 sh^2(lt/2+C)); each solves
/// mu mu'' - mu'^2 = mu^3.
Curve mu_family(MuCase c, double l, double C);

/// h(u, v) = mu(u + v).
SolutionH mu_profile(Curve mu, Box<2> window = Box<2>::everywhere());

SolutionH titeica_constant();

/// w(t) = sh(sqrt3 t / 2 + C1) / sqrt3.
Curve titeica_sinh_w(double C1);
/// mu(t) = 1 / (2 w^2) + 1.
Curve titeica_sinh_mu(double C1);
/// h(u, v) = mu(u + v) with mu from titeica_sinh_mu.
SolutionH titeica_sinh(double C1);

/// Same h rebuilt as 2 U' V' / (U + V)^2 + 1 with U = th(sqrt3 (u + c) / 2),
/// V = th(sqrt3 v / 2), c = 2 C1 / sqrt3.
Bivariate titeica_sinh_from_tanh(double C1);

struct ParametricSurface {
  std::string name;
  std::array<Bivariate, 3> r;
  Box<2> window = Box<2>::everywhere();

  std::array<Jet2, 3> eval(double u, double v, int order) const;
};

/// x = e^s, y = e^t, z = C e^{-s-t}, so xyz = C.
ParametricSurface hyperbolic_surface(double C);

/// r = (cos p cos q, cos p sin q, sin p) with (u, v) = (q, p).
ParametricSurface unit_sphere();

struct RevolutionParams {
  double k = 0.0;
  double k1 = 0.0, k2 = 0.0, k3 = 0.0;
  /// lower limit of both integrals
  double alpha0 = 0.0;
  /// admissible alpha interval, checked for mu > 0 and mu' + 1 != 0
  double alpha_lo = 0.0, alpha_hi = 0.0;
  bool experimental_k0 = false;
};

/// theta(u, v) built from the profile mu(alpha), alpha = u + v,
/// beta = u - v:
///   k != 0: e^A (k1 cos k beta + k2 sin k beta) + k3 e^B
///   k == 0: e^A (k1 (beta^2 + C) + k2 beta + k3)   [experimental]
/// with A = int (mu'-1)/(2 mu), B = int mu^2/(mu'+1),
/// C = int 4 mu/(mu'+1), all from alpha0.
Bivariate revolution_theta(const Curve& mu, const RevolutionParams& p);

/// Definite integral of f over [a, b], adaptive Gauss-Kronrod, absolute
/// error <= tol or NumericalError.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-10);

}  // namespace titeica
