#include "titeica/solutions.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace titeica {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;
constexpr double kPoleGuard = 1e-10;

Jet2 lift_u(const Jet1& f, double u, double v, int order) {
  return compose<1, 2>(f, {Jet2::variable(0, {u, v}, order)});
}

Jet2 lift_v(const Jet1& f, double u, double v, int order) {
  return compose<1, 2>(f, {Jet2::variable(1, {u, v}, order)});
}

Jet2 lift_sum(const Jet1& f, double u, double v, int order) {
  return compose<1, 2>(f, {Jet2::variable(0, {u, v}, order) + Jet2::variable(1, {u, v}, order)});
}

[[noreturn]] void pole(const char* what, double t) {
  std::ostringstream os;
  os.precision(17);
  os << what << ": pole at t = " << t;
  throw DomainError(os.str());
}

// Antiderivative jet of an integrand whose jet (one order lower) is `g`.
Jet1 antiderivative(const Jet1& g, double value, int order) {
  Jet1 out = Jet1::zero(g.base(), order);
  out.set({0}, value);
  for (int k = 1; k <= order; ++k) out.set({k}, g.d(k - 1));
  return out;
}

}  // namespace

const char* to_string(SolutionKind k) {
  switch (k) {
    case SolutionKind::LiouvilleGeneral: return "liouville-general";
    case SolutionKind::MuProfile: return "mu-profile";
    case SolutionKind::Constant: return "constant";
    case SolutionKind::SinhProfile: return "sinh-profile";
    case SolutionKind::Custom: return "custom";
  }
  return "custom";
}

Jet2 SolutionH::eval(double u, double v, int order) const {
  Jet2 j = h.eval({u, v}, order);
  if (!(j.value() > 0.0)) {
    std::ostringstream os;
    os.precision(17);
    os << "h = " << j.value() << " is not positive at (" << u << ", " << v << ")";
    throw DomainError(os.str());
  }
  return j;
}

Jet2 SolutionH::omega(double u, double v, int order) const { return log(eval(u, v, order)); }

Bivariate SolutionH::omega_fn() const {
  SolutionH self = *this;
  return Bivariate(
      [self](const Bivariate::Point& p, int order) { return self.omega(p[0], p[1], order); },
      window);
}

namespace {

Jet2 liouville_jet(const Jet1& U, const Jet1& dU, const Jet1& V, const Jet1& dV, double u,
                   double v, int order) {
  if (!(dU.value() > 0.0) || !(dV.value() > 0.0))
    throw DomainError("liouville_general: U' and V' must be positive");
  const double s = U.value() + V.value();
  if (std::abs(s) < kPoleGuard) pole("liouville_general", s);
  const Jet2 sum = lift_u(U, u, v, order) + lift_v(V, u, v, order);
  return 2.0 * lift_u(dU, u, v, order) * lift_v(dV, u, v, order) / (sum * sum);
}

}  // namespace

SolutionH liouville_general(Curve Ut, Curve Vt, Box<2> window) {
  auto eval = [Ut, Vt](const Bivariate::Point& p, int order) {
    if (order >= kMaxJetOrder)
      throw OrderError("liouville_general: supply U' and V' for third-order jets");
    const Jet1 U = Ut.eval(p[0], order + 1);
    const Jet1 V = Vt.eval(p[1], order + 1);
    return liouville_jet(U.truncated(order), U.partial(0), V.truncated(order), V.partial(0), p[0],
                         p[1], order);
  };
  return {SolutionKind::LiouvilleGeneral, {}, Bivariate(eval), window};
}

SolutionH liouville_general(Curve Ut, Curve dUt, Curve Vt, Curve dVt, Box<2> window) {
  auto eval = [Ut, dUt, Vt, dVt](const Bivariate::Point& p, int order) {
    return liouville_jet(Ut.eval(p[0], order), dUt.eval(p[0], order), Vt.eval(p[1], order),
                         dVt.eval(p[1], order), p[0], p[1], order);
  };
  return {SolutionKind::LiouvilleGeneral, {}, Bivariate(eval), window};
}

SolutionH liouville_preset(LiouvillePreset p) {
  switch (p) {
    case LiouvillePreset::Identity: {
      const Curve id = Curve::from_expr([](const Jet1& t) { return t; });
      auto s = liouville_general(id, Curve::constant(1.0), id, Curve::constant(1.0),
                                 Box<2>{{0.2, 0.2}, {3.0, 3.0}});
      s.params["preset"] = 0;
      return s;
    }
    case LiouvillePreset::Exp: {
      const Curve e = Curve::from_expr([](const Jet1& t) { return exp(t); });
      auto s = liouville_general(e, e, e, e, Box<2>{{-2.0, -2.0}, {2.0, 2.0}});
      s.params["preset"] = 1;
      return s;
    }
    case LiouvillePreset::Tanh: {
      const Curve th = Curve::from_expr([](const Jet1& t) { return tanh(t); });
      const Curve dth = Curve::from_expr([](const Jet1& t) {
        const Jet1 c = cosh(t);
        return 1.0 / (c * c);
      });
      auto s = liouville_general(th, dth, th, dth, Box<2>{{0.1, 0.1}, {2.0, 2.0}});
      s.params["preset"] = 2;
      return s;
    }
  }
  throw InvalidArgument("unknown Liouville preset");
}

LiouvillePreset parse_liouville_preset(const std::string& name) {
  if (name == "identity") return LiouvillePreset::Identity;
  if (name == "exp") return LiouvillePreset::Exp;
  if (name == "tanh") return LiouvillePreset::Tanh;
  throw InvalidArgument("unknown Liouville preset '" + name + "' (identity, exp, tanh)");
}

Curve mu_family(MuCase c, double l, double C) {
  if (c != MuCase::Zero && !(l > 0.0)) throw InvalidArgument("mu_family: l must be positive");
  switch (c) {
    case MuCase::Zero:
      return Curve([C](const Curve::Point& p, int order) {
        const Jet1 s = Jet1::variable(0, p, order) + C;
        if (std::abs(s.value()) < kPoleGuard) pole("mu_family(zero)", p[0]);
        return 2.0 / (s * s);
      });
    case MuCase::NegL2:
      return Curve([l, C](const Curve::Point& p, int order) {
        const Jet1 c = cos(0.5 * l * Jet1::variable(0, p, order) + C);
        if (std::abs(c.value()) < kPoleGuard) pole("mu_family(neg_l2)", p[0]);
        return (0.5 * l * l) / (c * c);
      });
    case MuCase::PosL2:
      return Curve([l, C](const Curve::Point& p, int order) {
        const Jet1 s = sinh(0.5 * l * Jet1::variable(0, p, order) + C);
        if (std::abs(s.value()) < kPoleGuard) pole("mu_family(pos_l2)", p[0]);
        return (0.5 * l * l) / (s * s);
      });
  }
  throw InvalidArgument("unknown mu case");
}

SolutionH mu_profile(Curve mu, Box<2> window) {
  auto eval = [mu](const Bivariate::Point& p, int order) {
    return lift_sum(mu.eval(p[0] + p[1], order), p[0], p[1], order);
  };
  return {SolutionKind::MuProfile, {}, Bivariate(eval), window};
}

SolutionH titeica_constant() {
  return {SolutionKind::Constant, {}, Bivariate::constant(1.0), Box<2>{{-3.0, -3.0}, {3.0, 3.0}}};
}

Curve titeica_sinh_w(double C1) {
  return Curve([C1](const Curve::Point& p, int order) {
    return sinh(0.5 * kSqrt3 * Jet1::variable(0, p, order) + C1) / kSqrt3;
  });
}

Curve titeica_sinh_mu(double C1) {
  const Curve w = titeica_sinh_w(C1);
  return Curve([w](const Curve::Point& p, int order) {
    const Jet1 wj = w.eval(p, order);
    if (std::abs(wj.value()) < kPoleGuard) pole("titeica_sinh", p[0]);
    return 0.5 / (wj * wj) + 1.0;
  });
}

SolutionH titeica_sinh(double C1) {
  SolutionH s = mu_profile(titeica_sinh_mu(C1));
  s.kind = SolutionKind::SinhProfile;
  s.params["C1"] = C1;
  // stay clear of the pole at u + v = -2 C1 / sqrt3
  const double t0 = -2.0 * C1 / kSqrt3;
  s.window = Box<2>{{0.5 * t0 + 0.1, 0.5 * t0 + 0.1}, {0.5 * t0 + 2.0, 0.5 * t0 + 2.0}};
  return s;
}

Bivariate titeica_sinh_from_tanh(double C1) {
  const double c = 2.0 * C1 / kSqrt3;
  auto U = Curve::from_expr([c](const Jet1& u) { return tanh(0.5 * kSqrt3 * (u + c)); });
  auto dU = Curve::from_expr([c](const Jet1& u) {
    const Jet1 ch = cosh(0.5 * kSqrt3 * (u + c));
    return 0.5 * kSqrt3 / (ch * ch);
  });
  auto V = Curve::from_expr([](const Jet1& v) { return tanh(0.5 * kSqrt3 * v); });
  auto dV = Curve::from_expr([](const Jet1& v) {
    const Jet1 ch = cosh(0.5 * kSqrt3 * v);
    return 0.5 * kSqrt3 / (ch * ch);
  });
  const Bivariate H = liouville_general(U, dU, V, dV).h;
  return Bivariate([H](const Bivariate::Point& p, int order) { return H.eval(p, order) + 1.0; });
}

std::array<Jet2, 3> ParametricSurface::eval(double u, double v, int order) const {
  if (!window.contains({u, v})) {
    std::ostringstream os;
    os << name << ": (" << u << ", " << v << ") outside the patch";
    throw DomainError(os.str());
  }
  return {r[0].eval({u, v}, order), r[1].eval({u, v}, order), r[2].eval({u, v}, order)};
}

ParametricSurface hyperbolic_surface(double C) {
  if (C == 0.0) throw InvalidArgument("hyperbolic_surface: C must be nonzero");
  ParametricSurface s;
  s.name = "hyperbolic";
  s.r[0] = Bivariate::from_expr([](const Jet2& u, const Jet2&) { return exp(u); });
  s.r[1] = Bivariate::from_expr([](const Jet2&, const Jet2& v) { return exp(v); });
  s.r[2] = Bivariate::from_expr([C](const Jet2& u, const Jet2& v) { return C * exp(-u - v); });
  return s;
}

ParametricSurface unit_sphere() {
  ParametricSurface s;
  s.name = "sphere";
  s.r[0] = Bivariate::from_expr([](const Jet2& q, const Jet2& p) { return cos(p) * cos(q); });
  s.r[1] = Bivariate::from_expr([](const Jet2& q, const Jet2& p) { return cos(p) * sin(q); });
  s.r[2] = Bivariate::from_expr([](const Jet2&, const Jet2& p) { return sin(p); });
  s.window = Box<2>{{-3.0, -1.4}, {3.0, 1.4}};
  return s;
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
  if (a == b) return 0.0;
  double err = 0.0;
  const double q = boost::math::quadrature::gauss_kronrod<double, 21>::integrate(f, a, b, 12, 1e-12,
                                                                               &err);
  if (!std::isfinite(q) || err > tol) {
    std::ostringstream os;
    os << "quadrature on [" << a << ", " << b << "] did not reach " << tol << " (estimate " << err
       << ")";
    throw NumericalError(os.str());
  }
  return q;
}

Bivariate revolution_theta(const Curve& mu, const RevolutionParams& p) {
  if (!(p.alpha_lo < p.alpha_hi)) throw InvalidArgument("revolution_theta: empty alpha window");
  if (!(p.alpha0 > p.alpha_lo && p.alpha0 < p.alpha_hi))
    throw InvalidArgument("revolution_theta: alpha0 outside the window");
  if (p.k == 0.0 && !p.experimental_k0)
    throw InvalidArgument("revolution_theta: k = 0 branch is experimental and must be requested");

  // mu > 0 and mu' + 1 of one sign on the closed window
  constexpr int kScan = 2000;
  double sign = 0.0;
  for (int i = 0; i <= kScan; ++i) {
    const double a = p.alpha_lo + (p.alpha_hi - p.alpha_lo) * i / kScan;
    const Jet1 m = mu.eval(a, 1);
    const double s = m.d(1) + 1.0;
    std::ostringstream os;
    os.precision(17);
    if (!(m.value() > 0.0)) {
      os << "revolution_theta: mu = " << m.value() << " <= 0 at alpha = " << a;
      throw DomainError(os.str());
    }
    if (std::abs(s) < 1e-8 || (sign != 0.0 && s * sign < 0.0)) {
      os << "revolution_theta: mu' + 1 vanishes near alpha = " << a;
      throw DomainError(os.str());
    }
    sign = s;
  }

  auto fa = [mu](double a) {
    const Jet1 m = mu.eval(a, 1);
    return (m.d(1) - 1.0) / (2.0 * m.value());
  };
  auto fb = [mu](double a) {
    const Jet1 m = mu.eval(a, 1);
    return m.value() * m.value() / (m.d(1) + 1.0);
  };
  auto fc = [mu](double a) {
    const Jet1 m = mu.eval(a, 1);
    return 4.0 * m.value() / (m.d(1) + 1.0);
  };

  return Bivariate([=](const Bivariate::Point& pt, int order) {
    const double u = pt[0], v = pt[1], alpha = u + v;
    if (!(alpha > p.alpha_lo && alpha < p.alpha_hi)) {
      std::ostringstream os;
      os << "revolution_theta: alpha = " << alpha << " outside (" << p.alpha_lo << ", "
         << p.alpha_hi << ")";
      throw DomainError(os.str());
    }
    const int q = std::max(order, 1);
    const Jet1 m = mu.eval(alpha, q);
    const Jet1 mp = m.partial(0);
    const Jet1 m0 = m.truncated(q - 1);

    const Jet2 uj = Jet2::variable(0, {u, v}, q), vj = Jet2::variable(1, {u, v}, q);
    const Jet2 beta = uj - vj;
    const Jet2 alpha_j = uj + vj;

    const Jet1 A = antiderivative((mp - 1.0) / (2.0 * m0), integrate(fa, p.alpha0, alpha), q);
    const Jet2 eA = compose<1, 2>(exp(A), {alpha_j});

    Jet2 theta;
    if (p.k != 0.0) {
      const Jet1 B = antiderivative(m0 * m0 / (mp + 1.0), integrate(fb, p.alpha0, alpha), q);
      const Jet2 eB = compose<1, 2>(exp(B), {alpha_j});
      theta = eA * (p.k1 * cos(p.k * beta) + p.k2 * sin(p.k * beta)) + p.k3 * eB;
    } else {
      const Jet1 C = antiderivative(4.0 * m0 / (mp + 1.0), integrate(fc, p.alpha0, alpha), q);
      const Jet2 Cj = compose<1, 2>(C, {alpha_j});
      theta = eA * (p.k1 * (beta * beta + Cj) + p.k2 * beta + p.k3);
    }
    return theta.truncated(order);
  });
}

}  // namespace titeica
