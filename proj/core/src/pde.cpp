#include "titeica/pde.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>

namespace titeica {

namespace {

void require_order(const char* what, int have, int need) {
  if (have < need) {
    std::ostringstream os;
    os << what << ": jet order " << have << " < required " << need;
    throw OrderError(os.str());
  }
}

// Jet of a frame entry derived from h at one order higher.
template <class F>
Bivariate derived(const Bivariate& h, F f) {
  return Bivariate([h, f](const Bivariate::Point& p, int order) {
    const Jet2 H = h.eval(p, order + 1);
    return f(H.truncated(order), H.partial(0), H.partial(1));
  });
}

}  // namespace

Curve PdeKind::nonlinearity() const {
  switch (form) {
    case PdeForm::LiouvilleOmega:
      return Curve::from_expr([](const Jet1& w) { return exp(w); });
    case PdeForm::TiteicaOmega:
      return Curve::from_expr([](const Jet1& w) { return exp(w) - exp(-2.0 * w); });
    case PdeForm::GeneralH:
      if (!H) throw InvalidArgument("GeneralH without H");
      return H;
    default:
      throw InvalidArgument("nonlinearity: " + name() + " is not an omega form");
  }
}

std::string PdeKind::name() const {
  switch (form) {
    case PdeForm::LiouvilleH: return "liouville-h";
    case PdeForm::TiteicaH: return "titeica-h";
    case PdeForm::LiouvilleOmega: return "liouville-omega";
    case PdeForm::TiteicaOmega: return "titeica-omega";
    case PdeForm::GeneralH: return "general";
  }
  return "?";
}

double residual_scalar(const PdeKind& kind, const Jet2& w) {
  require_order("residual_scalar", w.order(), 2);
  const double x = w.value();
  switch (kind.form) {
    case PdeForm::LiouvilleH:
    case PdeForm::TiteicaH: {
      if (!(x > 0.0)) throw DomainError("residual_scalar: h must be positive");
      const double luv = log(w).d(1, 1);
      return kind.form == PdeForm::LiouvilleH ? luv - x : luv - x + 1.0 / (x * x);
    }
    case PdeForm::LiouvilleOmega:
      return w.d(1, 1) - std::exp(x);
    case PdeForm::TiteicaOmega:
      return w.d(1, 1) - std::exp(x) + std::exp(-2.0 * x);
    case PdeForm::GeneralH:
      return w.d(1, 1) - kind.nonlinearity().value(x);
  }
  return 0.0;
}

CoefficientFrame nonruled_frame(const Bivariate& h) {
  CoefficientFrame f;
  f.kind = FrameKind::NonRuled;
  f.h = h;
  f.a = derived(h, [](const Jet2& H, const Jet2& Hu, const Jet2&) { return Hu / H; });
  f.b = derived(h, [](const Jet2& H, const Jet2&, const Jet2&) { return 1.0 / H; });
  f.a2 = f.b;
  f.b2 = derived(h, [](const Jet2& H, const Jet2&, const Jet2& Hv) { return Hv / H; });
  return f;
}

CoefficientFrame ruled_frame(const Bivariate& h, const Curve& phi) {
  CoefficientFrame f;
  f.kind = FrameKind::Ruled;
  f.h = h;
  f.a = derived(h, [](const Jet2& H, const Jet2& Hu, const Jet2&) { return Hu / H; });
  f.b = Bivariate([h, phi](const Bivariate::Point& p, int order) {
    const Jet2 P = compose<1, 2>(phi.eval(p[0], order), {Jet2::variable(0, p, order)});
    return P / h.eval(p, order);
  });
  f.a2 = Bivariate::constant(0.0);
  f.b2 = derived(h, [](const Jet2& H, const Jet2&, const Jet2& Hv) { return Hv / H; });
  return f;
}

CoefficientFrame general_frame(Bivariate a, Bivariate b, Bivariate h, Bivariate a2, Bivariate b2) {
  return {FrameKind::General, std::move(a), std::move(b), std::move(h), std::move(a2),
          std::move(b2)};
}

std::array<double, 6> residual_integrability(const CoefficientFrame& f, double u, double v) {
  const Bivariate::Point p{u, v};
  const Jet2 a = f.a.eval(p, 1), b = f.b.eval(p, 1), h = f.h.eval(p, 1);
  const Jet2 a2 = f.a2.eval(p, 1), b2 = f.b2.eval(p, 1);
  return {
      a.value() * h.value() - h.d(1, 0),
      a.d(0, 1) + b.value() * a2.value() - h.value(),
      b.d(0, 1) + b.value() * b2.value(),
      h.d(0, 1) - b2.value() * h.value(),
      a2.d(1, 0) + a.value() * a2.value(),
      h.value() - b2.d(1, 0) - a2.value() * b.value(),
  };
}

std::array<double, 3> residual_linear_system(const CoefficientFrame& f, const Jet2& theta) {
  require_order("residual_linear_system", theta.order(), 2);
  const auto& p = theta.base();
  const double a = f.a.value(p), b = f.b.value(p), h = f.h.value(p);
  const double a2 = f.a2.value(p), b2 = f.b2.value(p);
  const double tu = theta.d(1, 0), tv = theta.d(0, 1);
  return {
      theta.d(2, 0) - a * tu - b * tv,
      theta.d(1, 1) - h * theta.value(),
      theta.d(0, 2) - a2 * tu - b2 * tv,
  };
}

double surface_conditions(const Jet2& x, const Jet2& y, const Jet2& z) {
  require_order("surface_conditions", std::min({x.order(), y.order(), z.order()}), 1);
  const double r[3] = {x.value(), y.value(), z.value()};
  const double ru[3] = {x.d(1, 0), y.d(1, 0), z.d(1, 0)};
  const double rv[3] = {x.d(0, 1), y.d(0, 1), z.d(0, 1)};
  return r[0] * (ru[1] * rv[2] - ru[2] * rv[1]) - r[1] * (ru[0] * rv[2] - ru[2] * rv[0]) +
         r[2] * (ru[0] * rv[1] - ru[1] * rv[0]);
}

double residual_ode_mu(const Jet1& mu, const MuRhs& rhs) {
  require_order("residual_ode_mu", mu.order(), 2);
  const double m = mu.value(), m1 = mu.d(1), m2 = mu.d(2);
  const double right = rhs.kind == MuRhs::Kind::Liouville ? m * m * m : rhs.k * (m * m * m - 1.0);
  return m * m2 - m1 * m1 - right;
}

double residual_ode_g(const Jet1& g, double C) {
  require_order("residual_ode_g", g.order(), 1);
  const double x = g.value(), d = g.d(1);
  return d * d - x * x * x - C * x * x - 4.0;
}

double residual_ode_w(const Jet1& w) {
  require_order("residual_ode_w", w.order(), 1);
  const double x = w.value(), d = w.d(1);
  return d * d - (3.0 * x * x + 1.0) / 4.0;
}

double mu_first_integral(double k, double mu, double dmu) {
  return (dmu * dmu - 2.0 * k * mu * mu * mu - k) / (4.0 * mu * mu);
}

namespace {

struct MuState {
  double m, d;
};

double mu_accel(double k, double m, double d) { return (d * d + k * (m * m * m - 1.0)) / m; }

double mu_jerk(double k, double m, double d) {
  const double dd = mu_accel(k, m, d);
  const double n = d * d + k * (m * m * m - 1.0);
  const double dn = 2.0 * d * dd + 3.0 * k * m * m * d;
  return (dn * m - n * d) / (m * m);
}

double hermite(double s, double h, double y0, double m0, double y1, double m1) {
  const double s2 = s * s, s3 = s2 * s;
  return (2 * s3 - 3 * s2 + 1) * y0 + (s3 - 2 * s2 + s) * h * m0 + (-2 * s3 + 3 * s2) * y1 +
         (s3 - s2) * h * m1;
}

}  // namespace

MuTrajectory integrate_mu_ode(double k, double mu0, double dmu0, double t0, double t1, double step) {
  if (mu0 == 0.0) throw InvalidArgument("integrate_mu_ode: mu0 must be nonzero");
  if (!(step > 0.0)) throw InvalidArgument("integrate_mu_ode: step must be positive");
  if (!(t1 > t0)) throw InvalidArgument("integrate_mu_ode: need t1 > t0");

  const int n = static_cast<int>(std::ceil((t1 - t0) / step - 1e-9));
  MuTrajectory out;
  out.k = k;
  out.h = (t1 - t0) / n;
  out.t.reserve(n + 1);
  out.mu.reserve(n + 1);
  out.dmu.reserve(n + 1);

  auto f = [k](const MuState& s) { return MuState{s.d, mu_accel(k, s.m, s.d)}; };
  auto axpy = [](const MuState& s, double c, const MuState& r) {
    return MuState{s.m + c * r.m, s.d + c * r.d};
  };

  MuState s{mu0, dmu0};
  const double e0 = mu_first_integral(k, mu0, dmu0);
  const double h = out.h;
  for (int i = 0; i <= n; ++i) {
    const double t = t0 + i * h;
    if (!std::isfinite(s.m) || !std::isfinite(s.d) || std::abs(s.m) < 1e-12 ||
        std::abs(s.m) > 1e12) {
      std::ostringstream os;
      os << "integrate_mu_ode: blow-up at t = " << t << " (mu = " << s.m << ")";
      throw NumericalError(os.str());
    }
    out.t.push_back(t);
    out.mu.push_back(s.m);
    out.dmu.push_back(s.d);
    out.first_integral_drift =
        std::max(out.first_integral_drift, std::abs(mu_first_integral(k, s.m, s.d) - e0));
    if (i == n) break;
    const MuState k1 = f(s);
    const MuState k2 = f(axpy(s, 0.5 * h, k1));
    const MuState k3 = f(axpy(s, 0.5 * h, k2));
    const MuState k4 = f(axpy(s, h, k3));
    s = MuState{s.m + h / 6.0 * (k1.m + 2 * k2.m + 2 * k3.m + k4.m),
                s.d + h / 6.0 * (k1.d + 2 * k2.d + 2 * k3.d + k4.d)};
  }
  return out;
}

Curve MuTrajectory::curve() const {
  auto self = std::make_shared<const MuTrajectory>(*this);
  const double t0 = t.front(), t1 = t.back();
  const double pad = 1e-12 * (1.0 + std::abs(t0) + std::abs(t1));
  return Curve(
      [self](const Curve::Point& p, int order) {
        const auto& tr = *self;
        const double x = p[0];
        const int n = static_cast<int>(tr.t.size()) - 1;
        int i = static_cast<int>(std::floor((x - tr.t[0]) / tr.h));
        i = std::clamp(i, 0, n - 1);
        const double s = (x - tr.t[i]) / tr.h;
        const double a0 = mu_accel(tr.k, tr.mu[i], tr.dmu[i]);
        const double a1 = mu_accel(tr.k, tr.mu[i + 1], tr.dmu[i + 1]);
        const double m = hermite(s, tr.h, tr.mu[i], tr.dmu[i], tr.mu[i + 1], tr.dmu[i + 1]);
        const double d = hermite(s, tr.h, tr.dmu[i], a0, tr.dmu[i + 1], a1);
        Jet1 j = Jet1::zero(p, order);
        const double vals[4] = {m, d, mu_accel(tr.k, m, d), mu_jerk(tr.k, m, d)};
        for (int q = 0; q <= order; ++q) j.set({q}, vals[q]);
        return j;
      },
      Box<1>{{t0 - pad}, {t1 + pad}});
}

}  // namespace titeica
