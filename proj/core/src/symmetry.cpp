#include "titeica/symmetry.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <unsupported/Eigen/MatrixFunctions>

namespace titeica {

namespace {

Trivariate sum_fn(const Trivariate& a, const Trivariate& b) {
  return Trivariate([a, b](const Trivariate::Point& p, int n) { return a.eval(p, n) + b.eval(p, n); });
}

Trivariate scaled_fn(double c, const Trivariate& a) {
  return Trivariate([c, a](const Trivariate::Point& p, int n) { return c * a.eval(p, n); });
}

// c(u, v, w(u, v)) as a jet in (u, v).
Jet2 along(const Trivariate& c, const Jet2& w, int order) {
  const auto& b = w.base();
  return c.at<2>({Jet2::variable(0, b, order), Jet2::variable(1, b, order), w.truncated(order)});
}

Jet2 padded(const Jet2& w, int order) {
  if (w.order() >= order) return w;
  Jet2 out = Jet2::zero(w.base(), order);
  for (int s = 0; s < Jet2::kSize; ++s)
    if (Jet2::degree_of(s) <= w.order()) out.set(Jet2::multi_index(s), w.coeff(s));
  return out;
}

Trivariate lift_u(const Curve& f) {
  return Trivariate([f](const Trivariate::Point& p, int n) {
    return compose<1, 3>(f.eval(p[0], n), {Jet3::variable(0, p, n)});
  });
}

Trivariate lift_v(const Curve& f) {
  return Trivariate([f](const Trivariate::Point& p, int n) {
    return compose<1, 3>(f.eval(p[1], n), {Jet3::variable(1, p, n)});
  });
}

VectorField3 field(std::string name, Trivariate z, Trivariate e, Trivariate f) {
  return {std::move(name), std::move(z), std::move(e), std::move(f)};
}

Trivariate coord(int axis) {
  return Trivariate([axis](const Trivariate::Point& p, int n) { return Jet3::variable(axis, p, n); });
}

Trivariate cst(double c) { return Trivariate::constant(c); }

}  // namespace

std::array<Jet3, 3> VectorField3::eval(const std::array<double, 3>& p, int order) const {
  return {zeta.eval(p, order), eta.eval(p, order), phi.eval(p, order)};
}

VectorField3 operator+(const VectorField3& a, const VectorField3& b) {
  return field(a.name + " + " + b.name, sum_fn(a.zeta, b.zeta), sum_fn(a.eta, b.eta),
               sum_fn(a.phi, b.phi));
}

VectorField3 operator*(double c, const VectorField3& a) {
  std::ostringstream os;
  os << c << "*" << a.name;
  return field(os.str(), scaled_fn(c, a.zeta), scaled_fn(c, a.eta), scaled_fn(c, a.phi));
}

VectorField3 operator-(const VectorField3& a) {
  VectorField3 out = -1.0 * a;
  out.name = "-" + a.name;
  return out;
}

Eigen::Matrix3d LinearField::flow(double eps) const { return (eps * A).exp(); }

// --- prolongation ----------------------------------------------------------------

Jet2 characteristic_jet(const VectorField3& X, const Jet2& w) {
  if (w.order() < 1) throw OrderError("characteristic: jet order must be >= 1");
  const int q = std::min(w.order() - 1, 2);
  const Jet2 Z = along(X.zeta, w, q), E = along(X.eta, w, q), P = along(X.phi, w, q);
  return P - Z * w.partial(0) - E * w.partial(1);
}

double characteristic(const VectorField3& X, const Jet2& w) {
  return characteristic_jet(X, w).value();
}

ProlongedValue prolong2(const VectorField3& X, const Jet2& w0) {
  if (w0.order() < 2) throw OrderError("prolong2: jet order must be >= 2");
  const Jet2 w = padded(w0, 3);
  const Jet2 Q = characteristic_jet(X, w);
  const auto& b = w.base();
  const double z = X.zeta.value({b[0], b[1], w.value()});
  const double e = X.eta.value({b[0], b[1], w.value()});
  ProlongedValue pv;
  pv.au = Q.d(1, 0) + z * w.d(2, 0) + e * w.d(1, 1);
  pv.av = Q.d(0, 1) + z * w.d(1, 1) + e * w.d(0, 2);
  pv.auu = Q.d(2, 0) + z * w.d(3, 0) + e * w.d(2, 1);
  pv.auv = Q.d(1, 1) + z * w.d(2, 1) + e * w.d(1, 2);
  pv.avv = Q.d(0, 2) + z * w.d(1, 2) + e * w.d(0, 3);
  return pv;
}

ProlongedValue prolong1(const VectorField3& X, const Jet2& w0) {
  if (w0.order() < 1) throw OrderError("prolong1: jet order must be >= 1");
  const Jet2 w = padded(w0, 2).truncated(2);
  const Jet2 Q = characteristic_jet(X, w);
  const auto& b = w.base();
  const double z = X.zeta.value({b[0], b[1], w.value()});
  const double e = X.eta.value({b[0], b[1], w.value()});
  ProlongedValue pv;
  pv.au = Q.d(1, 0) + z * w.d(2, 0) + e * w.d(1, 1);
  pv.av = Q.d(0, 1) + z * w.d(1, 1) + e * w.d(0, 2);
  return pv;
}

double prolonged_derivative(const VectorField3& X, const Jet2& w, const std::array<double, 8>& g) {
  const auto& b = w.base();
  const auto c = X.eval({b[0], b[1], w.value()}, 0);
  const ProlongedValue p = prolong2(X, w);
  return g[0] * c[0].value() + g[1] * c[1].value() + g[2] * c[2].value() + g[3] * p.au +
         g[4] * p.av + g[5] * p.auu + g[6] * p.auv + g[7] * p.avv;
}

double prolonged_equation(const VectorField3& X, const PdeKind& kind, const Jet2& w) {
  const Curve H = kind.nonlinearity();
  const double dH = H.eval(w.value(), 1).d(1);
  const auto& b = w.base();
  const double phi = X.phi.value({b[0], b[1], w.value()});
  return prolong2(X, w).auv - dH * phi;
}

double invariance_defect(const VectorField3& X, const PdeKind& kind, const Jet2& w,
                         double manifold_tol) {
  const double r = residual_scalar(kind, w);
  if (!(std::abs(r) <= manifold_tol)) {
    std::ostringstream os;
    os << "invariance_defect: sample is off the solution manifold of " << kind.name()
       << " (residual " << r << ")";
    throw DomainError(os.str());
  }
  return prolonged_equation(X, kind, w);
}

Bivariate transform_solution(const FiniteAction& a, const Bivariate& f) {
  return Bivariate([a, f](const Bivariate::Point& p, int n) {
    const Jet2 u = Jet2::variable(0, p, n), v = Jet2::variable(1, p, n);
    switch (a.kind) {
      case FiniteActionKind::Scale:
        return f.at<2>({std::exp(a.eps) * u, std::exp(-a.eps) * v});
      case FiniteActionKind::ShiftU:
        return f.at<2>({u - a.eps, v});
      case FiniteActionKind::ShiftV:
        return f.at<2>({u, v - a.eps});
    }
    throw InvalidArgument("unknown finite action");
  });
}

VectorField3 lie_bracket(const VectorField3& X, const VectorField3& Y) {
  auto comp = [X, Y](int c) {
    return Trivariate([X, Y, c](const Trivariate::Point& p, int n) {
      const auto x = X.eval(p, n + 1), y = Y.eval(p, n + 1);
      Jet3 out = Jet3::zero(p, n);
      for (int k = 0; k < 3; ++k)
        out += x[k].truncated(n) * y[c].partial(k) - y[k].truncated(n) * x[c].partial(k);
      return out;
    });
  };
  return field("[" + X.name + ", " + Y.name + "]", comp(0), comp(1), comp(2));
}

// --- Lie algebra --------------------------------------------------------------------

namespace {

Eigen::VectorXd sample_field(const VectorField3& X, const std::vector<std::array<double, 3>>& pts) {
  Eigen::VectorXd out(3 * pts.size());
  for (std::size_t s = 0; s < pts.size(); ++s) {
    const auto c = X.eval(pts[s], 0);
    for (int k = 0; k < 3; ++k) out(3 * s + k) = c[k].value();
  }
  return out;
}

}  // namespace

LieBasis::LieBasis(std::vector<VectorField3> fields) : fields_(std::move(fields)) {
  if (fields_.empty()) throw InvalidArgument("LieBasis: empty basis");
  std::mt19937_64 rng(0x7175);
  std::uniform_real_distribution<double> U(-1.5, 1.5);
  for (int s = 0; s < 16; ++s) samples_.push_back({U(rng), U(rng), U(rng)});

  const int n = dim();
  c_.resize(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c_[i * n + j] = coordinates(lie_bracket(fields_[i], fields_[j]));
}

Eigen::VectorXd LieBasis::coordinates(const VectorField3& X) const {
  const int n = dim();
  Eigen::MatrixXd M(3 * samples_.size(), n);
  for (int k = 0; k < n; ++k) M.col(k) = sample_field(fields_[k], samples_);
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(M);
  if (qr.rank() < n) throw InvalidArgument("LieBasis: basis fields are linearly dependent");
  const Eigen::VectorXd rhs = sample_field(X, samples_);
  Eigen::VectorXd x = qr.solve(rhs);
  const double res = (M * x - rhs).norm();
  if (!(res <= 1e-10 * (1.0 + rhs.norm())))
    throw InvalidArgument("LieBasis: " + X.name + " is not in the span of the basis");
  for (int k = 0; k < n; ++k)
    if (std::abs(x(k)) < 1e-13) x(k) = 0.0;
  return x;
}

Eigen::MatrixXd LieBasis::ad(int i) const {
  const int n = dim();
  Eigen::MatrixXd m(n, n);
  for (int j = 0; j < n; ++j) m.col(j) = bracket(i, j);
  return m;
}

Eigen::VectorXd adjoint(const LieBasis& basis, int i, double eps, int j) {
  const int n = basis.dim();
  if (i < 0 || i >= n || j < 0 || j >= n) throw InvalidArgument("adjoint: index out of range");
  const Eigen::MatrixXd ad = basis.ad(i);
  Eigen::VectorXd term = Eigen::VectorXd::Unit(n, j);
  Eigen::VectorXd sum = term;
  int zeros = 0, small = 0;
  for (int k = 1; k <= 60; ++k) {
    term = (-eps / k) * (ad * term);
    sum += term;
    const double t = term.norm();
    zeros = t == 0.0 ? zeros + 1 : 0;
    small = t <= 1e-16 * sum.norm() ? small + 1 : 0;
    if (zeros >= 3 || small >= 3) return sum;
  }
  std::ostringstream os;
  os << "adjoint: series for eps = " << eps << " did not converge in 60 terms";
  throw NumericalError(os.str());
}

// --- determining equations ------------------------------------------------------------

std::array<double, 5> frame_symmetry_residual(const Curve& zeta, const Curve& eta,
                                           const CoefficientFrame& f, double u, double v) {
  const Jet1 z = zeta.eval(u, 2), e = eta.eval(v, 2);
  const Bivariate::Point p{u, v};
  const Jet2 a = f.a.eval(p, 1), b = f.b.eval(p, 1), h = f.h.eval(p, 1);
  const Jet2 a2 = f.a2.eval(p, 1), b2 = f.b2.eval(p, 1);
  const double Z = z.value(), Zu = z.d(1), Zuu = z.d(2);
  const double E = e.value(), Ev = e.d(1), Evv = e.d(2);
  return {
      Z * a.d(1, 0) + E * a.d(0, 1) + a.value() * Zu + Zuu,
      Z * b.d(1, 0) + E * b.d(0, 1) - b.value() * Ev + 2.0 * b.value() * Zu,
      Z * h.d(1, 0) + E * h.d(0, 1) + h.value() * (Zu + Ev),
      Z * a2.d(1, 0) + E * a2.d(0, 1) - a2.value() * Zu + 2.0 * a2.value() * Ev,
      Z * b2.d(1, 0) + E * b2.d(0, 1) + b2.value() * Ev + Evv,
  };
}

double ruled_zeta_residual(const Curve& zeta, const Curve& phi, double k, double u) {
  const double z = zeta.value(u);
  return z * z * z * phi.value(u) - k;
}

std::array<double, 8> determining_residual(const VectorField3& X, const Curve& H,
                                           const std::array<double, 3>& p) {
  const auto c = X.eval(p, 2);
  const Jet3 &Z = c[0], &E = c[1], &P = c[2];
  const Jet1 Hj = H.eval(p[2], 1);
  return {
      Z.d(0, 1, 0),
      Z.d(0, 0, 1),
      E.d(1, 0, 0),
      E.d(0, 0, 1),
      P.d(0, 0, 2),
      P.d(1, 0, 1),
      P.d(0, 1, 1),
      P.d(1, 1, 0) + (P.d(0, 0, 1) - Z.d(1, 0, 0) - E.d(0, 1, 0)) * Hj.value() - Hj.d(1) * P.value(),
  };
}

// --- catalogs -------------------------------------------------------------------------

std::vector<LinearField> unimodular_fields() {
  auto m = [](std::initializer_list<std::array<int, 3>> entries) {
    Eigen::Matrix3d A = Eigen::Matrix3d::Zero();
    for (const auto& e : entries) A(e[0], e[1]) = e[2];
    return A;
  };
  return {
      {"Y1", m({{0, 0, 1}, {2, 2, -1}})},
      {"Y2", m({{1, 1, 1}, {2, 2, -1}})},
      {"Y3", m({{0, 1, 1}})},
      {"Y4", m({{0, 2, 1}})},
      {"Y5", m({{1, 0, 1}})},
      {"Y6", m({{1, 2, 1}})},
      {"Y7", m({{2, 0, 1}})},
      {"Y8", m({{2, 1, 1}})},
  };
}

VectorField3 theta_scaling_field() { return field("Ybar1", cst(0), cst(0), coord(2)); }

VectorField3 reparametrization_field(const Curve& zeta, const Curve& eta) {
  return field("Zbar", lift_u(zeta), lift_v(eta), cst(0));
}

VectorField3 liouville_symmetry(const Curve& f, const Curve& g) {
  Trivariate phi([f, g](const Trivariate::Point& p, int n) {
    const Jet3 df = compose<1, 3>(f.eval(p[0], n + 1).partial(0), {Jet3::variable(0, p, n)});
    const Jet3 dg = compose<1, 3>(g.eval(p[1], n + 1).partial(0), {Jet3::variable(1, p, n)});
    return -(df + dg);
  });
  return field("W", lift_u(f), lift_v(g), phi);
}

std::vector<VectorField3> titeica_symmetries() {
  return {
      field("U1", coord(0), scaled_fn(-1.0, coord(1)), cst(0)),
      field("U2", cst(1), cst(0), cst(0)),
      field("U3", cst(0), cst(1), cst(0)),
  };
}

std::vector<VectorField3> liouville_variational_symmetries() {
  return {
      field("W1", coord(0), cst(0), cst(-1)),
      field("W2", cst(0), coord(1), cst(-1)),
      field("W3", cst(1), cst(0), cst(0)),
      field("W4", cst(0), cst(1), cst(0)),
  };
}

std::vector<VectorField3> titeica_variational_symmetries() { return titeica_symmetries(); }

std::vector<VectorField3> catalog(const std::string& name) {
  if (name == "titeica") return titeica_symmetries();
  if (name == "titeica-variational") return titeica_variational_symmetries();
  if (name == "liouville-variational") return liouville_variational_symmetries();
  if (name == "theta-scaling") return {theta_scaling_field()};
  throw InvalidArgument("unknown catalog '" + name + "'");
}

double apply_linear_field(const LinearField& Y, const Trivariate& F, const std::array<double, 3>& x) {
  const Jet3 g = F.eval(x, 1);
  const Eigen::Vector3d Ax = Y.A * Eigen::Vector3d(x[0], x[1], x[2]);
  return Ax(0) * g.d(1, 0, 0) + Ax(1) * g.d(0, 1, 0) + Ax(2) * g.d(0, 0, 1);
}

Trivariate xyz_product() {
  return Trivariate::from_expr([](const Jet3& x, const Jet3& y, const Jet3& z) { return x * y * z; });
}

std::array<double, 4> scaling_invariants_check(const Jet2& w) {
  if (w.order() < 2) throw OrderError("scaling_invariants_check: jet order must be >= 2");
  const VectorField3 U1 = titeica_symmetries()[0];
  const double wu = w.d(1, 0), wv = w.d(0, 1), wuu = w.d(2, 0), wvv = w.d(0, 2);
  return {
      prolonged_derivative(U1, w, {0, 0, 1, 0, 0, 0, 0, 0}),
      prolonged_derivative(U1, w, {0, 0, 0, wv, wu, 0, 0, 0}),
      prolonged_derivative(U1, w, {0, 0, 0, 0, 0, 0, 1, 0}),
      prolonged_derivative(U1, w, {0, 0, 0, 0, 0, wvv, 0, wuu}),
  };
}

}  // namespace titeica
