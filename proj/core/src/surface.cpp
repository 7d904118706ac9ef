#include "titeica/surface.hpp"

#include <Eigen/Geometry>
#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace titeica {

GridSpec GridSpec::unit(double step, double u0, double v0) {
  if (!(step > 0.0) || !(step <= 1.0)) throw InvalidArgument("GridSpec::unit: step must lie in (0, 1]");
  const int cells = static_cast<int>(std::lround(1.0 / step));
  GridSpec g;
  g.u0 = u0;
  g.v0 = v0;
  g.nu = g.nv = cells + 1;
  g.du = g.dv = 1.0 / cells;
  return g;
}

void GridSpec::validate() const {
  std::ostringstream os;
  if (!std::isfinite(u0) || !std::isfinite(v0) || !std::isfinite(du) || !std::isfinite(dv))
    os << "grid: non-finite origin or step";
  else if (nu < 2 || nv < 2)
    os << "grid: need at least 2 x 2 nodes, got " << nu << " x " << nv;
  else if (!(du > 0.0) || !(dv > 0.0))
    os << "grid: steps must be positive";
  else if (size() > max_nodes)
    os << "grid: " << size() << " nodes exceed the cap of " << max_nodes;
  if (!os.str().empty()) throw InvalidArgument(os.str());
}

namespace {

struct Coeffs {
  double a, b, h, a2, b2;
};

Coeffs coeffs_at(const CoefficientFrame& f, double u, double v) {
  const Bivariate::Point p{u, v};
  return {f.a.value(p), f.b.value(p), f.h.value(p), f.a2.value(p), f.b2.value(p)};
}

template <int K>
using State = Eigen::Matrix<double, 3, K>;

template <int K>
State<K> rhs_u(const Coeffs& c, const State<K>& s) {
  State<K> d;
  d.row(0) = s.row(1);
  d.row(1) = c.a * s.row(1) + c.b * s.row(2);
  d.row(2) = c.h * s.row(0);
  return d;
}

template <int K>
State<K> rhs_v(const Coeffs& c, const State<K>& s) {
  State<K> d;
  d.row(0) = s.row(2);
  d.row(1) = c.h * s.row(0);
  d.row(2) = c.a2 * s.row(1) + c.b2 * s.row(2);
  return d;
}

// One RK4 step of length `step` along u (axis 0) or v (axis 1) from (u, v).
template <int K>
State<K> rk4(const CoefficientFrame& f, int axis, double u, double v, double step, const State<K>& s) {
  auto F = [&](double t, const State<K>& x) {
    return axis == 0 ? rhs_u<K>(coeffs_at(f, u + t, v), x) : rhs_v<K>(coeffs_at(f, u, v + t), x);
  };
  const State<K> k1 = F(0.0, s);
  const State<K> k2 = F(0.5 * step, s + 0.5 * step * k1);
  const State<K> k3 = F(0.5 * step, s + 0.5 * step * k2);
  const State<K> k4 = F(step, s + step * k3);
  State<K> out = s + (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  const double m = out.cwiseAbs().maxCoeff();
  if (!std::isfinite(m) || m > 1e12) {
    std::ostringstream os;
    os << "marching blew up near (u, v) = (" << u << ", " << v << "), state norm " << m;
    throw NumericalError(os.str());
  }
  return out;
}

template <int K>
std::vector<State<K>> march(const CoefficientFrame& f, const State<K>& s0, const GridSpec& g,
                            MarchOrder order, double compat_tol) {
  g.validate();
  const double compat = frame_compatibility(f, g);
  if (!(compat <= compat_tol)) {
    std::ostringstream os;
    os << "frame is not compatible on the grid window (integrability residual " << compat << ")";
    throw InvalidArgument(os.str());
  }
  std::vector<State<K>> out(g.size());
  out[0] = s0;
  if (order == MarchOrder::RowsThenColumns) {
    for (int i = 1; i < g.nu; ++i)
      out[g.index(i, 0)] = rk4<K>(f, 0, g.u(i - 1), g.v0, g.du, out[g.index(i - 1, 0)]);
    for (int i = 0; i < g.nu; ++i)
      for (int j = 1; j < g.nv; ++j)
        out[g.index(i, j)] = rk4<K>(f, 1, g.u(i), g.v(j - 1), g.dv, out[g.index(i, j - 1)]);
  } else {
    for (int j = 1; j < g.nv; ++j)
      out[g.index(0, j)] = rk4<K>(f, 1, g.u0, g.v(j - 1), g.dv, out[g.index(0, j - 1)]);
    for (int j = 0; j < g.nv; ++j)
      for (int i = 1; i < g.nu; ++i)
        out[g.index(i, j)] = rk4<K>(f, 0, g.u(i - 1), g.v(j), g.du, out[g.index(i - 1, j)]);
  }
  return out;
}

}  // namespace

double frame_compatibility(const CoefficientFrame& frame, const GridSpec& g) {
  double worst = 0.0;
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      const int i = static_cast<int>(std::lround(a * (g.nu - 1) / 4.0));
      const int j = static_cast<int>(std::lround(b * (g.nv - 1) / 4.0));
      for (double r : residual_integrability(frame, g.u(i), g.v(j)))
        worst = std::max(worst, std::isfinite(r) ? std::abs(r) : HUGE_VAL);
    }
  return worst;
}

ComponentField integrate_component(const CoefficientFrame& frame, const std::array<double, 3>& ic,
                                   const GridSpec& grid, MarchOrder order, double compat_tol) {
  const auto states = march<1>(frame, State<1>(ic[0], ic[1], ic[2]), grid, order, compat_tol);
  ComponentField out{grid, {}, {}, {}};
  out.theta.reserve(states.size());
  out.theta_u.reserve(states.size());
  out.theta_v.reserve(states.size());
  for (const auto& s : states) {
    out.theta.push_back(s(0));
    out.theta_u.push_back(s(1));
    out.theta_v.push_back(s(2));
  }
  return out;
}

namespace {

void fill_triple(SurfaceGrid& s) {
  s.triple.resize(s.r.size());
  int sign = 0;
  for (std::size_t k = 0; k < s.r.size(); ++k) {
    const double t = s.r[k].dot(s.r_u[k].cross(s.r_v[k]));
    const double scale = s.r[k].norm() * s.r_u[k].norm() * s.r_v[k].norm();
    s.triple[k] = t;
    const int sk = t > 0 ? 1 : -1;
    if (!(std::abs(t) > 1e-14 * scale) || (sign != 0 && sk != sign)) {
      std::ostringstream os;
      os << "triple product det[r, r_u, r_v] vanishes near node " << k << " (value " << t << ")";
      throw DomainError(os.str());
    }
    sign = sk;
  }
}

}  // namespace

SurfaceGrid integrate_surface(const CoefficientFrame& frame,
                              const std::array<std::array<double, 3>, 3>& ics, const GridSpec& grid,
                              MarchOrder order, double compat_tol) {
  Eigen::Matrix3d s0;
  for (int c = 0; c < 3; ++c) s0.col(c) = Eigen::Vector3d(ics[c][0], ics[c][1], ics[c][2]);
  if (!(std::abs(s0.determinant()) > 1e-12))
    throw InvalidArgument("integrate_surface: initial conditions are linearly dependent");

  const auto states = march<3>(frame, s0, grid, order, compat_tol);
  SurfaceGrid out;
  out.grid = grid;
  const std::size_t n = states.size();
  for (auto* v : {&out.r, &out.r_u, &out.r_v, &out.r_uu, &out.r_uv, &out.r_vv}) v->resize(n);
  for (int j = 0; j < grid.nv; ++j)
    for (int i = 0; i < grid.nu; ++i) {
      const std::size_t k = grid.index(i, j);
      const Coeffs c = coeffs_at(frame, grid.u(i), grid.v(j));
      out.r[k] = states[k].row(0).transpose();
      out.r_u[k] = states[k].row(1).transpose();
      out.r_v[k] = states[k].row(2).transpose();
      out.r_uu[k] = c.a * out.r_u[k] + c.b * out.r_v[k];
      out.r_uv[k] = c.h * out.r[k];
      out.r_vv[k] = c.a2 * out.r_u[k] + c.b2 * out.r_v[k];
    }
  fill_triple(out);
  return out;
}

SurfaceGrid sample_surface(const ParametricSurface& s, const GridSpec& grid) {
  grid.validate();
  SurfaceGrid out;
  out.grid = grid;
  const std::size_t n = grid.size();
  for (auto* v : {&out.r, &out.r_u, &out.r_v, &out.r_uu, &out.r_uv, &out.r_vv}) v->resize(n);
  for (int j = 0; j < grid.nv; ++j)
    for (int i = 0; i < grid.nu; ++i) {
      const std::size_t k = grid.index(i, j);
      const auto r = s.eval(grid.u(i), grid.v(j), 2);
      for (int c = 0; c < 3; ++c) {
        out.r[k](c) = r[c].value();
        out.r_u[k](c) = r[c].d(1, 0);
        out.r_v[k](c) = r[c].d(0, 1);
        out.r_uu[k](c) = r[c].d(2, 0);
        out.r_uv[k](c) = r[c].d(1, 1);
        out.r_vv[k](c) = r[c].d(0, 2);
      }
    }
  fill_triple(out);
  return out;
}

SurfaceGrid apply_linear_map(const SurfaceGrid& g, const Eigen::Matrix3d& M) {
  SurfaceGrid out = g;
  for (auto* v : {&out.r, &out.r_u, &out.r_v, &out.r_uu, &out.r_uv, &out.r_vv})
    for (auto& x : *v) x = M * x;
  const double det = M.determinant();
  for (double& t : out.triple) t *= det;
  return out;
}

NodeGeometry node_geometry(const Eigen::Vector3d& r, const Eigen::Vector3d& ru,
                           const Eigen::Vector3d& rv, const Eigen::Vector3d& ruu,
                           const Eigen::Vector3d& ruv, const Eigen::Vector3d& rvv) {
  NodeGeometry g;
  g.E = ru.dot(ru);
  g.F = ru.dot(rv);
  g.G = rv.dot(rv);
  const double metric = g.E * g.G - g.F * g.F;
  const Eigen::Vector3d n = ru.cross(rv);
  const double nn = n.norm();
  if (!(metric > 0.0) || !(nn > 0.0)) throw DomainError("geometry: degenerate metric (EG - F^2 <= 0)");
  const Eigen::Vector3d nu = n / nn;
  g.L = ruu.dot(nu);
  g.M = ruv.dot(nu);
  g.N = rvv.dot(nu);
  g.K = (g.L * g.N - g.M * g.M) / metric;
  g.d = std::abs(r.dot(nu));
  if (!(g.d > 1e-14 * r.norm()))
    throw DomainError("geometry: tangent plane passes through the origin (d = 0)");
  g.I = g.K / (g.d * g.d * g.d * g.d);
  return g;
}

namespace {

void summarize(GeometryReport& rep) {
  double sum = 0.0;
  for (const auto& n : rep.nodes) {
    sum += n.I;
    rep.max_abs_L = std::max(rep.max_abs_L, std::abs(n.L));
    rep.max_abs_N = std::max(rep.max_abs_N, std::abs(n.N));
  }
  rep.mean_I = sum / static_cast<double>(rep.nodes.size());
  for (const auto& n : rep.nodes)
    rep.spread_I = std::max(rep.spread_I, std::abs(n.I - rep.mean_I) / std::abs(rep.mean_I));
}

}  // namespace

GeometryReport geometry(const SurfaceGrid& g) {
  if (g.r.empty()) throw InvalidArgument("geometry: empty surface");
  if (g.r_uu.size() != g.r.size())
    throw InvalidArgument("geometry: surface has no second derivatives");
  GeometryReport rep;
  rep.nodes.reserve(g.r.size());
  for (std::size_t k = 0; k < g.r.size(); ++k)
    rep.nodes.push_back(node_geometry(g.r[k], g.r_u[k], g.r_v[k], g.r_uu[k], g.r_uv[k], g.r_vv[k]));
  summarize(rep);
  return rep;
}

GeometryReport geometry(const ParametricSurface& s, const GridSpec& grid) {
  return geometry(sample_surface(s, grid));
}

std::array<double, 2> asymptotic_defect(const GeometryReport& report) {
  return {report.max_abs_L, report.max_abs_N};
}

double marching_discrepancy(const CoefficientFrame& frame, const std::array<double, 3>& ic,
                            const GridSpec& grid) {
  const ComponentField a = integrate_component(frame, ic, grid, MarchOrder::RowsThenColumns);
  const ComponentField b = integrate_component(frame, ic, grid, MarchOrder::ColumnsThenRows);
  double worst = 0.0;
  for (std::size_t k = 0; k < a.theta.size(); ++k)
    worst = std::max(worst, std::abs(a.theta[k] - b.theta[k]) / std::max(1.0, std::abs(a.theta[k])));
  return worst;
}

}  // namespace titeica
