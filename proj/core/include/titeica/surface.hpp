#pragma once

#include <Eigen/Core>
#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "titeica/pde.hpp"
#include "titeica/solutions.hpp"

namespace titeica {

/// Rectangular grid u = u0 + i du, v = v0 + j dv, nodes stored row-major
/// (index j * nu + i).
struct GridSpec {
  double u0 = 0.0, v0 = 0.0;
  int nu = 2, nv = 2;
  double du = 0.02, dv = 0.02;
  std::size_t max_nodes = 1'000'000;

  /// Unit square [u0, u0 + 1] x [v0, v0 + 1] with the given step.
  static GridSpec unit(double step, double u0 = 0.0, double v0 = 0.0);

  void validate() const;
  std::size_t size() const { return static_cast<std::size_t>(nu) * nv; }
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * nu + i; }
  double u(int i) const { return u0 + i * du; }
  double v(int j) const { return v0 + j * dv; }
  Box<2> box() const { return {{u0, v0}, {u(nu - 1), v(nv - 1)}}; }
};

enum class MarchOrder { RowsThenColumns, ColumnsThenRows };

/// A solution of the linear system with its first derivatives, per node.
struct ComponentField {
  GridSpec grid;
  std::vector<double> theta, theta_u, theta_v;
};

/// Marches (theta, theta_u, theta_v) over the grid with RK4: along u,
/// s' = (theta_u, a theta_u + b theta_v, h theta); along v,
/// s' = (theta_v, h theta, a2 theta_u + b2 theta_v). The default order runs
/// the line v = v0 first, then every column in v. The frame is checked for
/// compatibility on a 5 x 5 subgrid first (InvalidArgument above compat_tol).
ComponentField integrate_component(const CoefficientFrame& frame, const std::array<double, 3>& ic,
                                   const GridSpec& grid,
                                   MarchOrder order = MarchOrder::RowsThenColumns,
                                   double compat_tol = 1e-8);

/// max |integrability residual| over a 5 x 5 subgrid.
double frame_compatibility(const CoefficientFrame& frame, const GridSpec& grid);

struct SurfaceGrid {
  GridSpec grid;
  std::vector<Eigen::Vector3d> r, r_u, r_v;
  /// from the frame relations; empty for analytic surfaces without them
  std::vector<Eigen::Vector3d> r_uu, r_uv, r_vv;
  /// det[r, r_u, r_v]
  std::vector<double> triple;
};

/// Three independent solutions x, y, z with ics[c] = (theta, theta_u, theta_v)
/// of component c at (u0, v0). InvalidArgument for dependent ics,
/// DomainError if the triple product vanishes or changes sign on the grid.
SurfaceGrid integrate_surface(const CoefficientFrame& frame,
                              const std::array<std::array<double, 3>, 3>& ics, const GridSpec& grid,
                              MarchOrder order = MarchOrder::RowsThenColumns,
                              double compat_tol = 1e-8);

/// Samples r and its derivatives through order 2 from analytic jets.
SurfaceGrid sample_surface(const ParametricSurface& s, const GridSpec& grid);

/// M r at every node (derivatives transformed alike).
SurfaceGrid apply_linear_map(const SurfaceGrid& g, const Eigen::Matrix3d& M);

struct NodeGeometry {
  double E = 0, F = 0, G = 0, L = 0, M = 0, N = 0, K = 0, d = 0, I = 0;
};

/// Fundamental forms, Gaussian curvature, distance from the origin to the
/// tangent plane and I = K / d^4. DomainError when EG - F^2 <= 0 or d = 0.
NodeGeometry node_geometry(const Eigen::Vector3d& r, const Eigen::Vector3d& ru,
                           const Eigen::Vector3d& rv, const Eigen::Vector3d& ruu,
                           const Eigen::Vector3d& ruv, const Eigen::Vector3d& rvv);

struct GeometryReport {
  std::vector<NodeGeometry> nodes;
  double mean_I = 0;
  /// max |I - mean| / |mean|
  double spread_I = 0;
  double max_abs_L = 0, max_abs_N = 0;
};

GeometryReport geometry(const SurfaceGrid& g);
GeometryReport geometry(const ParametricSurface& s, const GridSpec& grid);

/// (max |L|, max |N|): both vanish in asymptotic coordinates.
std::array<double, 2> asymptotic_defect(const GeometryReport& report);

/// Max |theta_a - theta_b| / max(1, |theta_a|) between the two marching orders
/// for one component.
double marching_discrepancy(const CoefficientFrame& frame, const std::array<double, 3>& ic,
                            const GridSpec& grid);

enum class MeshFormat { Obj, Csv };
MeshFormat parse_mesh_format(const std::string& s);

/// OBJ: `v x y z` per node in row-major order, then two counterclockwise
/// triangles per cell as 1-based `f` records. CSV: header u,v,x,y,z,K,d,I,
/// then one row per node with 17 significant digits. IoError if the path is
/// not writable.
void export_mesh(const SurfaceGrid& g, const GeometryReport& geo, MeshFormat format,
                 const std::string& path);

struct CsvNode {
  double u, v, x, y, z, K, d, I;
};
std::vector<CsvNode> read_mesh_csv(const std::string& path);

}  // namespace titeica
