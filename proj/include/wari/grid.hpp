#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

namespace wari {

using Complex = std::complex<double>;

/// Regular 2D node grid. Fields are stored row-major with z fastest:
/// flat index of node (i, j) is i * nz + j, i along x, j along z.
struct Grid2D {
  int nx = 0;
  int nz = 0;
  double dx = 0.0;
  double dz = 0.0;
  double x0 = 0.0;
  double z0 = 0.0;

  int count() const { return nx * nz; }
  int index(int i, int j) const { return i * nz + j; }
  double x(int i) const { return x0 + i * dx; }
  double z(int j) const { return z0 + j * dz; }
  double x_max() const { return x0 + (nx - 1) * dx; }
  double z_max() const { return z0 + (nz - 1) * dz; }

  bool operator==(const Grid2D& o) const = default;

  void validate() const;
};

/// Velocity field in m/s, one value per grid node.
struct VelocityModel {
  Grid2D grid;
  Eigen::ArrayXd v;

  void validate() const;
};

/// Squared slowness m = 1/v^2 in s^2/m^2; the Helmholtz operator is
/// linear in this parameterization.
struct SlownessSqModel {
  Grid2D grid;
  Eigen::ArrayXd m;

  void validate() const;
};

/// Sources along one lateral edge, receivers along the opposite one.
/// Positions coincide with grid nodes, so restriction is exact injection.
struct Acquisition {
  std::vector<double> src_x, src_z;
  std::vector<double> rcv_x, rcv_z;
  std::vector<int> src_nodes;
  std::vector<int> rcv_nodes;

  int n_s() const { return static_cast<int>(src_nodes.size()); }
  int n_r() const { return static_cast<int>(rcv_nodes.size()); }
};

struct GaussianLensSpec {
  double v_background = 2000.0;  // m/s
  double amplitude = -400.0;     // m/s, negative = low-velocity lens
  double center_x = 500.0;       // m
  double center_z = 500.0;       // m
  double radius = 150.0;         // Gaussian std, m

  void validate() const;
};

/// v(x,z) = v_background + amplitude * exp(-|x - c|^2 / (2 radius^2)).
/// Throws if the resulting field is not strictly positive.
VelocityModel build_gaussian_lens(const GaussianLensSpec& spec, const Grid2D& grid);

SlownessSqModel velocity_to_slowness_sq(const VelocityModel& vm);
VelocityModel slowness_sq_to_velocity(const SlownessSqModel& sm);

/// Sources equispaced along the left interior edge (x index 1),
/// receivers along the right interior edge (x index nx-2). Equispacing is
/// computed in continuous coordinates over the interior band and snapped
/// to the nearest node; counts above the node count produce duplicates.
Acquisition build_transmission_acquisition(const Grid2D& grid, int n_s, int n_r);

/// ||m - m_true||_2 / ||m_true||_2 over the full grid.
double model_relative_error(const SlownessSqModel& m, const SlownessSqModel& m_true);
double model_relative_error(const Eigen::ArrayXd& m, const Eigen::ArrayXd& m_true);

}  // namespace wari
