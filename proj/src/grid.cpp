#include "wari/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace wari {

void Grid2D::validate() const {
  if (nx < 3 || nz < 3) throw std::invalid_argument("Grid2D: nx and nz must be >= 3");
  if (dx <= 0.0 || dz <= 0.0) throw std::invalid_argument("Grid2D: spacing must be positive");
}

void VelocityModel::validate() const {
  grid.validate();
  if (v.size() != grid.count()) throw std::invalid_argument("VelocityModel: field size mismatch");
  if (!(v > 0.0).all() || !v.isFinite().all())
    throw std::invalid_argument("VelocityModel: velocities must be positive and finite");
}

void SlownessSqModel::validate() const {
  grid.validate();
  if (m.size() != grid.count()) throw std::invalid_argument("SlownessSqModel: field size mismatch");
  if (!(m > 0.0).all() || !m.isFinite().all())
    throw std::invalid_argument("SlownessSqModel: entries must be positive and finite");
}

void GaussianLensSpec::validate() const {
  if (v_background + amplitude <= 0.0)
    throw std::invalid_argument("GaussianLensSpec: center velocity must be positive");
  if (radius <= 0.0) throw std::invalid_argument("GaussianLensSpec: radius must be positive");
}

VelocityModel build_gaussian_lens(const GaussianLensSpec& spec, const Grid2D& grid) {
  spec.validate();
  grid.validate();
  VelocityModel vm{grid, Eigen::ArrayXd(grid.count())};
  const double two_r2 = 2.0 * spec.radius * spec.radius;
  for (int i = 0; i < grid.nx; ++i) {
    for (int j = 0; j < grid.nz; ++j) {
      const double ddx = grid.x(i) - spec.center_x;
      const double ddz = grid.z(j) - spec.center_z;
      vm.v[grid.index(i, j)] =
          spec.v_background + spec.amplitude * std::exp(-(ddx * ddx + ddz * ddz) / two_r2);
    }
  }
  if (!(vm.v > 0.0).all())
    throw std::invalid_argument("build_gaussian_lens: non-positive velocity on grid");
  return vm;
}

SlownessSqModel velocity_to_slowness_sq(const VelocityModel& vm) {
  vm.validate();
  return SlownessSqModel{vm.grid, vm.v.square().inverse()};
}

VelocityModel slowness_sq_to_velocity(const SlownessSqModel& sm) {
  sm.validate();
  return VelocityModel{sm.grid, sm.m.sqrt().inverse()};
}

namespace {

int snap_index(double coord, double origin, double spacing, int n) {
  int idx = static_cast<int>(std::lround((coord - origin) / spacing));
  if (idx < 0) idx = 0;
  if (idx > n - 1) idx = n - 1;
  return idx;
}

// Equispaced points over [lo, hi]; a single point sits at the midpoint.
std::vector<double> equispaced(double lo, double hi, int n) {
  std::vector<double> pts(n);
  if (n == 1) {
    pts[0] = 0.5 * (lo + hi);
  } else {
    const double step = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i) pts[i] = lo + i * step;
  }
  return pts;
}

}  // namespace

Acquisition build_transmission_acquisition(const Grid2D& grid, int n_s, int n_r) {
  grid.validate();
  if (n_s < 1 || n_r < 1)
    throw std::invalid_argument("build_transmission_acquisition: counts must be >= 1");
  if (grid.nx < 4 || grid.nz < 3)
    throw std::invalid_argument("build_transmission_acquisition: grid too small");

  const double z_lo = grid.z(1);
  const double z_hi = grid.z(grid.nz - 2);
  const int src_i = 1;
  const int rcv_i = grid.nx - 2;

  Acquisition acq;
  for (double z : equispaced(z_lo, z_hi, n_s)) {
    const int j = snap_index(z, grid.z0, grid.dz, grid.nz);
    acq.src_x.push_back(grid.x(src_i));
    acq.src_z.push_back(grid.z(j));
    acq.src_nodes.push_back(grid.index(src_i, j));
  }
  for (double z : equispaced(z_lo, z_hi, n_r)) {
    const int j = snap_index(z, grid.z0, grid.dz, grid.nz);
    acq.rcv_x.push_back(grid.x(rcv_i));
    acq.rcv_z.push_back(grid.z(j));
    acq.rcv_nodes.push_back(grid.index(rcv_i, j));
  }
  return acq;
}

double model_relative_error(const Eigen::ArrayXd& m, const Eigen::ArrayXd& m_true) {
  if (m.size() != m_true.size())
    throw std::invalid_argument("model_relative_error: size mismatch");
  const double denom = std::sqrt(m_true.square().sum());
  if (denom == 0.0) throw std::invalid_argument("model_relative_error: zero reference model");
  return std::sqrt((m - m_true).square().sum()) / denom;
}

double model_relative_error(const SlownessSqModel& m, const SlownessSqModel& m_true) {
  if (!(m.grid == m_true.grid))
    throw std::invalid_argument("model_relative_error: grid mismatch");
  return model_relative_error(m.m, m_true.m);
}

}  // namespace wari
