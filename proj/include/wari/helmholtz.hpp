#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <Eigen/SparseLU>
#include <memory>

#include "wari/grid.hpp"

namespace wari {

/// Absorbing sponge band on all four sides: inside the band the diagonal
/// term is multiplied by 1 + i*eta with a quadratic ramp, eta = strength
/// at the outer edge and 0 at the inner edge of the band.
struct BoundaryParams {
  int width = 20;        // band width in nodes; 0 disables the sponge
  double strength = 3.0; // eta at the grid boundary

  bool operator==(const BoundaryParams& o) const = default;
};

/// Frequency-domain wave operator
///   A(m) = L + omega^2 diag(m .* (1 + i eta)),
/// L the 5-point Laplacian with homogeneous Dirichlet exterior. A is
/// complex symmetric; on interior nodes (eta = 0) it is linear in m with
/// derivative omega^2 diag(.).
struct HelmholtzOperator {
  Grid2D grid;
  double omega = 0.0;
  BoundaryParams boundary;
  Eigen::ArrayXd eta;
  Eigen::SparseMatrix<Complex> matrix;
};

Eigen::ArrayXd sponge_profile(const Grid2D& grid, const BoundaryParams& bc);

/// true on nodes outside the sponge band (the physical interior).
Eigen::Array<bool, Eigen::Dynamic, 1> interior_mask(const Grid2D& grid,
                                                    const BoundaryParams& bc);

HelmholtzOperator assemble(const SlownessSqModel& m, double omega, const BoundaryParams& bc);

/// Direct sparse LU of A(m), reusable for any number of right-hand sides.
/// Immutable after construction; concurrent solves on distinct right-hand
/// sides are safe. Every solve adds its block count to the module tally.
class Factorization {
 public:
  explicit Factorization(const HelmholtzOperator& op);

  /// Solves A x = b column by column.
  Eigen::MatrixXcd solve(const Eigen::MatrixXcd& rhs) const;
  /// Solves A* x = b column by column.
  Eigen::MatrixXcd solve_adjoint(const Eigen::MatrixXcd& rhs) const;

  const Grid2D& grid() const { return grid_; }
  double omega() const { return omega_; }

 private:
  std::shared_ptr<Eigen::SparseLU<Eigen::SparseMatrix<Complex>>> lu_;
  Grid2D grid_;
  double omega_ = 0.0;
};

// Module-level PDE-solve tally; incremented by the number of right-hand
// side blocks on every solve / solve_adjoint.
long long pde_solve_count();
void reset_pde_solve_count();
void add_pde_solves(long long n);

/// Unit-amplitude point source per acquisition source, one column each.
Eigen::MatrixXcd build_point_sources(const Acquisition& acq, const Grid2D& grid);

/// Samples receiver nodes: (n_r x blocks) from (N x blocks).
Eigen::MatrixXcd restrict_data(const Eigen::MatrixXcd& u, const Acquisition& acq);

/// Injects receiver values back onto the grid (exact adjoint of
/// restrict_data; duplicate receiver nodes accumulate).
Eigen::MatrixXcd restrict_adjoint(const Eigen::MatrixXcd& d, const Acquisition& acq,
                                  const Grid2D& grid);

/// F(m) q = R A(m)^{-1} q.
Eigen::MatrixXcd forward(const SlownessSqModel& m, double omega, const BoundaryParams& bc,
                         const Eigen::MatrixXcd& q, const Acquisition& acq);

/// Frequency-domain cross-correlation of the forward and backward fields,
///   g(x) = omega^2 sum_b Re( ubar_b(x) conj(v_b(x)) ),
/// the discrete gradient of Re<y, d - F(m) q> at v = A^-* R* y (the
/// time-domain second-derivative correlation maps to the omega^2 factor;
/// the global sign is pinned by the finite-difference checks).
Eigen::ArrayXd gradient_correlation(const Eigen::MatrixXcd& ubar, const Eigen::MatrixXcd& v,
                                    double omega);

}  // namespace wari
