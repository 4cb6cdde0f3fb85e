#include "wari/helmholtz.hpp"

#include <atomic>
#include <stdexcept>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace wari {

namespace {
std::atomic<long long> g_pde_solves{0};
}

long long pde_solve_count() { return g_pde_solves.load(); }
void reset_pde_solve_count() { g_pde_solves.store(0); }
void add_pde_solves(long long n) { g_pde_solves.fetch_add(n); }

Eigen::ArrayXd sponge_profile(const Grid2D& grid, const BoundaryParams& bc) {
  grid.validate();
  if (bc.width < 0) throw std::invalid_argument("sponge_profile: negative width");
  if (bc.width > 0 && 2 * bc.width >= std::min(grid.nx, grid.nz))
    throw std::invalid_argument("sponge_profile: boundary width >= half of grid extent");
  Eigen::ArrayXd eta = Eigen::ArrayXd::Zero(grid.count());
  if (bc.width == 0) return eta;
  for (int i = 0; i < grid.nx; ++i) {
    for (int j = 0; j < grid.nz; ++j) {
      const int d = std::min(std::min(i, grid.nx - 1 - i), std::min(j, grid.nz - 1 - j));
      if (d < bc.width) {
        const double t = static_cast<double>(bc.width - d) / bc.width;
        eta[grid.index(i, j)] = bc.strength * t * t;
      }
    }
  }
  return eta;
}

Eigen::Array<bool, Eigen::Dynamic, 1> interior_mask(const Grid2D& grid,
                                                    const BoundaryParams& bc) {
  const Eigen::ArrayXd eta = sponge_profile(grid, bc);
  return eta == 0.0;
}

HelmholtzOperator assemble(const SlownessSqModel& m, double omega, const BoundaryParams& bc) {
  m.validate();
  if (omega <= 0.0) throw std::invalid_argument("assemble: omega must be positive");
  const Grid2D& g = m.grid;

  HelmholtzOperator op;
  op.grid = g;
  op.omega = omega;
  op.boundary = bc;
  op.eta = sponge_profile(g, bc);

  const double ax = 1.0 / (g.dx * g.dx);
  const double az = 1.0 / (g.dz * g.dz);
  const double w2 = omega * omega;

  std::vector<Eigen::Triplet<Complex>> trip;
  trip.reserve(static_cast<std::size_t>(g.count()) * 5);
  for (int i = 0; i < g.nx; ++i) {
    for (int j = 0; j < g.nz; ++j) {
      const int row = g.index(i, j);
      const Complex diag =
          Complex(-2.0 * ax - 2.0 * az, 0.0) + w2 * m.m[row] * Complex(1.0, op.eta[row]);
      trip.emplace_back(row, row, diag);
      if (i > 0) trip.emplace_back(row, g.index(i - 1, j), Complex(ax, 0.0));
      if (i < g.nx - 1) trip.emplace_back(row, g.index(i + 1, j), Complex(ax, 0.0));
      if (j > 0) trip.emplace_back(row, g.index(i, j - 1), Complex(az, 0.0));
      if (j < g.nz - 1) trip.emplace_back(row, g.index(i, j + 1), Complex(az, 0.0));
    }
  }
  op.matrix.resize(g.count(), g.count());
  op.matrix.setFromTriplets(trip.begin(), trip.end());
  op.matrix.makeCompressed();
  return op;
}

Factorization::Factorization(const HelmholtzOperator& op)
    : lu_(std::make_shared<Eigen::SparseLU<Eigen::SparseMatrix<Complex>>>()),
      grid_(op.grid),
      omega_(op.omega) {
  lu_->isSymmetric(true);
  lu_->compute(op.matrix);
  if (lu_->info() != Eigen::Success)
    throw std::runtime_error("Factorization: system is numerically singular");
}

namespace {

template <typename Solver>
Eigen::MatrixXcd solve_columns(const Solver& solver, const Eigen::MatrixXcd& rhs) {
  Eigen::MatrixXcd out(rhs.rows(), rhs.cols());
  const int cols = static_cast<int>(rhs.cols());
  // Column-by-column keeps results bit-identical for any thread count.
#pragma omp parallel for schedule(dynamic)
  for (int c = 0; c < cols; ++c) {
    Eigen::VectorXcd x = solver.solve(rhs.col(c).eval());
    out.col(c) = x;
  }
  add_pde_solves(cols);
  return out;
}

}  // namespace

Eigen::MatrixXcd Factorization::solve(const Eigen::MatrixXcd& rhs) const {
  if (rhs.rows() != grid_.count())
    throw std::invalid_argument("Factorization::solve: shape mismatch");
  return solve_columns(*lu_, rhs);
}

Eigen::MatrixXcd Factorization::solve_adjoint(const Eigen::MatrixXcd& rhs) const {
  if (rhs.rows() != grid_.count())
    throw std::invalid_argument("Factorization::solve_adjoint: shape mismatch");
  return solve_columns(lu_->adjoint(), rhs);
}

Eigen::MatrixXcd build_point_sources(const Acquisition& acq, const Grid2D& grid) {
  Eigen::MatrixXcd q = Eigen::MatrixXcd::Zero(grid.count(), acq.n_s());
  for (int s = 0; s < acq.n_s(); ++s) {
    if (acq.src_nodes[s] < 0 || acq.src_nodes[s] >= grid.count())
      throw std::invalid_argument("build_point_sources: source off grid");
    q(acq.src_nodes[s], s) = Complex(1.0, 0.0);
  }
  return q;
}

Eigen::MatrixXcd restrict_data(const Eigen::MatrixXcd& u, const Acquisition& acq) {
  Eigen::MatrixXcd d(acq.n_r(), u.cols());
  for (int r = 0; r < acq.n_r(); ++r) d.row(r) = u.row(acq.rcv_nodes[r]);
  return d;
}

Eigen::MatrixXcd restrict_adjoint(const Eigen::MatrixXcd& d, const Acquisition& acq,
                                  const Grid2D& grid) {
  if (d.rows() != acq.n_r())
    throw std::invalid_argument("restrict_adjoint: receiver count mismatch");
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(grid.count(), d.cols());
  for (int r = 0; r < acq.n_r(); ++r) u.row(acq.rcv_nodes[r]) += d.row(r);
  return u;
}

Eigen::MatrixXcd forward(const SlownessSqModel& m, double omega, const BoundaryParams& bc,
                         const Eigen::MatrixXcd& q, const Acquisition& acq) {
  Factorization f(assemble(m, omega, bc));
  return restrict_data(f.solve(q), acq);
}

Eigen::ArrayXd gradient_correlation(const Eigen::MatrixXcd& ubar, const Eigen::MatrixXcd& v,
                                    double omega) {
  if (ubar.rows() != v.rows() || ubar.cols() != v.cols())
    throw std::invalid_argument("gradient_correlation: shape mismatch");
  const double w2 = omega * omega;
  const int n = static_cast<int>(ubar.rows());
  const int blocks = static_cast<int>(ubar.cols());
  Eigen::ArrayXd g(n);
#pragma omp parallel for schedule(static)
  for (int x = 0; x < n; ++x) {
    double acc = 0.0;
    for (int b = 0; b < blocks; ++b) {
      const Complex& a = ubar(x, b);
      const Complex& c = v(x, b);
      acc += a.real() * c.real() + a.imag() * c.imag();  // Re(a * conj(c))
    }
    g[x] = w2 * acc;
  }
  return g;
}

}  // namespace wari
