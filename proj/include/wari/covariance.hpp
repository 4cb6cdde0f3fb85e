#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "wari/grid.hpp"
#include "wari/helmholtz.hpp"

namespace wari {

/// Homoscedastic data covariance Sigma_d = sigma_d_sq * I over all
/// receivers and sources.
struct DataCovariance {
  double sigma_d_sq = 1.0;

  void validate() const;
};

/// Sigma = sigma_sq * I + U U*.
struct LowRankPerturbedCovariance {
  double sigma_sq = 1.0;
  Eigen::MatrixXcd u;
};

enum class CovarianceKind { source_focusing, depth_focusing, uniform };

/// Diagonal source covariance family Sigma_q^alpha = diag(sigma^2), with
///   source_focusing: sigma^2(x) = scale * (|x - x_s|^2 + delta^2)^-alpha
///   depth_focusing:  sigma^2(x) = scale * (depth(x)^2 + delta^2)^-alpha
///   uniform:         sigma^2(x) = scale
/// (alpha acts as an elementwise power of the diagonal).
struct SourceCovarianceSpec {
  CovarianceKind kind = CovarianceKind::source_focusing;
  double delta = 10.0;   // regularizer, meters
  double alpha = 1.0;    // focusing power, >= 0
  double scale = 1.0;
  bool complex_columns = true;  // sketch entry type; real columns for ablation

  void validate() const;
};

/// Per-source variance sigma^2 on grid nodes; zero on sponge nodes so the
/// equation error stays confined to the physical interior.
struct VarianceField {
  Eigen::ArrayXd sigma_sq;
};

VarianceField variance_field(const SourceCovarianceSpec& spec, double src_x, double src_z,
                             const Grid2D& grid,
                             const Eigen::Array<bool, Eigen::Dynamic, 1>& interior);

/// One field per acquisition source (depth_focusing / uniform fields do
/// not depend on the source position but are stored per source anyway).
std::vector<VarianceField> variance_fields(const SourceCovarianceSpec& spec,
                                           const Acquisition& acq, const Grid2D& grid,
                                           const BoundaryParams& bc);

/// Per-source sketch blocks of k columns each (total rank r = k n_s).
/// Column j of block s is sigma_s .* g / sqrt(k) with g standard
/// (circularly symmetric when complex) Gaussian, so E[Z_s Z_s*] equals
/// diag(sigma_s^2) exactly. Reproducible from (seed, source, column).
struct Sketch {
  int k = 1;
  std::uint64_t seed = 0;
  bool complex_columns = true;
  std::vector<Eigen::MatrixXcd> blocks;

  int n_s() const { return static_cast<int>(blocks.size()); }
  int rank() const { return k * n_s(); }
};

Sketch sample_sketch(const std::vector<VarianceField>& sigma, int k, std::uint64_t seed,
                     bool complex_columns = true);

/// <Sigma^-1 x, x> for the plain and low-rank-perturbed covariances.
double weighted_norm_sq(const Eigen::VectorXcd& x, const DataCovariance& cov);
double weighted_norm_sq(const Eigen::MatrixXcd& x, const DataCovariance& cov);
double weighted_norm_sq(const Eigen::VectorXcd& x, const LowRankPerturbedCovariance& cov);

/// Calibrates sigma_d^2 against ||F Sigma_q F*|| at the given model: a few
/// random power-iteration probes estimate the largest eigenvalue over a
/// spread of sources, and sigma_d^2 is set one decade below it (the two
/// norms then balance within a factor of 10).
double calibrate_sigma_d(const Factorization& fact, const Acquisition& acq,
                         const std::vector<VarianceField>& sigma, std::uint64_t seed);

}  // namespace wari
