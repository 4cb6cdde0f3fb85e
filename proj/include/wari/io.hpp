#pragma once

#include <Eigen/Dense>
#include <string>

#include "wari/grid.hpp"

namespace wari {

// Flat binary model format:
//   magic "WARI", u32 nx, u32 nz, f64 dx, f64 dz, f64 x0, f64 z0,
//   then nx*nz little-endian f64 values, row-major with z fastest.
void write_model(const std::string& path, const Grid2D& grid, const Eigen::ArrayXd& field);
std::pair<Grid2D, Eigen::ArrayXd> read_model(const std::string& path);

// x,z,value CSV for inspection.
void write_model_csv(const std::string& path, const Grid2D& grid, const Eigen::ArrayXd& field);

// Shot record format:
//   magic "WARI", u32 n_r, u32 n_s, f64 frequency (Hz),
//   then n_r*n_s interleaved (re, im) f64, receiver fastest.
void write_shots(const std::string& path, double frequency_hz, const Eigen::MatrixXcd& data);
std::pair<double, Eigen::MatrixXcd> read_shots(const std::string& path);

// Wavefield container: model header, u32 block count, then one complex
// (re, im interleaved) nx*nz section per block.
void write_wavefield(const std::string& path, const Grid2D& grid, const Eigen::MatrixXcd& u);
std::pair<Grid2D, Eigen::MatrixXcd> read_wavefield(const std::string& path);

/// Canonical shortest round-trip double formatting shared by every text
/// artifact, so identical runs produce identical bytes.
std::string format_double(double v);

bool files_identical(const std::string& a, const std::string& b);

}  // namespace wari
