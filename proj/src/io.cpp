#include "wari/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace wari {

namespace {

constexpr char kMagic[4] = {'W', 'A', 'R', 'I'};

void put_u32(std::ostream& os, std::uint32_t v) {
  unsigned char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
  os.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t get_u32(std::istream& is) {
  unsigned char b[4];
  is.read(reinterpret_cast<char*>(b), 4);
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
  return v;
}

void put_f64(std::ostream& os, double v) {
  std::uint64_t u;
  std::memcpy(&u, &v, 8);
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((u >> (8 * i)) & 0xff);
  os.write(reinterpret_cast<const char*>(b), 8);
}

double get_f64(std::istream& is) {
  unsigned char b[8];
  is.read(reinterpret_cast<char*>(b), 8);
  std::uint64_t u = 0;
  for (int i = 0; i < 8; ++i) u |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  double v;
  std::memcpy(&v, &u, 8);
  return v;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  return os;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open for reading: " + path);
  return is;
}

void check_magic(std::istream& is, const std::string& path) {
  char m[4];
  is.read(m, 4);
  if (!is || std::memcmp(m, kMagic, 4) != 0)
    throw std::runtime_error("bad magic in " + path);
}

void write_grid_header(std::ostream& os, const Grid2D& g) {
  os.write(kMagic, 4);
  put_u32(os, static_cast<std::uint32_t>(g.nx));
  put_u32(os, static_cast<std::uint32_t>(g.nz));
  put_f64(os, g.dx);
  put_f64(os, g.dz);
  put_f64(os, g.x0);
  put_f64(os, g.z0);
}

Grid2D read_grid_header(std::istream& is, const std::string& path) {
  check_magic(is, path);
  Grid2D g;
  g.nx = static_cast<int>(get_u32(is));
  g.nz = static_cast<int>(get_u32(is));
  g.dx = get_f64(is);
  g.dz = get_f64(is);
  g.x0 = get_f64(is);
  g.z0 = get_f64(is);
  if (!is) throw std::runtime_error("truncated header in " + path);
  return g;
}

}  // namespace

void write_model(const std::string& path, const Grid2D& grid, const Eigen::ArrayXd& field) {
  if (field.size() != grid.count())
    throw std::invalid_argument("write_model: field size mismatch");
  auto os = open_out(path);
  write_grid_header(os, grid);
  for (Eigen::Index i = 0; i < field.size(); ++i) put_f64(os, field[i]);
  if (!os) throw std::runtime_error("write failed: " + path);
}

std::pair<Grid2D, Eigen::ArrayXd> read_model(const std::string& path) {
  auto is = open_in(path);
  Grid2D g = read_grid_header(is, path);
  Eigen::ArrayXd field(g.count());
  for (Eigen::Index i = 0; i < field.size(); ++i) field[i] = get_f64(is);
  if (!is) throw std::runtime_error("truncated body in " + path);
  return {g, std::move(field)};
}

void write_model_csv(const std::string& path, const Grid2D& grid, const Eigen::ArrayXd& field) {
  if (field.size() != grid.count())
    throw std::invalid_argument("write_model_csv: field size mismatch");
  auto os = open_out(path);
  os << "x,z,value\n";
  for (int i = 0; i < grid.nx; ++i)
    for (int j = 0; j < grid.nz; ++j)
      os << format_double(grid.x(i)) << ',' << format_double(grid.z(j)) << ','
         << format_double(field[grid.index(i, j)]) << '\n';
}

void write_shots(const std::string& path, double frequency_hz, const Eigen::MatrixXcd& data) {
  auto os = open_out(path);
  os.write(kMagic, 4);
  put_u32(os, static_cast<std::uint32_t>(data.rows()));
  put_u32(os, static_cast<std::uint32_t>(data.cols()));
  put_f64(os, frequency_hz);
  // receiver fastest: column by column
  for (Eigen::Index s = 0; s < data.cols(); ++s)
    for (Eigen::Index r = 0; r < data.rows(); ++r) {
      put_f64(os, data(r, s).real());
      put_f64(os, data(r, s).imag());
    }
  if (!os) throw std::runtime_error("write failed: " + path);
}

std::pair<double, Eigen::MatrixXcd> read_shots(const std::string& path) {
  auto is = open_in(path);
  check_magic(is, path);
  const int n_r = static_cast<int>(get_u32(is));
  const int n_s = static_cast<int>(get_u32(is));
  const double freq = get_f64(is);
  Eigen::MatrixXcd data(n_r, n_s);
  for (int s = 0; s < n_s; ++s)
    for (int r = 0; r < n_r; ++r) {
      const double re = get_f64(is);
      const double im = get_f64(is);
      data(r, s) = Complex(re, im);
    }
  if (!is) throw std::runtime_error("truncated body in " + path);
  return {freq, std::move(data)};
}

void write_wavefield(const std::string& path, const Grid2D& grid, const Eigen::MatrixXcd& u) {
  if (u.rows() != grid.count())
    throw std::invalid_argument("write_wavefield: field size mismatch");
  auto os = open_out(path);
  write_grid_header(os, grid);
  put_u32(os, static_cast<std::uint32_t>(u.cols()));
  for (Eigen::Index b = 0; b < u.cols(); ++b)
    for (Eigen::Index i = 0; i < u.rows(); ++i) {
      put_f64(os, u(i, b).real());
      put_f64(os, u(i, b).imag());
    }
  if (!os) throw std::runtime_error("write failed: " + path);
}

std::pair<Grid2D, Eigen::MatrixXcd> read_wavefield(const std::string& path) {
  auto is = open_in(path);
  Grid2D g = read_grid_header(is, path);
  const int blocks = static_cast<int>(get_u32(is));
  Eigen::MatrixXcd u(g.count(), blocks);
  for (int b = 0; b < blocks; ++b)
    for (int i = 0; i < g.count(); ++i) {
      const double re = get_f64(is);
      const double im = get_f64(is);
      u(i, b) = Complex(re, im);
    }
  if (!is) throw std::runtime_error("truncated body in " + path);
  return {g, std::move(u)};
}

std::string format_double(double v) {
  char buf[40];
  // %.17g is lossless for doubles; trim to the shortest round-trip form.
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    double back = 0.0;
    std::sscanf(buf, "%lf", &back);
    if (back == v) break;
  }
  return std::string(buf);
}

bool files_identical(const std::string& a, const std::string& b) {
  auto ia = open_in(a);
  auto ib = open_in(b);
  std::vector<char> ba((std::istreambuf_iterator<char>(ia)), std::istreambuf_iterator<char>());
  std::vector<char> bb((std::istreambuf_iterator<char>(ib)), std::istreambuf_iterator<char>());
  return ba == bb;
}

}  // namespace wari
