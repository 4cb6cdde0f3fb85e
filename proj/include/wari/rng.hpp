#pragma once

#include <cmath>
#include <cstdint>

namespace wari {

/// splitmix64 step; also used to mix stream salts into seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Small deterministic generator. Streams are derived from
/// (seed, salt words), so independent blocks can be sampled in parallel
/// and still reproduce bit-identically for a given seed.
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : state_(seed) { (void)splitmix64(state_); }

  Prng(std::uint64_t seed, std::uint64_t salt0, std::uint64_t salt1 = 0,
       std::uint64_t salt2 = 0) {
    std::uint64_t s = seed;
    state_ = splitmix64(s);
    s = state_ ^ (0x632be59bd9b4e019ULL + salt0);
    state_ = splitmix64(s);
    s = state_ ^ (0x9e6c63d0876a9a3fULL + salt1);
    state_ = splitmix64(s);
    s = state_ ^ (0xc2b2ae3d27d4eb4fULL + salt2);
    state_ = splitmix64(s);
  }

  std::uint64_t next_u64() { return splitmix64(state_); }

  /// Uniform in (0, 1]; never returns 0, which keeps log() finite below.
  double uniform01() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  /// One standard normal via Box-Muller (second value discarded).
  double normal() {
    const double u = uniform01();
    const double v = uniform01();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586476925286766559 * v);
  }

  /// Pair of independent standard normals.
  void normal_pair(double& a, double& b) {
    const double u = uniform01();
    const double v = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u));
    const double t = 6.283185307179586476925286766559 * v;
    a = r * std::cos(t);
    b = r * std::sin(t);
  }

 private:
  std::uint64_t state_;
};

}  // namespace wari
