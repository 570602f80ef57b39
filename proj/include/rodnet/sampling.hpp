#pragma once

#include <cstdint>
#include <random>

#include "rodnet/mat3.hpp"

namespace rodnet {

/// SplitMix64 stream used to derive independent per-trial seeds, so a
/// parallel loop over trials produces the same draws as a serial one.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Seed for trial `i` of a stream rooted at `seed`.
inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t i) {
  std::uint64_t s = seed ^ (0x2545f4914f6cdd1dull * (i + 1));
  return splitmix64(s);
}

struct Rng {
  std::mt19937_64 gen;

  explicit Rng(std::uint64_t seed) : gen(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
  }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(gen); }
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }
};

/// Haar-distributed rotation from a uniform unit quaternion.
Mat3 haar_rotation(Rng& rng);

/// SPD matrix with eigenvalues log-uniform in [lo, hi] and a Haar-random frame.
Sym3 random_spd(Rng& rng, double lo = 1e-3, double hi = 1e3);

/// Symmetric traceless matrix whose eigenvalues are scaled into
/// [-1/3, 2/3]; frame is Haar-random. Valid order-tensor input.
Sym3 random_traceless_bounded(Rng& rng);

/// Arbitrary matrix with entries uniform in [-scale, scale].
Mat3 random_mat(Rng& rng, double scale = 1.0);

/// Matrix with positive determinant (resampled until det > eps).
Mat3 random_det_positive(Rng& rng, double scale = 1.0);

}  // namespace rodnet
