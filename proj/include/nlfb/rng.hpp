#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include <Eigen/Dense>

namespace nlfb {

/// Counter-based splittable random generator (SplitMix64 core).
///
/// Every stream is fully determined by a 64-bit seed; the k-th output is a
/// pure function of (seed, k). Child streams are derived with
///   child_seed = mix64(parent_seed + GOLDEN * (stream_index + 1))
/// so per-trajectory streams are independent of thread scheduling and can be
/// reproduced from (parent seed, index) alone.
class Rng {
 public:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

  explicit Rng(std::uint64_t seed) : seed_(seed), state_(seed) {}

  static std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Seed-derivation rule for child streams.
  static std::uint64_t mix_seed(std::uint64_t parent_seed, std::uint64_t stream_index) {
    return mix64(parent_seed + kGolden * (stream_index + 1));
  }

  std::uint64_t seed() const { return seed_; }

  Rng child(std::uint64_t stream_index) const { return Rng(mix_seed(seed_, stream_index)); }

  std::uint64_t next_u64() {
    state_ += kGolden;
    return mix64(state_);
  }

  /// Uniform double in [0, 1), 53 usable bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Unbiased-to-2^-64 integer in [0, n).
  std::uint64_t uniform_below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  /// Standard normal via Box-Muller; always consumes exactly two draws so
  /// stream positions stay aligned across calls.
  double normal() {
    const double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
    const double u2 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;        // [0, 1)
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  Eigen::VectorXd normal_vector(Eigen::Index n) {
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = normal();
    return v;
  }

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
};

}  // namespace nlfb
