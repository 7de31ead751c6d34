#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace rowcov {

// Counter-based stream built on Philox4x32-10. A stream is fully determined
// by (seed, stream_id), so Monte Carlo replicate s can draw from
// RngStream(seed, s) on any worker and get the same values regardless of
// scheduling. Normal variates come from Box-Muller rather than
// std::normal_distribution to keep streams bitwise stable across standard
// library implementations.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id)
      : key_{static_cast<std::uint32_t>(seed),
             static_cast<std::uint32_t>(seed >> 32)},
        ctr_{0, 0, static_cast<std::uint32_t>(stream_id),
             static_cast<std::uint32_t>(stream_id >> 32)} {}

  using result_type = std::uint64_t;
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()() { return next_u64(); }

  std::uint64_t next_u64() {
    const std::uint64_t lo = next_u32();
    const std::uint64_t hi = next_u32();
    return (hi << 32) | lo;
  }

  // Uniform on (0, 1]; never returns 0, so log() is safe.
  double uniform() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  // Uniform on [0, 1).
  double uniform_co() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    const double u1 = uniform();
    const double u2 = uniform_co();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    cached_ = radius * std::sin(angle);
    have_cached_ = true;
    return radius * std::cos(angle);
  }

  // chi^2_k via sum of squared normals for integer part plus gamma for the
  // fractional part is overkill here; dof is small and user-provided, so a
  // simple Marsaglia-Tsang gamma(dof/2, 2) suffices.
  double chi_squared(double dof) { return 2.0 * gamma_variate(dof / 2.0); }

 private:
  std::uint32_t next_u32() {
    if (idx_ == 4) {
      block_ = philox10(ctr_, key_);
      // 2^64 blocks per stream; the upper counter words hold stream_id.
      if (++ctr_[0] == 0) ++ctr_[1];
      idx_ = 0;
    }
    return block_[idx_++];
  }

  static std::array<std::uint32_t, 4> philox10(
      std::array<std::uint32_t, 4> ctr, std::array<std::uint32_t, 2> key) {
    constexpr std::uint32_t kM0 = 0xD2511F53u, kM1 = 0xCD9E8D57u;
    constexpr std::uint32_t kW0 = 0x9E3779B9u, kW1 = 0xBB67AE85u;
    for (int round = 0; round < 10; ++round) {
      const std::uint64_t p0 = static_cast<std::uint64_t>(kM0) * ctr[0];
      const std::uint64_t p1 = static_cast<std::uint64_t>(kM1) * ctr[2];
      ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
             static_cast<std::uint32_t>(p1),
             static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
             static_cast<std::uint32_t>(p0)};
      key[0] += kW0;
      key[1] += kW1;
    }
    return ctr;
  }

  // Marsaglia-Tsang for shape >= 1, boosted for shape < 1.
  double gamma_variate(double shape) {
    if (shape < 1.0) {
      const double u = uniform();
      return gamma_variate(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x, v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform();
      if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) {
        return d * v;
      }
    }
  }

  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 4> ctr_;
  std::array<std::uint32_t, 4> block_{};
  int idx_ = 4;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

}  // namespace rowcov
