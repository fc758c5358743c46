#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace spinbath {

/// Philox-4x32-10 counter block cipher. Stateless: the caller owns the
/// (key, counter) coordinates, so any draw is addressable and reproducible
/// independent of scheduling or worker count.
struct Philox {
  static std::array<uint32_t, 4> block(uint64_t key, uint64_t stream, uint64_t counter) {
    uint32_t k0 = static_cast<uint32_t>(key);
    uint32_t k1 = static_cast<uint32_t>(key >> 32);
    std::array<uint32_t, 4> c = {
        static_cast<uint32_t>(counter), static_cast<uint32_t>(counter >> 32),
        static_cast<uint32_t>(stream), static_cast<uint32_t>(stream >> 32)};
    for (int round = 0; round < 10; ++round) {
      const uint64_t p0 = 0xD2511F53ull * c[0];
      const uint64_t p1 = 0xCD9E8D57ull * c[2];
      c = {static_cast<uint32_t>(p1 >> 32) ^ c[1] ^ k0, static_cast<uint32_t>(p1),
           static_cast<uint32_t>(p0 >> 32) ^ c[3] ^ k1, static_cast<uint32_t>(p0)};
      k0 += 0x9E3779B9u;
      k1 += 0xBB67AE85u;
    }
    return c;
  }
};

/// Stream of uniforms/gaussians addressed by (seed, stream). Draw order inside
/// a stream is sequential; distinct streams never collide.
class SubstreamRng {
 public:
  SubstreamRng(uint64_t seed, uint64_t stream) : seed_(seed), stream_(stream) {}

  double uniform() {  // [0, 1)
    const uint32_t a = next_u32();
    const uint32_t b = next_u32();
    const uint64_t mantissa = (static_cast<uint64_t>(a >> 5) << 26) | (b >> 6);
    return static_cast<double>(mantissa) * 0x1.0p-53;
  }

  double gaussian() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double s = 6.283185307179586476925286766559 * u2;
    cached_ = r * std::sin(s);
    have_cached_ = true;
    return r * std::cos(s);
  }

  /// Gaussian(mean, sigma) rejected until >= 0. sigma == 0 degenerates to
  /// max(mean, 0).
  double truncated_gaussian(double mean, double sigma) {
    if (sigma <= 0.0) return mean > 0.0 ? mean : 0.0;
    for (;;) {
      const double x = mean + sigma * gaussian();
      if (x >= 0.0) return x;
    }
  }

  uint64_t next_u64() {
    const uint64_t hi = next_u32();
    return (hi << 32) | next_u32();
  }

 private:
  uint32_t next_u32() {
    if (avail_ == 0) {
      buf_ = Philox::block(seed_, stream_, counter_++);
      avail_ = 4;
    }
    return buf_[4 - avail_--];
  }

  uint64_t seed_;
  uint64_t stream_;
  uint64_t counter_ = 0;
  std::array<uint32_t, 4> buf_{};
  int avail_ = 0;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

}  // namespace spinbath
