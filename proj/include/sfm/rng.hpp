#pragma once

#include <cmath>
#include <cstdint>

namespace sfm {

// Philox 4x32-10 counter-based generator (Salmon et al., SC'11). Each stream
// is keyed by (seed, stream id), so chains draw reproducibly regardless of
// thread scheduling, and a stream can be reconstructed from its key alone.
class Philox {
 public:
  Philox(std::uint64_t seed, std::uint64_t stream)
      : key0_(static_cast<std::uint32_t>(seed)),
        key1_(static_cast<std::uint32_t>(seed >> 32)),
        ctr2_(static_cast<std::uint32_t>(stream)),
        ctr3_(static_cast<std::uint32_t>(stream >> 32)) {}

  std::uint32_t next_u32() {
    if (have_ == 0) {
      refill();
      have_ = 4;
    }
    return out_[4 - have_--];
  }

  std::uint64_t next_u64() {
    const std::uint64_t hi = next_u32();
    return (hi << 32) | next_u32();
  }

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller; keeps the paired variate for the next call.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  // Integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    // Rejection-free modulo is fine here: n is tiny relative to 2^64.
    return next_u64() % n;
  }

 private:
  void refill() {
    std::uint32_t c0 = ctr0_, c1 = ctr1_, c2 = ctr2_, c3 = ctr3_;
    std::uint32_t k0 = key0_, k1 = key1_;
    for (int round = 0; round < 10; ++round) {
      const std::uint64_t p0 = 0xD2511F53ULL * c0;
      const std::uint64_t p1 = 0xCD9E8D57ULL * c2;
      const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
      const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
      const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
      const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
      const std::uint32_t n0 = hi1 ^ c1 ^ k0;
      const std::uint32_t n1 = lo1;
      const std::uint32_t n2 = hi0 ^ c3 ^ k1;
      const std::uint32_t n3 = lo0;
      c0 = n0;
      c1 = n1;
      c2 = n2;
      c3 = n3;
      k0 += 0x9E3779B9U;
      k1 += 0xBB67AE85U;
    }
    out_[0] = c0;
    out_[1] = c1;
    out_[2] = c2;
    out_[3] = c3;
    if (++ctr0_ == 0) ++ctr1_;  // 64-bit block counter
  }

  std::uint32_t key0_, key1_;
  std::uint32_t ctr0_ = 0, ctr1_ = 0;  // block counter
  std::uint32_t ctr2_, ctr3_;          // stream id
  std::uint32_t out_[4] = {};
  int have_ = 0;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace sfm
