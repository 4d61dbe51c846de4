#pragma once

#include <cmath>
#include <cstdint>

namespace kolab {

// splitmix64 finalizer; full-period mixer of the 64-bit counter space
inline uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Counter-based stream: output n is mix64(key + n*phi), so any draw is pure
// arithmetic in (seed, stream, n). One stream per Monte Carlo path gives
// results that cannot depend on scheduling or worker count.
class CounterRng {
 public:
  CounterRng(uint64_t seed, uint64_t stream)
      : key_(mix64(seed + 0x9e3779b97f4a7c15ULL * mix64(stream + 1))) {}

  uint64_t next_u64() { return mix64(key_ + (++n_) * 0x9e3779b97f4a7c15ULL); }

  // uniform in [0,1)
  double next_unit() { return double(next_u64() >> 11) * 0x1.0p-53; }

  // uniform in (0,1), never exactly 0 or 1; safe under log()
  double next_open() { return (double(next_u64() >> 11) + 0.5) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * next_unit(); }

  // Box-Muller; the spare keeps consumption at one pair of u64 per two normals
  double next_gauss() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u = next_open();
    double v = next_unit();
    double r = std::sqrt(-2.0 * std::log(u));
    double a = 6.283185307179586476925286766559 * v;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

 private:
  uint64_t key_;
  uint64_t n_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace kolab
