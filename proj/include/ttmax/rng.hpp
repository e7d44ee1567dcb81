#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>
#include <random>

namespace ttmax {

/// splitmix64 finalizer; good avalanche, cheap, stable across platforms.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Collapse a tuple of words (base seed, trial index, stream tag, ...) into
/// one stream seed.  Every independent random stream in the project derives
/// its seed through this function, which is what makes parallel loops over
/// trials or grid cells reproducible regardless of scheduling.
inline std::uint64_t mix_seed(std::initializer_list<std::uint64_t> words) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (std::uint64_t w : words) h = splitmix64(h ^ w);
  return h;
}

/// mt19937_64 engine with hand-rolled output maps.  The standard
/// distributions are implementation-defined, which would make results differ
/// between standard libraries; these maps are pinned down bit for bit.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on the open interval (lo, hi).
  double uniform_open(double lo, double hi) {
    const double u = (static_cast<double>(engine_() >> 12) + 0.5) * 0x1.0p-52;
    return lo + (hi - lo) * u;
  }

  /// Standard normal via Box-Muller (no state carried between calls).
  double normal() {
    const double u1 = 1.0 - uniform01();  // (0, 1]
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  /// Fair sign, +1 or -1.
  double rademacher() { return (engine_() & 1ULL) ? 1.0 : -1.0; }

  std::uint64_t bits() { return engine_(); }

private:
  std::mt19937_64 engine_;
};

}  // namespace ttmax
