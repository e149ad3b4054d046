#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace posemoe {

/// Deterministic random source for the whole project.
///
/// Algorithm: std::mt19937_64 (fully specified by the C++ standard, so the
/// raw stream is identical on every platform) with uniform doubles taken
/// from the top 53 bits and normal draws via Box-Muller. Sub-streams are
/// derived from the root seed and a name (FNV-1a hash mixed through
/// splitmix64), so every consumer of randomness — init, Gaussian tokens,
/// data generation, shuffling, noise sweeps — replays exactly from the
/// master seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Standard normal via Box-Muller; consumes exactly two uniforms per draw.
  double normal() {
    // u1 in (0, 1] so the log never sees zero.
    double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  /// Laplace(0, b) via inverse CDF.
  double laplace(double b) {
    double u = uniform01() - 0.5;
    double s = (u < 0.0) ? -1.0 : 1.0;
    double a = u < 0.0 ? -u : u;
    return -b * s * std::log1p(-2.0 * a);
  }

  /// Independent named sub-stream rooted at this rng's seed.
  Rng derive(std::string_view name) const {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a 64-bit offset basis
    for (char c : name) {
      h ^= static_cast<std::uint64_t>(static_cast<unsigned char>(c));
      h *= 1099511628211ull;
    }
    return Rng(splitmix64(seed_ ^ h));
  }

  Rng derive(std::string_view name, std::uint64_t index) const {
    Rng base = derive(name);
    return Rng(splitmix64(base.seed_ + 0x9e3779b97f4a7c15ull * (index + 1)));
  }

 private:
  static std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace posemoe
