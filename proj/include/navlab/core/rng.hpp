#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <random>
#include <string_view>

namespace navlab {

/// splitmix64 step; used to derive independent stream seeds from one root seed.
inline uint64_t splitmix64(uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministic seed mixing: mix_seed(root, a, b, ...) gives uncorrelated streams.
inline uint64_t mix_seed(uint64_t root) {
  uint64_t s = root;
  return splitmix64(s);
}

template <typename... Rest>
uint64_t mix_seed(uint64_t root, uint64_t next, Rest... rest) {
  uint64_t s = root ^ (0x9e3779b97f4a7c15ULL + (root << 6) + (root >> 2)) ^ next;
  return mix_seed(splitmix64(s), rest...);
}

inline uint64_t fnv1a(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// mt19937_64 with hand-rolled distributions so draws are identical across
/// standard library implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed = 0) : engine_(seed) {}

  uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform index in [0, n).
  size_t index(size_t n) {
    if (n == 0) return 0;
    size_t i = static_cast<size_t>(uniform() * static_cast<double>(n));
    return i < n ? i : n - 1;
  }

  /// Standard normal via Box-Muller (no cached spare; one value per call).
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTau * u2);
  }

  double normal(double mean, double std) { return mean + std * normal(); }

  Rng fork(uint64_t tag) { return Rng(mix_seed(engine_(), tag)); }

  friend std::ostream& operator<<(std::ostream& os, const Rng& r) { return os << r.engine_; }
  friend std::istream& operator>>(std::istream& is, Rng& r) { return is >> r.engine_; }

 private:
  static constexpr double kTau = 6.28318530717958647692;
  std::mt19937_64 engine_;
};

}  // namespace navlab
