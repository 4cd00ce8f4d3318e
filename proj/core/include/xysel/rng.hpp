#ifndef XYSEL_RNG_HPP
#define XYSEL_RNG_HPP

#include <cstdint>
#include <random>

namespace xysel {

/// mt19937_64 with hand-rolled range mapping. The engine's output stream
/// is pinned by the standard, while distribution objects are not, so all
/// derived values stay reproducible across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [lo, hi], inclusive. Modulo bias is irrelevant at the
  /// ranges used here.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    return lo + next() % (hi - lo + 1);
  }

  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Uniform in [0, 1).
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace xysel

#endif  // XYSEL_RNG_HPP
