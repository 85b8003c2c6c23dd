#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>

namespace cardzkp {

/// Seedable deterministic randomness source. Shift draws are unbiased via
/// rejection sampling over the raw 64-bit stream; the same seed yields the
/// same run bit for bit on every platform (mt19937_64 output is pinned by
/// the standard, and no library distribution is used).
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t raw() { return engine_(); }

  /// Uniform draw from {0, ..., bound-1}.
  int uniform_shift(int bound) {
    if (bound < 1) throw std::invalid_argument("uniform_shift bound must be >= 1");
    const std::uint64_t b = static_cast<std::uint64_t>(bound);
    const std::uint64_t usable = (std::numeric_limits<std::uint64_t>::max() / b) * b;
    std::uint64_t r = raw();
    while (r >= usable) r = raw();
    return static_cast<int>(r % b);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cardzkp
