#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace orthoplex {

/// mt19937_64 with hand-rolled conversions: the standard distributions are
/// not specified bit-for-bit, and reports must match across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on (0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double exponential();
  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

/// Per-sample seed from (name, index, master seed), independent of the order
/// in which samples are drawn.
std::uint64_t derive_seed(std::string_view name, std::uint64_t index, std::uint64_t master);

}  // namespace orthoplex
