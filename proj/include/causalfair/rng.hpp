#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace causalfair {

namespace detail {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// splitmix64 finalizer
inline constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

}  // namespace detail

// Derive an independent sub-seed from a master seed (arm seeds, reservoirs, ...).
inline constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t salt) noexcept {
  return detail::mix64(master + detail::kGolden * (salt + 1));
}

// Counter-based noise stream: the state is a hash of (seed, stream, counter),
// so any (node, row) cell can be generated independently of evaluation order
// or thread scheduling. Identical keys always give identical draws.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) noexcept {
    std::uint64_t s = seed;
    s = detail::mix64(s + detail::kGolden + stream);
    s = detail::mix64(s + detail::kGolden + counter);
    state_ = s;
  }

  std::uint64_t next_u64() noexcept {
    state_ += detail::kGolden;
    return detail::mix64(state_);
  }

  // uniform in [0, 1)
  double next_uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // standard normal via Box-Muller; consumes two words per draw
  double next_normal() noexcept {
    const double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
    const double u2 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;        // [0, 1)
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::uint64_t state_;
};

}  // namespace causalfair
