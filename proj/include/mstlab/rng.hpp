#pragma once

// Counter-based random numbers: Philox4x32-10 (Salmon et al., SC'11), a
// stateless map from (key, 128-bit counter) to 128 random bits that passes
// the BigCrush battery. Any draw can be recomputed from its coordinates alone.

#include <array>
#include <cstdint>

namespace mstlab {

using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

PhiloxCounter philox4x32(PhiloxCounter counter, PhiloxKey key);

/// Keyed by a 64-bit seed. Draws are addressed by (a, b, c, d) coordinates.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed);

  /// 128 bits for the coordinates.
  PhiloxCounter bits(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) const;

  /// Uniform on [0, 1) with 53 random bits (never 1).
  double uniform(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) const;

  /// Uniform for edge {i, j} of replicate `rep`, symmetric in i and j.
  double edge_uniform(std::uint32_t i, std::uint32_t j, std::uint64_t rep) const;

 private:
  PhiloxKey key_;
};

/// Sequential stream over one counter lane; for draws with no natural address.
class CounterStream {
 public:
  CounterStream(std::uint64_t seed, std::uint64_t stream);

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();

 private:
  CounterRng rng_;
  std::uint64_t stream_;
  std::uint64_t position_ = 0;
  PhiloxCounter block_{};
  int used_ = 4;  // 64-bit halves consumed from block_ (2 per block)
};

}  // namespace mstlab
