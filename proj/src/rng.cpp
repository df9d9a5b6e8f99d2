#include "mstlab/rng.hpp"

#include <utility>

namespace mstlab {
namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
  const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(product >> 32);
  lo = static_cast<std::uint32_t>(product);
}

inline double to_unit(std::uint32_t hi, std::uint32_t lo) {
  const std::uint64_t bits = (static_cast<std::uint64_t>(hi) << 32) | lo;
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace

PhiloxCounter philox4x32(PhiloxCounter ctr, PhiloxKey key) {
  for (int round = 0; round < 10; ++round) {
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kMul0, ctr[0], hi0, lo0);
    mulhilo(kMul1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  return ctr;
}

CounterRng::CounterRng(std::uint64_t seed)
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)} {}

PhiloxCounter CounterRng::bits(std::uint32_t a, std::uint32_t b, std::uint32_t c,
                               std::uint32_t d) const {
  return philox4x32({a, b, c, d}, key_);
}

double CounterRng::uniform(std::uint32_t a, std::uint32_t b, std::uint32_t c,
                           std::uint32_t d) const {
  const PhiloxCounter out = bits(a, b, c, d);
  return to_unit(out[0], out[1]);
}

double CounterRng::edge_uniform(std::uint32_t i, std::uint32_t j, std::uint64_t rep) const {
  if (i > j) std::swap(i, j);
  return uniform(i, j, static_cast<std::uint32_t>(rep), static_cast<std::uint32_t>(rep >> 32));
}

CounterStream::CounterStream(std::uint64_t seed, std::uint64_t stream)
    : rng_(seed), stream_(stream) {}

double CounterStream::uniform() {
  if (used_ >= 2) {
    // The top bit of the last word separates streams from edge draws, whose
    // last word is the high half of a replicate index.
    block_ = rng_.bits(static_cast<std::uint32_t>(position_),
                       static_cast<std::uint32_t>(position_ >> 32),
                       static_cast<std::uint32_t>(stream_),
                       static_cast<std::uint32_t>(stream_ >> 32) | 0x80000000u);
    ++position_;
    used_ = 0;
  }
  const int half = used_++;
  return to_unit(block_[2 * half], block_[2 * half + 1]);
}

}  // namespace mstlab
