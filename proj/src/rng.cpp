#include "levylab/rng.hpp"

#include <cassert>
#include <cmath>
#include <numbers>

namespace levylab {

namespace {

// Philox-4x64 round constants (multipliers and Weyl key increments).
constexpr std::uint64_t kMul0 = 0xD2E7470EE14C6C93ULL;
constexpr std::uint64_t kMul1 = 0xCA5A826395121157ULL;
constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

inline std::uint64_t mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi) {
  const unsigned __int128 prod =
      static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b);
  hi = static_cast<std::uint64_t>(prod >> 64);
  return static_cast<std::uint64_t>(prod);
}

inline void philox_round(std::array<std::uint64_t, 4>& x,
                         const std::array<std::uint64_t, 2>& key) {
  std::uint64_t hi0, hi1;
  const std::uint64_t lo0 = mulhilo(kMul0, x[0], hi0);
  const std::uint64_t lo1 = mulhilo(kMul1, x[2], hi1);
  x = {hi1 ^ x[1] ^ key[0], lo1, hi0 ^ x[3] ^ key[1], lo0};
}

}  // namespace

std::array<std::uint64_t, 4> philox4x64(std::array<std::uint64_t, 4> counter,
                                        std::array<std::uint64_t, 2> key) {
  for (int round = 0; round < 10; ++round) {
    philox_round(counter, key);
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  return counter;
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : key_{seed, stream_id} {}

RngStream RngStream::derive(std::uint64_t index) const {
  assert(depth_ < 3 && "sub-stream nesting supports three levels");
  RngStream child = *this;
  // index+1 keeps derived streams distinct from the parent's own path (whose
  // unused slots are zero); the child starts at block 0 with an empty buffer.
  child.path_[child.depth_++] = index + 1;
  child.block_ = 0;
  child.buffered_ = 0;
  return child;
}

void RngStream::refill() {
  buffer_ = philox4x64({block_, path_[0], path_[1], path_[2]}, key_);
  ++block_;
  buffered_ = 4;
}

std::uint64_t RngStream::next_u64() {
  if (buffered_ == 0) refill();
  return buffer_[4 - buffered_--];
}

double RngStream::next_uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::next_angle() {
  double u = next_uniform01();
  while (u == 0.0) u = next_uniform01();  // exclude the -pi/2 endpoint
  return std::numbers::pi * (u - 0.5);
}

double RngStream::next_exponential() {
  double u = next_uniform01();
  while (u == 0.0) u = next_uniform01();  // -log(1-u) would be exactly 0
  return -std::log1p(-u);
}

double RngStream::next_gaussian() {
  double u1 = next_uniform01();
  while (u1 == 0.0) u1 = next_uniform01();
  const double u2 = next_uniform01();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace levylab
