#pragma once

#include <array>
#include <cstdint>

namespace levylab {

/// One application of the Philox-4x64-10 block cipher: encrypts a 256-bit
/// counter under a 128-bit key and returns four 64-bit words.  Exposed
/// separately so known-answer tests can exercise the core directly.
std::array<std::uint64_t, 4> philox4x64(std::array<std::uint64_t, 4> counter,
                                        std::array<std::uint64_t, 2> key);

/// Counter-based random stream.
///
/// The generator is Philox-4x64-10 keyed by (seed, stream_id).  The 256-bit
/// counter is split into a running block counter (word 0) and three path
/// words (words 1..3) that address derived sub-streams, so
///
///   * equal (seed, stream_id) and path  ==> identical output sequences,
///   * distinct stream ids or paths      ==> statistically independent output,
///   * `derive(i)` is a pure function of the parent stream's identity; it
///     never consumes randomness, which makes parallel generation with one
///     sub-stream per work item reproduce the serial sequence draw for draw.
///
/// Copying an RngStream copies its position; the copies then evolve
/// independently.
class RngStream {
 public:
  RngStream() : RngStream(0, 0) {}
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  /// Independent sub-stream addressed by `index` (up to three levels deep).
  RngStream derive(std::uint64_t index) const;

  /// Next raw 64-bit word.
  std::uint64_t next_u64();

  /// Uniform on [0, 1) with 53-bit resolution: (word >> 11) * 2^-53.
  double next_uniform01();

  /// Uniform on the open interval (-pi/2, pi/2); redraws the endpoint.
  double next_angle();

  /// Standard exponential, strictly positive; redraws zero.
  double next_exponential();

  /// Standard normal via Box-Muller (consumes two uniforms per call).
  double next_gaussian();

  std::uint64_t seed() const noexcept { return key_[0]; }
  std::uint64_t stream_id() const noexcept { return key_[1]; }

 private:
  std::array<std::uint64_t, 2> key_;
  std::array<std::uint64_t, 3> path_{0, 0, 0};  // counter words 1..3
  int depth_ = 0;                               // how many path slots are used
  std::uint64_t block_ = 0;                     // counter word 0
  std::array<std::uint64_t, 4> buffer_{};
  int buffered_ = 0;  // unread words remaining in buffer_

  void refill();
};

}  // namespace levylab
