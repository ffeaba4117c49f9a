#pragma once

#include <cstdint>

namespace bart {

/// SplitMix64 finalizer; the workhorse behind stream splitting.
std::uint64_t mix64(std::uint64_t z);

/// Order-sensitive combine for deriving substream seeds.
std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b);

/// Counter-style generator: fixed 64-bit stride over a mixed state, so a
/// stream's draws depend only on its seed and draw index.  Substreams formed
/// by hashing (seed, salt, indices) keep parallel fan-out bit-reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Uniform on (0, 1]; safe to pass to log().
  double uniform_pos();
  /// Uniform on (lo, hi).
  double uniform_range(double lo, double hi);
  /// Standard normal via Box-Muller; consumes two uniforms per call.
  double normal();
  bool bernoulli(double prob);

 private:
  std::uint64_t state_;
};

namespace salt {
inline constexpr std::uint64_t kParamDraw = 0x70617261;
inline constexpr std::uint64_t kTrial = 0x74726961;
inline constexpr std::uint64_t kChain = 0x63686169;
inline constexpr std::uint64_t kSynth = 0x73796e74;
inline constexpr std::uint64_t kPermute = 0x7065726d;
inline constexpr std::uint64_t kReplicate = 0x7265706c;
inline constexpr std::uint64_t kProposal = 0x70726f70;
inline constexpr std::uint64_t kSignFlip = 0x666c6970;
}  // namespace salt

/// Stream addressed by (seed, salt, a, b).
Rng substream(std::uint64_t seed, std::uint64_t salt, std::uint64_t a = 0, std::uint64_t b = 0);

/// Indexed access into a trial's decision/pop draws without carrying
/// generator state: draw i of stream (seed, salt, a, b) is a pure function
/// of its address.  This is what couples the two design modes via common
/// random numbers.
struct StreamKey {
  std::uint64_t seed = 0;
  std::uint64_t salt = 0;
  std::uint64_t a = 0;
  std::uint64_t b = 0;

  double uniform_at(std::uint64_t draw_index) const;
};

}  // namespace bart
