#include "bart/rng.hpp"

#include <cmath>
#include <numbers>

namespace bart {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
constexpr double kInv53 = 0x1.0p-53;
}  // namespace

std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b) {
  return mix64(a + kGolden + (b ^ (a >> 17)));
}

std::uint64_t Rng::next_u64() {
  state_ += kGolden;
  return mix64(state_);
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * kInv53;
}

double Rng::uniform_pos() {
  return static_cast<double>((next_u64() >> 11) + 1) * kInv53;
}

double Rng::uniform_range(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

double Rng::normal() {
  const double u1 = uniform_pos();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

bool Rng::bernoulli(double prob) {
  return uniform() < prob;
}

Rng substream(std::uint64_t seed, std::uint64_t salt, std::uint64_t a, std::uint64_t b) {
  return Rng(hash_combine(hash_combine(hash_combine(mix64(seed), salt), a), b));
}

double StreamKey::uniform_at(std::uint64_t draw_index) const {
  const std::uint64_t s =
      hash_combine(hash_combine(hash_combine(hash_combine(mix64(seed), salt), a), b), draw_index);
  return static_cast<double>(mix64(s + kGolden) >> 11) * kInv53;
}

}  // namespace bart
