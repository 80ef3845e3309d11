#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>
#include <vector>

namespace puffnet {

// Deterministic counter-based generator (splitmix64 finalizer). Child streams
// derived with split() depend only on (seed, path), never on draw order, so
// parameter initialization is reproducible regardless of construction order
// and data sampling can be replayed from any step index.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(mix(seed + kSalt)) {}

  Rng split(std::string_view label) const {
    return Rng(raw{}, mix(state_ ^ fnv1a(label)));
  }
  Rng split(std::uint64_t index) const {
    return Rng(raw{}, mix(state_ + (index + 1) * 0xD1B54A32D192ED03ull));
  }

  std::uint64_t next_u64() { return mix(state_ + (++counter_) * kGolden); }

  // [0, 1)
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  float uniform(float lo, float hi) {
    return lo + static_cast<float>(next_double()) * (hi - lo);
  }

  // Box-Muller; one draw consumes two uniforms.
  float normal(float mean, float stddev) {
    double u1 = next_double();
    double u2 = next_double();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    double r = std::sqrt(-2.0 * std::log(u1));
    return mean + stddev * static_cast<float>(r * std::cos(6.283185307179586 * u2));
  }

  // inclusive bounds
  int uniform_int(int lo, int hi) {
    if (hi <= lo) return lo;
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next_u64() % span);
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform_int(0, static_cast<int>(i - 1)));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  struct raw {};
  Rng(raw, std::uint64_t state) : state_(state) {}

  static constexpr std::uint64_t kSalt = 0x9E3779B97F4A7C15ull;
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
  }

  static std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (char c : s) {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001B3ull;
    }
    return h;
  }

  std::uint64_t state_ = 0;
  std::uint64_t counter_ = 0;
};

}  // namespace puffnet
