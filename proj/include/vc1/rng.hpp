#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace vc1 {

// Identifier recorded in Monte-Carlo reports. Draws come from the standard
// mt19937_64 stream; bounds are applied by rejection, never by bare modulo,
// so bounded draws are exactly uniform and reproducible across platforms.
inline constexpr const char* kGeneratorId = "mt19937_64+rejection";

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform in [0, bound); bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (-bound) % bound;
    while (true) {
      const std::uint64_t x = gen_();
      if (x >= threshold) return x % bound;
    }
  }

  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i)
      std::swap(values[i - 1], values[below(i)]);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace vc1
