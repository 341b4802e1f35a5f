#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace turkcrypt {

/// Seed type for every generator in the library.
struct Seed {
  std::uint64_t value = 0;
};

/// Deterministic generator for key material. std::mt19937_64's output
/// sequence is fixed by the standard; bounded draws use rejection sampling
/// instead of std::uniform_int_distribution, whose algorithm is
/// implementation-defined.
class KeyRng {
 public:
  static constexpr std::string_view name = "mt19937_64";

  explicit KeyRng(Seed seed) : engine_(seed.value) {}

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
    std::uint64_t draw = engine_();
    while (draw >= limit) draw = engine_();
    return draw % bound;
  }

  /// Fisher-Yates with a descending index.
  template <typename Container>
  void shuffle(Container& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace turkcrypt
