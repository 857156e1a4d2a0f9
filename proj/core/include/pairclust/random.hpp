#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <utility>

namespace pairclust {

/// SplitMix64: a counter-based generator whose output is a bijective mix of
/// an incrementing counter. Streams for parallel trials are obtained with
/// `derive_seed`, so every trial is reproducible from (seed, index) alone.
///
/// Bounded integers and reals are produced by our own routines rather than
/// the standard distributions, whose output is implementation-defined.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

  /// Uniform integer in [0, bound). `bound` must be positive.
  std::uint64_t uniform(std::uint64_t bound);
  /// Uniform double in [0, 1) with 53 random bits.
  double uniform_real();
  bool bernoulli(double p) { return uniform_real() < p; }

 private:
  std::uint64_t state_;
};

/// Seed of child stream `stream` of `seed`; distinct streams are decorrelated.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

template <typename T>
void shuffle(std::span<T> values, Rng& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.uniform(i));
    std::swap(values[i - 1], values[j]);
  }
}

}  // namespace pairclust
