#include "pairclust/random.hpp"

#include "int128.hpp"
#include "pairclust/error.hpp"

namespace pairclust {
namespace {

constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Rng::result_type Rng::operator()() {
  state_ += kGamma;
  return mix(state_);
}

std::uint64_t Rng::uniform(std::uint64_t bound) {
  if (bound == 0) throw Error("Rng::uniform requires a positive bound");
  // Lemire's multiply-shift with rejection.
  detail::uint128 product = static_cast<detail::uint128>((*this)()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      product = static_cast<detail::uint128>((*this)()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

double Rng::uniform_real() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return mix(mix(seed) ^ mix(stream * kGamma + 0x632be59bd9b4e019ULL));
}

}  // namespace pairclust
