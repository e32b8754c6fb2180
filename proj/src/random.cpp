#include "lowdiam/random.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace lowdiam {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t mix64(std::uint64_t x) noexcept {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t key) noexcept
    : seed_(seed), key_(key), state_(mix64(mix64(seed + kGolden) ^ (key * 0xD1B54A32D192ED03ULL + 1))) {}

RandomStream RandomStream::derive(std::uint64_t sub_key) const noexcept {
  return RandomStream(seed_, mix64(key_ ^ mix64(sub_key + 0x632BE59BD9B4E019ULL)));
}

std::uint64_t RandomStream::next_u64() noexcept {
  ++counter_;
  return mix64(state_ + counter_ * kGolden);
}

double RandomStream::next_unit() noexcept {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double exponential_quantile(double u, double rate) {
  if (!(rate > 0.0) || !std::isfinite(rate)) throw std::invalid_argument("exponential rate must be positive");
  if (u < 0.0 || u >= 1.0) throw std::invalid_argument("exponential quantile needs u in [0, 1)");
  return -std::log1p(-u) / rate;
}

double sample_exponential(RandomStream& stream, double rate) {
  return exponential_quantile(stream.next_unit(), rate);
}

double sample_uniform(RandomStream& stream, double hi) {
  if (!(hi >= 0.0)) throw std::invalid_argument("uniform upper bound must be non-negative");
  return stream.next_unit() * hi;
}

double min_gap_probability(std::span<const double> values, double rate, double gap, std::uint64_t trials,
                           RandomStream& stream) {
  if (values.size() < 2) throw std::invalid_argument("min_gap_probability needs at least two values");
  if (!(rate > 0.0)) throw std::invalid_argument("exponential rate must be positive");
  if (gap < 0.0) throw std::invalid_argument("gap must be non-negative");
  if (trials == 0) return 0.0;
  std::uint64_t hits = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    double first = std::numeric_limits<double>::infinity();
    double second = first;
    for (double d : values) {
      const double x = d - sample_exponential(stream, rate);
      if (x < first) {
        second = first;
        first = x;
      } else if (x < second) {
        second = x;
      }
    }
    if (second - first < gap) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(trials);
}

}  // namespace lowdiam
