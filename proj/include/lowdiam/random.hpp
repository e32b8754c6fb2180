#pragma once

#include <cstdint>
#include <span>

namespace lowdiam {

// Counter-based stream: draw j of stream (seed, key) is a fixed function of
// (seed, key, j), so streams derived for trials, phases and iterations do not
// depend on the order in which other streams are consumed.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed = 0, std::uint64_t key = 0) noexcept;

  RandomStream derive(std::uint64_t sub_key) const noexcept;

  std::uint64_t next_u64() noexcept;
  // Uniform in [0, 1) with 53 random bits.
  double next_unit() noexcept;

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t key() const noexcept { return key_; }
  std::uint64_t counter() const noexcept { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t key_;
  std::uint64_t state_;
  std::uint64_t counter_ = 0;
};

std::uint64_t mix64(std::uint64_t x) noexcept;

// Inverse CDF of Exp(rate) at u in [0, 1).
double exponential_quantile(double u, double rate);

double sample_exponential(RandomStream& stream, double rate);
// Uniform in [0, hi].
double sample_uniform(RandomStream& stream, double hi);

// Fraction of `trials` experiments in which the two smallest values of
// values[i] - delta_i, delta_i ~ Exp(rate) iid, lie within `gap` of each other.
double min_gap_probability(std::span<const double> values, double rate, double gap, std::uint64_t trials,
                           RandomStream& stream);

}  // namespace lowdiam
