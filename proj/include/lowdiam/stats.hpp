#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace lowdiam {

inline constexpr double kWilsonZ = 1.96;

struct WilsonInterval {
  double estimate = 0.0;
  double lower = 0.0;
  double upper = 0.0;
};

WilsonInterval wilson_interval(double observed_freq, std::uint64_t trials, double z = kWilsonZ);

struct BoundVerdict {
  bool pass = false;
  double upper = 0.0;   // Wilson upper limit
  double bound = 0.0;
  double margin = 0.0;  // bound - upper; negative on failure
};

// PASS iff the Wilson 95% upper limit of the frequency is at most `bound`.
BoundVerdict compare_bound(double observed_freq, std::uint64_t trials, double bound);

struct MeanEstimate {
  std::uint64_t count = 0;
  double mean = 0.0;
  double std_error = 0.0;
};

MeanEstimate estimate_mean(std::span<const double> samples);

// Nearest-rank percentile, q in (0, 1].
// PASS iff mean + z * std_error <= bound.
BoundVerdict compare_mean_bound(const MeanEstimate& m, double bound, double z = kWilsonZ);

double percentile(std::vector<double> samples, double q);

}  // namespace lowdiam
