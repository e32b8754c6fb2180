#include "lowdiam/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lowdiam {

WilsonInterval wilson_interval(double observed_freq, std::uint64_t trials, double z) {
  if (trials == 0) throw std::invalid_argument("wilson_interval: zero trials");
  if (!(observed_freq >= 0.0 && observed_freq <= 1.0)) throw std::invalid_argument("wilson_interval: frequency outside [0, 1]");
  const double n = static_cast<double>(trials);
  const double p = observed_freq;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double centre = (p + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  return {p, std::clamp(centre - half, 0.0, p), std::clamp(centre + half, p, 1.0)};
}

BoundVerdict compare_bound(double observed_freq, std::uint64_t trials, double bound) {
  const WilsonInterval ci = wilson_interval(observed_freq, trials);
  BoundVerdict v;
  v.upper = ci.upper;
  v.bound = bound;
  v.margin = bound - ci.upper;
  v.pass = ci.upper <= bound;
  return v;
}

MeanEstimate estimate_mean(std::span<const double> samples) {
  MeanEstimate out;
  out.count = samples.size();
  if (samples.empty()) return out;
  double sum = 0.0;
  for (double x : samples) sum += x;
  out.mean = sum / static_cast<double>(samples.size());
  if (samples.size() > 1) {
    double ss = 0.0;
    for (double x : samples) ss += (x - out.mean) * (x - out.mean);
    const double var = ss / static_cast<double>(samples.size() - 1);
    out.std_error = std::sqrt(var / static_cast<double>(samples.size()));
  }
  return out;
}

BoundVerdict compare_mean_bound(const MeanEstimate& m, double bound, double z) {
  if (m.count == 0) throw std::invalid_argument("compare_mean_bound: no samples");
  BoundVerdict v;
  v.upper = m.mean + z * m.std_error;
  v.bound = bound;
  v.margin = bound - v.upper;
  v.pass = v.upper <= bound;
  return v;
}

double percentile(std::vector<double> samples, double q) {
  if (samples.empty()) throw std::invalid_argument("percentile: no samples");
  if (!(q > 0.0) || q > 1.0) throw std::invalid_argument("percentile: q must lie in (0, 1]");
  std::sort(samples.begin(), samples.end());
  const auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(samples.size())));
  return samples[std::max<std::size_t>(rank, 1) - 1];
}

}  // namespace lowdiam
