#pragma once

#include <cstdint>
#include <vector>

#include "conegeom/chart.hpp"

namespace conegeom {

/// Shared configuration for pointwise checks.
struct CheckConfig {
  int samples = 64;
  std::uint64_t seed = 42;
  double tol = 1e-8;        // tolerance for jet-based residuals
  double fd_tol = 1e-4;     // tolerance for finite-difference oracles
  double cond_bound = 1e12; // inverse_metric guard
};

/// Deterministic quasi-random sample points in the chart's box: a Halton
/// sequence offset by the seed, filtered to satisfy the chart's domain
/// constraints strictly. Identical inputs yield identical points on every
/// platform.
std::vector<std::vector<double>> sample_points(const ChartDomain& chart, int n,
                                               std::uint64_t seed);

/// splitmix64: tiny deterministic generator for test data (coefficients of
/// random polynomials and the like).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) {
    const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
  }

 private:
  std::uint64_t state_;
};

}  // namespace conegeom
