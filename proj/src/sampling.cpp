#include "conegeom/sampling.hpp"

namespace conegeom {

namespace {

constexpr int kHaltonBases[] = {2, 3, 5, 7, 11, 13, 17, 19};

double halton(std::uint64_t index, int base) {
  double f = 1.0, r = 0.0;
  while (index > 0) {
    f /= base;
    r += f * static_cast<double>(index % base);
    index /= base;
  }
  return r;
}

}  // namespace

std::vector<std::vector<double>> sample_points(const ChartDomain& chart, int n,
                                               std::uint64_t seed) {
  const int d = chart.dim();
  if (d > static_cast<int>(std::size(kHaltonBases)))
    throw SpecError("sampling supports at most 8 coordinates");
  std::vector<std::vector<double>> points;
  points.reserve(n);
  std::uint64_t index = 1 + seed * 7919;
  int guard = 0;
  while (static_cast<int>(points.size()) < n) {
    std::vector<double> p(d);
    for (int i = 0; i < d; ++i) {
      const double u = halton(index, kHaltonBases[i]);
      const auto& b = chart.box(i);
      p[i] = b.lo + u * (b.hi - b.lo);
    }
    ++index;
    if (chart.contains(p)) {
      points.push_back(std::move(p));
      guard = 0;
    } else if (++guard > 10000) {
      throw SpecError("chart box lies outside the domain constraints");
    }
  }
  return points;
}

}  // namespace conegeom
