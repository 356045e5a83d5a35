#pragma once

#include <limits>
#include <span>
#include <string>
#include <vector>

#include "conegeom/errors.hpp"

namespace conegeom {

/// Open interval (lo, hi); either side may be infinite.
struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();

  bool contains_strict(double x) const { return x > lo && x < hi; }
};

/// A coordinate chart: named coordinates, a closed sampling box per
/// coordinate, and optional open-interval domain constraints (e.g. the cone
/// coordinate restricted to t > 0). Sample points are drawn from the box and
/// must satisfy every constraint strictly.
class ChartDomain {
 public:
  ChartDomain() = default;

  ChartDomain(std::vector<std::string> coords, std::vector<Interval> box,
              std::vector<Interval> constraints = {})
      : coords_(std::move(coords)),
        box_(std::move(box)),
        constraints_(std::move(constraints)) {
    if (coords_.empty()) throw SpecError("chart needs at least one coordinate");
    if (box_.size() != coords_.size())
      throw SpecError("chart box size does not match coordinate count");
    if (constraints_.empty()) constraints_.resize(coords_.size());
    if (constraints_.size() != coords_.size())
      throw SpecError("chart constraint count does not match coordinate count");
    for (std::size_t i = 0; i < coords_.size(); ++i)
      for (std::size_t j = i + 1; j < coords_.size(); ++j)
        if (coords_[i] == coords_[j])
          throw SpecError("duplicate coordinate name '" + coords_[i] + "'");
  }

  int dim() const { return static_cast<int>(coords_.size()); }
  const std::vector<std::string>& coords() const { return coords_; }
  const std::string& coord_name(int i) const { return coords_[i]; }
  const Interval& box(int i) const { return box_[i]; }
  const Interval& constraint(int i) const { return constraints_[i]; }

  /// Index of a coordinate name, or -1 when absent.
  int index_of(const std::string& name) const {
    for (std::size_t i = 0; i < coords_.size(); ++i)
      if (coords_[i] == name) return static_cast<int>(i);
    return -1;
  }

  /// True when p satisfies every domain constraint strictly.
  bool contains(std::span<const double> p) const {
    if (static_cast<int>(p.size()) != dim()) return false;
    for (int i = 0; i < dim(); ++i)
      if (!constraints_[i].contains_strict(p[i])) return false;
    return true;
  }

  /// Chart for the product of this chart with a cone coordinate appended
  /// last, constrained to t > 0 and sampled on t in [t_lo, t_hi].
  ChartDomain with_cone_coordinate(const std::string& t_name = "t",
                                   double t_lo = 0.5, double t_hi = 2.0) const {
    auto coords = coords_;
    coords.push_back(t_name);
    auto box = box_;
    box.push_back({t_lo, t_hi});
    auto constraints = constraints_;
    constraints.push_back({0.0, std::numeric_limits<double>::infinity()});
    return ChartDomain(std::move(coords), std::move(box),
                       std::move(constraints));
  }

  bool operator==(const ChartDomain& other) const {
    return coords_ == other.coords_;
  }

 private:
  std::vector<std::string> coords_;
  std::vector<Interval> box_;
  std::vector<Interval> constraints_;
};

}  // namespace conegeom
