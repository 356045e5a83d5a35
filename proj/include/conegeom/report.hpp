#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace conegeom {

/// Outcome of one pointwise check: the worst residual seen over the sample
/// set and where it happened. pass holds exactly when max_residual <= tolerance.
struct StructureReport {
  std::string name;
  bool pass = false;
  double max_residual = 0.0;
  std::vector<double> worst_point;
  int samples_used = 0;
  double tolerance = 0.0;

  nlohmann::json to_json() const;
};

/// Accumulates residuals over sample points.
class ResidualScan {
 public:
  void update(double residual, std::span<const double> point) {
    ++samples_;
    if (residual > max_residual_ || samples_ == 1) {
      max_residual_ = residual;
      worst_point_.assign(point.begin(), point.end());
    }
  }

  double max_residual() const { return max_residual_; }
  int samples() const { return samples_; }

  StructureReport report(std::string name, double tol) const {
    StructureReport r;
    r.name = std::move(name);
    r.max_residual = max_residual_;
    r.worst_point = worst_point_;
    r.samples_used = samples_;
    r.tolerance = tol;
    r.pass = max_residual_ <= tol;
    return r;
  }

 private:
  double max_residual_ = 0.0;
  std::vector<double> worst_point_;
  int samples_ = 0;
};

/// Per-structure verdicts for one manifold declaration, plus the derived
/// classification flags. Flags without enough declared data (e.g. radiant
/// with no connection) stay unset and serialize as "skipped".
struct ClassificationReport {
  std::vector<StructureReport> checks;
  // Fixed order: selfsimilar, conical_riemannian, radiant, hessian_cone,
  // conical_hessian, extensive_exists.
  std::vector<std::pair<std::string, std::optional<bool>>> flags;
  int samples = 0;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  std::string engine_version;

  const StructureReport* find_check(const std::string& name) const;
  std::optional<bool> flag(const std::string& name) const;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

}  // namespace conegeom
