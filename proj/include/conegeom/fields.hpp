#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "conegeom/chart.hpp"
#include "conegeom/expr.hpp"

namespace conegeom {

/// Symmetric rank-2 tensor field with expression components; only the upper
/// triangle is stored, so symmetry holds by construction.
class MetricField {
 public:
  enum class Definiteness { kPositiveDefinite, kPositiveSemidefinite };

  MetricField() = default;

  /// upper holds the row-major upper triangle including the diagonal:
  /// (0,0), (0,1), ..., (0,d-1), (1,1), ...
  static MetricField from_upper(ChartDomain chart, std::vector<ScalarExpr> upper,
                                Definiteness claim = Definiteness::kPositiveDefinite);

  static MetricField diagonal(ChartDomain chart, std::vector<ScalarExpr> diag,
                              Definiteness claim = Definiteness::kPositiveDefinite);

  /// Identity metric (Euclidean in these coordinates).
  static MetricField euclidean(ChartDomain chart);

  const ChartDomain& chart() const { return chart_; }
  int dim() const { return chart_.dim(); }
  Definiteness claim() const { return claim_; }

  const ScalarExpr& comp(int i, int j) const {
    return upper_[upper_index(i, j)];
  }

 private:
  std::size_t upper_index(int i, int j) const {
    if (i > j) std::swap(i, j);
    const int d = dim();
    return static_cast<std::size_t>(i) * d - static_cast<std::size_t>(i) * (i - 1) / 2 +
           (j - i);
  }

  ChartDomain chart_;
  std::vector<ScalarExpr> upper_;
  Definiteness claim_ = Definiteness::kPositiveDefinite;
};

/// Vector field in coordinate components.
struct VectorField {
  ChartDomain chart;
  std::vector<ScalarExpr> comp;

  VectorField() = default;
  VectorField(ChartDomain c, std::vector<ScalarExpr> comps);
};

/// One-form in coordinate components.
struct OneFormField {
  ChartDomain chart;
  std::vector<ScalarExpr> comp;

  OneFormField() = default;
  OneFormField(ChartDomain c, std::vector<ScalarExpr> comps);
};

/// Christoffel coefficients at a point, indexed Gamma^k_{ij}.
struct Christoffels {
  int dim = 0;
  std::vector<double> gamma;  // (k*d + i)*d + j

  double at(int k, int i, int j) const {
    return gamma[(static_cast<std::size_t>(k) * dim + i) * dim + j];
  }
  double& at(int k, int i, int j) {
    return gamma[(static_cast<std::size_t>(k) * dim + i) * dim + j];
  }
};

/// Christoffels together with their first partials d_a Gamma^k_{ij}.
struct ChristoffelDerivs {
  Christoffels gamma;
  std::vector<double> dgamma;  // ((a*d + k)*d + i)*d + j

  double d(int a, int k, int i, int j) const {
    const int n = gamma.dim;
    return dgamma[((static_cast<std::size_t>(a) * n + k) * n + i) * n + j];
  }
  double& d(int a, int k, int i, int j) {
    const int n = gamma.dim;
    return dgamma[((static_cast<std::size_t>(a) * n + k) * n + i) * n + j];
  }
};

/// Affine connection on a chart: either the Levi-Civita connection of a
/// metric (coefficients derived from metric jets) or explicitly declared
/// Christoffel expressions (e.g. a flat connection written in a curvilinear
/// chart).
class Connection {
 public:
  enum class Kind { kLeviCivita, kExplicit };

  Connection() = default;

  static Connection levi_civita(MetricField g, double cond_bound = 1e12);
  static Connection explicit_gamma(ChartDomain chart,
                                   std::vector<ScalarExpr> gamma /* (k*d+i)*d+j */);
  static Connection cartesian_flat(const ChartDomain& chart);

  Kind kind() const { return kind_; }
  const ChartDomain& chart() const { return chart_; }
  int dim() const { return chart_.dim(); }
  const MetricField& metric() const { return metric_; }
  double cond_bound() const { return cond_bound_; }
  const ScalarExpr& gamma_expr(int k, int i, int j) const {
    return gamma_[(static_cast<std::size_t>(k) * dim() + i) * dim() + j];
  }

  Christoffels christoffels_at(std::span<const double> p) const;

  /// Coefficients plus their first partial derivatives (curvature needs
  /// them). Levi-Civita requires order-2 metric jets, explicit connections
  /// order-1 jets of the declared expressions.
  ChristoffelDerivs christoffel_derivs_at(std::span<const double> p) const;

 private:
  Kind kind_ = Kind::kExplicit;
  ChartDomain chart_;
  MetricField metric_;              // kLeviCivita
  std::vector<ScalarExpr> gamma_;   // kExplicit
  double cond_bound_ = 1e12;
};

}  // namespace conegeom
