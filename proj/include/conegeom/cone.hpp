#pragma once

#include <string>
#include <vector>

#include "conegeom/fields.hpp"
#include "conegeom/report.hpp"
#include "conegeom/sampling.hpp"
#include "conegeom/tensor_ops.hpp"

namespace conegeom {

/// Placement of the positive function f in an assembled metric on the
/// product with the cone coordinate t.
enum class FPlacement {
  kOnDtSquared,  // g = t^2 g_M + t Sym(dt (x) alpha) + f dt^2
  kOnBase,       // g = t^2 f g_M + t Sym(dt (x) alpha) + dt^2
};

/// Ingredients of a dilation-equivariant metric on base x (t > 0): a base
/// metric, a base one-form and a positive base function. The assembled
/// metric is positive definite exactly when f exceeds the squared dual norm
/// of alpha pointwise (for either placement).
struct ConeMetricSpec {
  ChartDomain base;
  MetricField g_m;
  OneFormField alpha;
  ScalarExpr f;
  FPlacement placement = FPlacement::kOnDtSquared;
  std::string t_name = "t";
  double t_lo = 0.5, t_hi = 2.0;

  ChartDomain product_chart() const {
    return base.with_cone_coordinate(t_name, t_lo, t_hi);
  }

  /// t d/dt on the product chart.
  VectorField dilation_field() const;
};

/// Pure assembly of the block metric; no positivity sampling.
MetricField assemble_metric(const ConeMetricSpec& spec);

/// Positivity of the assembled metric, established by two independent
/// routes that must agree on sound input: (a) the pointwise criterion
/// f > g_M^{-1}(alpha, alpha) on base samples, (b) smallest-eigenvalue
/// sampling of the assembled blocks on product samples.
struct PositivityReport {
  StructureReport criterion;   // route (a)
  StructureReport eigenvalue;  // route (b)

  bool pass() const { return criterion.pass && eigenvalue.pass; }
  bool routes_agree() const { return criterion.pass == eigenvalue.pass; }
};

PositivityReport validate_positivity(const ConeMetricSpec& spec,
                                     const CheckConfig& config);

/// Assembles and validates; throws PreconditionError (with the offending
/// point) when the assembled metric fails positive definiteness.
MetricField assemble_selfsimilar_metric(const ConeMetricSpec& spec,
                                        const CheckConfig& config);

/// Squared dual norm g_M^{ij} alpha_i alpha_j as a closed-form component
/// expression (adjugate inverse over the expression ring).
ScalarExpr dual_norm_squared(const MetricField& g_m, const OneFormField& alpha);

/// f = g_M^{ij} alpha_i alpha_j + margin: the least f (up to the margin)
/// making the assembled metric positive definite; the sup of (alpha(X))^2
/// over the g_M-unit sphere equals the squared dual norm.
ScalarExpr dual_norm_plus_margin(const MetricField& g_m,
                                 const OneFormField& alpha, double margin);

/// max |Lie_xi g - 2 g| over the samples.
StructureReport check_selfsimilar(const MetricField& g, const VectorField& xi,
                                  const std::vector<std::vector<double>>& samples,
                                  double tol);

/// The four equivalent conical conditions, each computed independently with
/// the Levi-Civita connection of g and theta = i_xi g:
///   (i)  D xi = Id, (ii) D theta = g, (iii) D theta symmetric,
///   (iv) d theta = 0.
/// On a selfsimilar manifold the four verdicts must agree; the agreement is
/// what the classifier asserts.
struct ConicalReport {
  StructureReport dxi_identity;
  StructureReport dtheta_metric;
  StructureReport dtheta_symmetric;
  StructureReport theta_closed;

  bool all_pass() const {
    return dxi_identity.pass && dtheta_metric.pass && dtheta_symmetric.pass &&
           theta_closed.pass;
  }
  bool verdicts_agree() const {
    return dxi_identity.pass == dtheta_metric.pass &&
           dtheta_metric.pass == dtheta_symmetric.pass &&
           dtheta_symmetric.pass == theta_closed.pass;
  }
  std::vector<const StructureReport*> all() const {
    return {&dxi_identity, &dtheta_metric, &dtheta_symmetric, &theta_closed};
  }
};

ConicalReport check_conical(const MetricField& g, const VectorField& xi,
                            const std::vector<std::vector<double>>& samples,
                            double tol, double cond_bound = 1e12);

/// max |df + 2 alpha| (component-wise) over base samples: the assembled
/// metric is a cone metric exactly when this vanishes.
StructureReport check_cone_criterion(const ConeMetricSpec& spec,
                                     const std::vector<std::vector<double>>& samples,
                                     double tol);

/// Coefficient of alpha ^ (d alpha)^k relative to the coordinate volume
/// form at p; the chart dimension must be odd, 2k+1. alpha is contact where
/// this is nonzero.
double contact_volume(const OneFormField& alpha, std::span<const double> p);

/// Builds the spec g = t^2 f g_M + t Sym(dt (x) alpha) + dt^2 with f chosen
/// by dual_norm_plus_margin. Requires alpha to be contact on the sampled
/// base points (checked; the failing point is reported). The result is
/// selfsimilar by construction and never conical, since d alpha != 0.
ConeMetricSpec contact_selfsimilar_example(const MetricField& g_m,
                                           const OneFormField& alpha,
                                           double margin,
                                           const CheckConfig& config);

/// Pullback comparison under (x, t) -> (x, q t): the last coordinate is the
/// cone coordinate. Residual max |(lambda_q^* g) - q^2 g| over samples.
StructureReport check_dilation_equivariance(
    const MetricField& g, double q,
    const std::vector<std::vector<double>>& samples, double tol);

}  // namespace conegeom
