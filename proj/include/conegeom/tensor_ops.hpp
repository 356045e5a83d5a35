#pragma once

#include <span>
#include <vector>

#include "conegeom/fields.hpp"
#include "conegeom/linalg.hpp"
#include "conegeom/report.hpp"

namespace conegeom {

// Pointwise coordinate tensor calculus. Index conventions:
//   covariant_derivative_vector   out(k, i) = (nabla_i V)^k
//                                           = d_i V^k + Gamma^k_{ij} V^j
//   covariant_derivative_oneform  out(i, j) = (nabla w)(d_i, d_j)
//                                           = d_i w_j - Gamma^k_{ij} w_k
//   lie_derivative_metric         out(i, j) = X^k d_k g_ij
//                                           + g_kj d_i X^k + g_ik d_j X^k
//   exterior_derivative_oneform   out(i, j) = d_i w_j - d_j w_i
//   flat_hessian                  out(i, j) = d_i d_j phi - Gamma^k_{ij} d_k phi
// Residuals are max-abs over tensor entries.

/// Component values of the metric at p (symmetric matrix).
Matrix metric_at(const MetricField& g, std::span<const double> p);

/// Levi-Civita coefficients of g at p:
/// Gamma^k_{ij} = 1/2 g^{kl} (d_i g_jl + d_j g_il - d_l g_ij).
Christoffels levi_civita_christoffels(const MetricField& g,
                                      std::span<const double> p,
                                      double cond_bound = 1e12);

/// Levi-Civita coefficients together with their first partials; needs
/// order-2 metric jets and d_a g^{kl} = -g^{km} (d_a g_mn) g^{nl}.
ChristoffelDerivs levi_civita_christoffel_derivs(const MetricField& g,
                                                 std::span<const double> p,
                                                 double cond_bound = 1e12);

/// [X,Y]^k = X^i d_i Y^k - Y^i d_i X^k.
Vector lie_bracket(const VectorField& X, const VectorField& Y,
                   std::span<const double> p);

Matrix covariant_derivative_vector(const Connection& c, const VectorField& V,
                                   std::span<const double> p);

Matrix covariant_derivative_oneform(const Connection& c, const OneFormField& w,
                                    std::span<const double> p);

Matrix lie_derivative_metric(const VectorField& X, const MetricField& g,
                             std::span<const double> p);

Matrix exterior_derivative_oneform(const OneFormField& w,
                                   std::span<const double> p);

Matrix flat_hessian(const Connection& c, const ScalarExpr& phi,
                    std::span<const double> p);

/// theta_j = g_ij X^i as component expressions.
OneFormField interior_product(const VectorField& X, const MetricField& g);

/// Torsion |Gamma^k_{ij} - Gamma^k_{ji}| and curvature
/// R^l_{kij} = d_i Gamma^l_{jk} - d_j Gamma^l_{ik}
///           + Gamma^l_{im} Gamma^m_{jk} - Gamma^l_{jm} Gamma^m_{ik},
/// each maximised over the samples. The connection is flat and torsion-free
/// exactly when both stay within tol.
struct FlatnessReport {
  StructureReport torsion;
  StructureReport curvature;

  bool flat() const { return torsion.pass && curvature.pass; }
};

FlatnessReport check_flat_torsion_free(
    const Connection& c, const std::vector<std::vector<double>>& samples,
    double tol);

}  // namespace conegeom
