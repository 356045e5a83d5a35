#include "conegeom/cone.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace conegeom {

namespace {

// Strictness floor for "positive at a sampled point".
constexpr double kPositivityFloor = 1e-12;

/// Expression-level determinant by Laplace expansion along the first row.
ScalarExpr expr_determinant(const std::vector<std::vector<ScalarExpr>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  auto coords = m[0][0].coords_ptr();
  ScalarExpr det = make_const(coords, 0.0);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<ScalarExpr>> minor;
    minor.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<ScalarExpr> row;
      row.reserve(n - 1);
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[i][j]);
      minor.push_back(std::move(row));
    }
    ScalarExpr term = m[0][c] * expr_determinant(minor);
    det = (c % 2 == 0) ? det + term : det - term;
  }
  return det;
}

std::vector<std::vector<ScalarExpr>> metric_rows(const MetricField& g) {
  const int d = g.dim();
  std::vector<std::vector<ScalarExpr>> rows(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) rows[i].push_back(g.comp(i, j));
  return rows;
}

}  // namespace

VectorField ConeMetricSpec::dilation_field() const {
  const ChartDomain chart = product_chart();
  auto coords = chart_coords(chart);
  const int d = chart.dim();
  std::vector<ScalarExpr> comp(d, make_const(coords, 0.0));
  comp[d - 1] = make_coord(coords, d - 1);
  return VectorField(chart, std::move(comp));
}

MetricField assemble_metric(const ConeMetricSpec& spec) {
  const int db = spec.base.dim();
  const ChartDomain chart = spec.product_chart();
  auto coords = chart_coords(chart);
  const ScalarExpr t = make_coord(coords, db);
  const ScalarExpr t2 = t * t;
  const ScalarExpr f = relabel(spec.f, coords);

  std::vector<ScalarExpr> upper;
  for (int i = 0; i < db; ++i) {
    for (int j = i; j < db; ++j) {
      ScalarExpr gij = t2 * relabel(spec.g_m.comp(i, j), coords);
      if (spec.placement == FPlacement::kOnBase) gij = gij * f;
      upper.push_back(std::move(gij));
    }
    upper.push_back(t * relabel(spec.alpha.comp[i], coords));
  }
  upper.push_back(spec.placement == FPlacement::kOnDtSquared
                      ? f
                      : make_const(coords, 1.0));
  return MetricField::from_upper(chart, std::move(upper));
}

PositivityReport validate_positivity(const ConeMetricSpec& spec,
                                     const CheckConfig& config) {
  PositivityReport out;

  // Route (a): f - g_M^{-1}(alpha, alpha) > 0 at base samples.
  {
    const auto samples = sample_points(spec.base, config.samples, config.seed);
    const int d = spec.base.dim();
    ResidualScan scan;
    for (const auto& p : samples) {
      const Matrix gm = metric_at(spec.g_m, p);
      const Matrix ginv = inverse_metric(gm, config.cond_bound);
      Vector a(d);
      for (int i = 0; i < d; ++i) a[i] = eval_value(spec.alpha.comp[i], p);
      const double dual = a.dot(ginv * a);
      const double margin = eval_value(spec.f, p) - dual;
      scan.update(std::max(0.0, kPositivityFloor - margin), p);
    }
    out.criterion = scan.report("positivity_criterion", 0.0);
  }

  // Route (b): smallest eigenvalue of the assembled metric at product samples.
  {
    const MetricField g = assemble_metric(spec);
    const auto samples =
        sample_points(g.chart(), config.samples, config.seed);
    ResidualScan scan;
    for (const auto& p : samples) {
      const double ev = smallest_eigenvalue(metric_at(g, p));
      scan.update(std::max(0.0, kPositivityFloor - ev), p);
    }
    out.eigenvalue = scan.report("positivity_eigenvalue", 0.0);
  }
  return out;
}

MetricField assemble_selfsimilar_metric(const ConeMetricSpec& spec,
                                        const CheckConfig& config) {
  const PositivityReport pos = validate_positivity(spec, config);
  if (!pos.pass()) {
    const auto& worst =
        pos.criterion.pass ? pos.eigenvalue.worst_point : pos.criterion.worst_point;
    throw PreconditionError(
        "assembled metric is not positive definite: f <= g_M^{-1}(alpha, alpha) "
        "at a sampled point",
        worst);
  }
  return assemble_metric(spec);
}

ScalarExpr dual_norm_squared(const MetricField& g_m, const OneFormField& alpha) {
  const int d = g_m.dim();
  auto coords = alpha.comp[0].coords_ptr();
  const auto rows = metric_rows(g_m);
  const ScalarExpr det = expr_determinant(rows);

  // inverse entries via the adjugate: g^{ij} = cofactor(j, i) / det
  // (symmetric, so the transpose is immaterial).
  ScalarExpr sum = make_const(coords, 0.0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (d == 1) {
        sum = sum + alpha.comp[i] * alpha.comp[j] / det;
        continue;
      }
      std::vector<std::vector<ScalarExpr>> minor;
      for (int r = 0; r < d; ++r) {
        if (r == j) continue;
        std::vector<ScalarExpr> row;
        for (int c = 0; c < d; ++c)
          if (c != i) row.push_back(rows[r][c]);
        minor.push_back(std::move(row));
      }
      ScalarExpr cof = expr_determinant(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      sum = sum + alpha.comp[i] * alpha.comp[j] * cof / det;
    }
  return sum;
}

ScalarExpr dual_norm_plus_margin(const MetricField& g_m,
                                 const OneFormField& alpha, double margin) {
  if (!(margin > 0.0)) throw PreconditionError("margin must be positive");
  return dual_norm_squared(g_m, alpha) + margin;
}

StructureReport check_selfsimilar(const MetricField& g, const VectorField& xi,
                                  const std::vector<std::vector<double>>& samples,
                                  double tol) {
  ResidualScan scan;
  for (const auto& p : samples) {
    const Matrix lie = lie_derivative_metric(xi, g, p);
    const Matrix gm = metric_at(g, p);
    scan.update(max_abs(Matrix(lie - 2.0 * gm)), p);
  }
  return scan.report("selfsimilar", tol);
}

ConicalReport check_conical(const MetricField& g, const VectorField& xi,
                            const std::vector<std::vector<double>>& samples,
                            double tol, double cond_bound) {
  const int d = g.dim();
  const Connection levi = Connection::levi_civita(g);
  const OneFormField theta = interior_product(xi, g);
  ResidualScan s1, s2, s3, s4;
  for (const auto& p : samples) {
    const Matrix gm = metric_at(g, p);
    const Matrix dxi = covariant_derivative_vector(levi, xi, p);
    s1.update(max_abs(Matrix(dxi - Matrix::Identity(d, d))), p);
    const Matrix dtheta_cov = covariant_derivative_oneform(levi, theta, p);
    s2.update(max_abs(Matrix(dtheta_cov - gm)), p);
    s3.update(max_abs(Matrix(dtheta_cov - dtheta_cov.transpose())), p);
    const Matrix dtheta_ext = exterior_derivative_oneform(theta, p);
    s4.update(max_abs(dtheta_ext), p);
  }
  ConicalReport out;
  out.dxi_identity = s1.report("conical_dxi_identity", tol);
  out.dtheta_metric = s2.report("conical_dtheta_metric", tol);
  out.dtheta_symmetric = s3.report("conical_dtheta_symmetric", tol);
  out.theta_closed = s4.report("conical_theta_closed", tol);
  return out;
}

StructureReport check_cone_criterion(const ConeMetricSpec& spec,
                                     const std::vector<std::vector<double>>& samples,
                                     double tol) {
  const int d = spec.base.dim();
  ResidualScan scan;
  for (const auto& p : samples) {
    const Jet fj = eval_jet(spec.f, p, 1);
    double r = 0.0;
    for (int i = 0; i < d; ++i)
      r = std::max(r,
                   std::abs(fj.first(i) + 2.0 * eval_value(spec.alpha.comp[i], p)));
    scan.update(r, p);
  }
  return scan.report("cone_criterion", tol);
}

double contact_volume(const OneFormField& alpha, std::span<const double> p) {
  const int m = alpha.chart.dim();
  if (m % 2 == 0)
    throw PreconditionError("contact forms need an odd-dimensional chart");
  const int k = (m - 1) / 2;

  std::vector<double> a(m);
  for (int i = 0; i < m; ++i) a[i] = eval_value(alpha.comp[i], p);
  const Matrix da = exterior_derivative_oneform(alpha, p);

  // Full antisymmetrisation of alpha (x) (d alpha)^k, normalised so the
  // result is the coefficient relative to dx^1 ^ ... ^ dx^m.
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  double sum = 0.0;
  do {
    int inversions = 0;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (perm[i] > perm[j]) ++inversions;
    double term = (inversions % 2 == 0) ? a[perm[0]] : -a[perm[0]];
    for (int j = 0; j < k; ++j) term *= da(perm[1 + 2 * j], perm[2 + 2 * j]);
    sum += term;
  } while (std::next_permutation(perm.begin(), perm.end()));

  double norm = 1.0;
  for (int j = 1; j <= k; ++j) norm *= 2.0 * j;  // 2^k k!
  return sum / norm;
}

ConeMetricSpec contact_selfsimilar_example(const MetricField& g_m,
                                           const OneFormField& alpha,
                                           double margin,
                                           const CheckConfig& config) {
  const ChartDomain& base = g_m.chart();
  if (base.dim() % 2 == 0)
    throw PreconditionError("contact construction needs an odd-dimensional base");
  const auto samples = sample_points(base, config.samples, config.seed);
  for (const auto& p : samples) {
    if (std::abs(contact_volume(alpha, p)) <= 1e-10)
      throw PreconditionError("alpha ^ (d alpha)^k vanishes at a sampled point",
                              p);
  }
  ConeMetricSpec spec;
  spec.base = base;
  spec.g_m = g_m;
  spec.alpha = alpha;
  spec.f = dual_norm_plus_margin(g_m, alpha, margin);
  spec.placement = FPlacement::kOnBase;
  return spec;
}

StructureReport check_dilation_equivariance(
    const MetricField& g, double q,
    const std::vector<std::vector<double>>& samples, double tol) {
  const int d = g.dim();
  const int t_index = d - 1;
  ResidualScan scan;
  for (const auto& p : samples) {
    std::vector<double> scaled = p;
    scaled[t_index] *= q;
    if (!g.chart().contains(scaled))
      throw PreconditionError("dilated point leaves the chart domain", scaled);
    const Matrix at_p = metric_at(g, p);
    const Matrix at_scaled = metric_at(g, scaled);
    double r = 0.0;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const double si = (i == t_index) ? q : 1.0;
        const double sj = (j == t_index) ? q : 1.0;
        r = std::max(r, std::abs(at_scaled(i, j) * si * sj - q * q * at_p(i, j)));
      }
    scan.update(r, p);
  }
  return scan.report("dilation_q=" + std::to_string(q), tol);
}

}  // namespace conegeom
