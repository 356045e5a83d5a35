#include "conegeom/fields.hpp"

#include "conegeom/tensor_ops.hpp"

namespace conegeom {

MetricField MetricField::from_upper(ChartDomain chart,
                                    std::vector<ScalarExpr> upper,
                                    Definiteness claim) {
  const int d = chart.dim();
  if (upper.size() != static_cast<std::size_t>(d) * (d + 1) / 2)
    throw SpecError("metric upper-triangle component count mismatch");
  MetricField m;
  m.chart_ = std::move(chart);
  m.upper_ = std::move(upper);
  m.claim_ = claim;
  return m;
}

MetricField MetricField::diagonal(ChartDomain chart,
                                  std::vector<ScalarExpr> diag,
                                  Definiteness claim) {
  const int d = chart.dim();
  if (diag.size() != static_cast<std::size_t>(d))
    throw SpecError("diagonal metric component count mismatch");
  auto coords = diag[0].coords_ptr();
  std::vector<ScalarExpr> upper;
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j)
      upper.push_back(i == j ? diag[i] : make_const(coords, 0.0));
  return from_upper(std::move(chart), std::move(upper), claim);
}

MetricField MetricField::euclidean(ChartDomain chart) {
  const int d = chart.dim();
  auto coords = std::make_shared<const std::vector<std::string>>(chart.coords());
  std::vector<ScalarExpr> diag;
  for (int i = 0; i < d; ++i) diag.push_back(make_const(coords, 1.0));
  return diagonal(std::move(chart), std::move(diag));
}

VectorField::VectorField(ChartDomain c, std::vector<ScalarExpr> comps)
    : chart(std::move(c)), comp(std::move(comps)) {
  if (comp.size() != static_cast<std::size_t>(chart.dim()))
    throw SpecError("vector field component count mismatch");
}

OneFormField::OneFormField(ChartDomain c, std::vector<ScalarExpr> comps)
    : chart(std::move(c)), comp(std::move(comps)) {
  if (comp.size() != static_cast<std::size_t>(chart.dim()))
    throw SpecError("one-form component count mismatch");
}

Connection Connection::levi_civita(MetricField g, double cond_bound) {
  Connection c;
  c.kind_ = Kind::kLeviCivita;
  c.chart_ = g.chart();
  c.metric_ = std::move(g);
  c.cond_bound_ = cond_bound;
  return c;
}

Connection Connection::explicit_gamma(ChartDomain chart,
                                      std::vector<ScalarExpr> gamma) {
  const int d = chart.dim();
  if (gamma.size() != static_cast<std::size_t>(d) * d * d)
    throw SpecError("Christoffel expression count mismatch");
  Connection c;
  c.kind_ = Kind::kExplicit;
  c.chart_ = std::move(chart);
  c.gamma_ = std::move(gamma);
  return c;
}

Connection Connection::cartesian_flat(const ChartDomain& chart) {
  const int d = chart.dim();
  auto coords = std::make_shared<const std::vector<std::string>>(chart.coords());
  std::vector<ScalarExpr> gamma(static_cast<std::size_t>(d) * d * d,
                                make_const(coords, 0.0));
  return explicit_gamma(chart, std::move(gamma));
}

Christoffels Connection::christoffels_at(std::span<const double> p) const {
  if (kind_ == Kind::kLeviCivita)
    return levi_civita_christoffels(metric_, p, cond_bound_);
  const int d = dim();
  Christoffels out;
  out.dim = d;
  out.gamma.resize(static_cast<std::size_t>(d) * d * d);
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        out.at(k, i, j) = eval_value(gamma_expr(k, i, j), p);
  return out;
}

ChristoffelDerivs Connection::christoffel_derivs_at(
    std::span<const double> p) const {
  const int d = dim();
  ChristoffelDerivs out;
  out.gamma.dim = d;
  out.gamma.gamma.resize(static_cast<std::size_t>(d) * d * d);
  out.dgamma.resize(static_cast<std::size_t>(d) * d * d * d);
  if (kind_ == Kind::kExplicit) {
    for (int k = 0; k < d; ++k)
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          const Jet jet = eval_jet(gamma_expr(k, i, j), p, 1);
          out.gamma.at(k, i, j) = jet.value();
          for (int a = 0; a < d; ++a) out.d(a, k, i, j) = jet.first(a);
        }
    return out;
  }
  return levi_civita_christoffel_derivs(metric_, p);
}

}  // namespace conegeom
