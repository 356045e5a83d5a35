#include "conegeom/tensor_ops.hpp"

#include <cmath>

namespace conegeom {

namespace {

/// Metric component jets at p, order 1 or 2, as a symmetric array of jets.
std::vector<Jet> metric_jets(const MetricField& g, std::span<const double> p,
                             int order) {
  const int d = g.dim();
  std::vector<Jet> jets(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      Jet jet = eval_jet(g.comp(i, j), p, order);
      jets[static_cast<std::size_t>(i) * d + j] = jet;
      if (i != j) jets[static_cast<std::size_t>(j) * d + i] = jet;
    }
  return jets;
}

}  // namespace

Matrix metric_at(const MetricField& g, std::span<const double> p) {
  const int d = g.dim();
  Matrix m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      const double v = eval_value(g.comp(i, j), p);
      m(i, j) = v;
      m(j, i) = v;
    }
  return m;
}

Christoffels levi_civita_christoffels(const MetricField& g,
                                      std::span<const double> p,
                                      double cond_bound) {
  const int d = g.dim();
  const auto jets = metric_jets(g, p, 1);
  Matrix gm(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      gm(i, j) = jets[static_cast<std::size_t>(i) * d + j].value();
  const Matrix ginv = inverse_metric(gm, cond_bound);

  Christoffels out;
  out.dim = d;
  out.gamma.resize(static_cast<std::size_t>(d) * d * d);
  auto dg = [&](int a, int i, int j) {
    return jets[static_cast<std::size_t>(i) * d + j].first(a);
  };
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        double sum = 0.0;
        for (int l = 0; l < d; ++l)
          sum += ginv(k, l) * (dg(i, j, l) + dg(j, i, l) - dg(l, i, j));
        out.at(k, i, j) = 0.5 * sum;
      }
  return out;
}

ChristoffelDerivs levi_civita_christoffel_derivs(const MetricField& g,
                                                 std::span<const double> p,
                                                 double cond_bound) {
  const int d = g.dim();
  const auto jets = metric_jets(g, p, 2);
  Matrix gm(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      gm(i, j) = jets[static_cast<std::size_t>(i) * d + j].value();
  const Matrix ginv = inverse_metric(gm, cond_bound);

  auto dg = [&](int a, int i, int j) {
    return jets[static_cast<std::size_t>(i) * d + j].first(a);
  };
  auto ddg = [&](int a, int b, int i, int j) {
    return jets[static_cast<std::size_t>(i) * d + j].second(a, b);
  };

  ChristoffelDerivs out;
  out.gamma.dim = d;
  out.gamma.gamma.resize(static_cast<std::size_t>(d) * d * d);
  out.dgamma.resize(static_cast<std::size_t>(d) * d * d * d);

  for (int k = 0; k < d; ++k)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        double sum = 0.0;
        for (int l = 0; l < d; ++l)
          sum += ginv(k, l) * (dg(i, j, l) + dg(j, i, l) - dg(l, i, j));
        out.gamma.at(k, i, j) = 0.5 * sum;
      }

  // d_a g^{kl} = -g^{km} (d_a g_mn) g^{nl}
  std::vector<Matrix> dginv(d, Matrix::Zero(d, d));
  for (int a = 0; a < d; ++a) {
    Matrix dgm(d, d);
    for (int m = 0; m < d; ++m)
      for (int n = 0; n < d; ++n) dgm(m, n) = dg(a, m, n);
    dginv[a] = -ginv * dgm * ginv;
  }

  for (int a = 0; a < d; ++a)
    for (int k = 0; k < d; ++k)
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          double sum = 0.0;
          for (int l = 0; l < d; ++l) {
            sum += dginv[a](k, l) * (dg(i, j, l) + dg(j, i, l) - dg(l, i, j));
            sum += ginv(k, l) *
                   (ddg(a, i, j, l) + ddg(a, j, i, l) - ddg(a, l, i, j));
          }
          out.d(a, k, i, j) = 0.5 * sum;
        }
  return out;
}

Vector lie_bracket(const VectorField& X, const VectorField& Y,
                   std::span<const double> p) {
  const int d = X.chart.dim();
  std::vector<Jet> xj, yj;
  xj.reserve(d);
  yj.reserve(d);
  for (int i = 0; i < d; ++i) {
    xj.push_back(eval_jet(X.comp[i], p, 1));
    yj.push_back(eval_jet(Y.comp[i], p, 1));
  }
  Vector out = Vector::Zero(d);
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < d; ++i)
      out[k] += xj[i].value() * yj[k].first(i) - yj[i].value() * xj[k].first(i);
  return out;
}

Matrix covariant_derivative_vector(const Connection& c, const VectorField& V,
                                   std::span<const double> p) {
  const int d = c.dim();
  const Christoffels gamma = c.christoffels_at(p);
  Matrix out(d, d);
  std::vector<Jet> vj;
  vj.reserve(d);
  for (int k = 0; k < d; ++k) vj.push_back(eval_jet(V.comp[k], p, 1));
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < d; ++i) {
      double sum = vj[k].first(i);
      for (int j = 0; j < d; ++j) sum += gamma.at(k, i, j) * vj[j].value();
      out(k, i) = sum;
    }
  return out;
}

Matrix covariant_derivative_oneform(const Connection& c, const OneFormField& w,
                                    std::span<const double> p) {
  const int d = c.dim();
  const Christoffels gamma = c.christoffels_at(p);
  std::vector<Jet> wj;
  wj.reserve(d);
  for (int k = 0; k < d; ++k) wj.push_back(eval_jet(w.comp[k], p, 1));
  Matrix out(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      double sum = wj[j].first(i);
      for (int k = 0; k < d; ++k) sum -= gamma.at(k, i, j) * wj[k].value();
      out(i, j) = sum;
    }
  return out;
}

Matrix lie_derivative_metric(const VectorField& X, const MetricField& g,
                             std::span<const double> p) {
  const int d = g.dim();
  const auto gj = metric_jets(g, p, 1);
  std::vector<Jet> xj;
  xj.reserve(d);
  for (int k = 0; k < d; ++k) xj.push_back(eval_jet(X.comp[k], p, 1));
  Matrix out(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      double sum = 0.0;
      for (int k = 0; k < d; ++k) {
        sum += xj[k].value() * gj[static_cast<std::size_t>(i) * d + j].first(k);
        sum += gj[static_cast<std::size_t>(k) * d + j].value() * xj[k].first(i);
        sum += gj[static_cast<std::size_t>(i) * d + k].value() * xj[k].first(j);
      }
      out(i, j) = sum;
    }
  return out;
}

Matrix exterior_derivative_oneform(const OneFormField& w,
                                   std::span<const double> p) {
  const int d = w.chart.dim();
  std::vector<Jet> wj;
  wj.reserve(d);
  for (int k = 0; k < d; ++k) wj.push_back(eval_jet(w.comp[k], p, 1));
  Matrix out(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) out(i, j) = wj[j].first(i) - wj[i].first(j);
  return out;
}

Matrix flat_hessian(const Connection& c, const ScalarExpr& phi,
                    std::span<const double> p) {
  const int d = c.dim();
  const Christoffels gamma = c.christoffels_at(p);
  const Jet pj = eval_jet(phi, p, 2);
  Matrix out(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      double sum = pj.second(i, j);
      for (int k = 0; k < d; ++k) sum -= gamma.at(k, i, j) * pj.first(k);
      out(i, j) = sum;
    }
  return out;
}

OneFormField interior_product(const VectorField& X, const MetricField& g) {
  const int d = g.dim();
  auto coords = X.comp[0].coords_ptr();
  std::vector<ScalarExpr> theta;
  theta.reserve(d);
  for (int j = 0; j < d; ++j) {
    ScalarExpr sum = make_const(coords, 0.0);
    for (int i = 0; i < d; ++i) sum = sum + g.comp(i, j) * X.comp[i];
    theta.push_back(sum);
  }
  return OneFormField(g.chart(), std::move(theta));
}

FlatnessReport check_flat_torsion_free(
    const Connection& c, const std::vector<std::vector<double>>& samples,
    double tol) {
  const int d = c.dim();
  ResidualScan torsion, curvature;
  for (const auto& p : samples) {
    const ChristoffelDerivs cd = c.christoffel_derivs_at(p);
    double t = 0.0, r = 0.0;
    for (int k = 0; k < d; ++k)
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          t = std::max(t, std::abs(cd.gamma.at(k, i, j) - cd.gamma.at(k, j, i)));
    for (int l = 0; l < d; ++l)
      for (int k = 0; k < d; ++k)
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j) {
            double sum = cd.d(i, l, j, k) - cd.d(j, l, i, k);
            for (int m = 0; m < d; ++m)
              sum += cd.gamma.at(l, i, m) * cd.gamma.at(m, j, k) -
                     cd.gamma.at(l, j, m) * cd.gamma.at(m, i, k);
            r = std::max(r, std::abs(sum));
          }
    torsion.update(t, p);
    curvature.update(r, p);
  }
  FlatnessReport out;
  out.torsion = torsion.report("torsion", tol);
  out.curvature = curvature.report("curvature", tol);
  return out;
}

}  // namespace conegeom
