#include "conegeom/linalg.hpp"

#include <cmath>

#include "conegeom/errors.hpp"

namespace conegeom {

Matrix inverse_metric(const Matrix& m, double cond_bound) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  const Vector& ev = solver.eigenvalues();
  double min_abs = std::abs(ev[0]), max_abs_ev = std::abs(ev[0]);
  for (Eigen::Index i = 1; i < ev.size(); ++i) {
    min_abs = std::min(min_abs, std::abs(ev[i]));
    max_abs_ev = std::max(max_abs_ev, std::abs(ev[i]));
  }
  if (min_abs == 0.0 || max_abs_ev / min_abs > cond_bound)
    throw SingularError("metric is singular or ill-conditioned", ev[0]);
  // Reconstruct from the eigendecomposition so the inverse is symmetric
  // to the last bit.
  Matrix inv = solver.eigenvectors() * ev.cwiseInverse().asDiagonal() *
               solver.eigenvectors().transpose();
  return (inv + inv.transpose()) / 2.0;
}

Vector symmetric_eigenvalues(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  return solver.eigenvalues();
}

double smallest_eigenvalue(const Matrix& m) {
  return symmetric_eigenvalues(m)[0];
}

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }
double max_abs(const Vector& v) { return v.cwiseAbs().maxCoeff(); }

}  // namespace conegeom
