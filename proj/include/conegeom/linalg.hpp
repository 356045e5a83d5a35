#pragma once

#include <Eigen/Dense>

namespace conegeom {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Inverse of a symmetric positive (semi)definite-claimed matrix with a
/// condition-number guard. Throws SingularError when the matrix is singular
/// or its condition number exceeds `cond_bound`, reporting the smallest
/// eigenvalue.
Matrix inverse_metric(const Matrix& m, double cond_bound = 1e12);

/// Eigenvalues of a symmetric matrix, ascending.
Vector symmetric_eigenvalues(const Matrix& m);

double smallest_eigenvalue(const Matrix& m);

/// max |a_ij| over all entries.
double max_abs(const Matrix& m);
double max_abs(const Vector& v);

}  // namespace conegeom
