#pragma once

#include <cassert>
#include <vector>

namespace conegeom {

/// Truncated multivariate Taylor expansion of a scalar at a point.
///
/// A Jet of order k over a d-dimensional chart carries the value and all
/// partial derivatives up to order k (k <= 3), stored as plain derivative
/// values (not divided by factorials):
///
///   value          f
///   first[i]       d_i f
///   second[i][j]   d_i d_j f        (symmetric)
///   third[i][j][k] d_i d_j d_k f    (fully symmetric, order 3 only)
///
/// Arithmetic propagates derivatives by the Leibniz and chain rules and
/// truncates at the carried order, so evaluating an expression on jets yields
/// derivatives exact to machine rounding: there is no step-size truncation
/// error anywhere.
class Jet {
 public:
  Jet() = default;

  Jet(int dim, int order) : dim_(dim), order_(order) {
    assert(dim >= 1);
    assert(order >= 0 && order <= 3);
    if (order_ >= 1) first_.assign(dim_, 0.0);
    if (order_ >= 2) second_.assign(static_cast<std::size_t>(dim_) * dim_, 0.0);
    if (order_ >= 3)
      third_.assign(static_cast<std::size_t>(dim_) * dim_ * dim_, 0.0);
  }

  /// Jet of the constant function c.
  static Jet constant(int dim, int order, double c) {
    Jet j(dim, order);
    j.value_ = c;
    return j;
  }

  /// Jet of the coordinate function x^index at a point where it equals v.
  static Jet coordinate(int dim, int order, int index, double v) {
    Jet j(dim, order);
    j.value_ = v;
    if (order >= 1) j.first_[index] = 1.0;
    return j;
  }

  int dim() const { return dim_; }
  int order() const { return order_; }

  double value() const { return value_; }
  double first(int i) const { return order_ >= 1 ? first_[i] : 0.0; }
  double second(int i, int j) const {
    return order_ >= 2 ? second_[static_cast<std::size_t>(i) * dim_ + j] : 0.0;
  }
  double third(int i, int j, int k) const {
    return order_ >= 3
               ? third_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k]
               : 0.0;
  }

  double& value() { return value_; }
  double& first(int i) { return first_[i]; }
  double& second(int i, int j) {
    return second_[static_cast<std::size_t>(i) * dim_ + j];
  }
  double& third(int i, int j, int k) {
    return third_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
  }

  Jet operator-() const;
  Jet operator+(const Jet& o) const;
  Jet operator-(const Jet& o) const;
  Jet operator*(const Jet& o) const;
  Jet operator/(const Jet& o) const;  // asserts o.value() != 0 upstream

  Jet operator+(double c) const;
  Jet operator-(double c) const;
  Jet operator*(double c) const;
  Jet operator/(double c) const;
  friend Jet operator+(double c, const Jet& j) { return j + c; }
  friend Jet operator-(double c, const Jet& j) { return -(j - c); }
  friend Jet operator*(double c, const Jet& j) { return j * c; }

  /// Compose with a univariate function h given its derivatives
  /// h, h', h'', h''' at this jet's value:
  ///
  ///   (h o u)_i   = h' u_i
  ///   (h o u)_ij  = h'' u_i u_j + h' u_ij
  ///   (h o u)_ijk = h''' u_i u_j u_k
  ///               + h'' (u_ij u_k + u_ik u_j + u_jk u_i) + h' u_ijk
  Jet compose(double h0, double h1, double h2, double h3) const;

  /// Integer power by repeated multiplication; exact for polynomials.
  /// Negative exponents go through the reciprocal (value must be nonzero).
  Jet pow_int(long n) const;

  /// The jet of 1/u; requires value() != 0 (checked by the caller).
  Jet reciprocal() const;

 private:
  int dim_ = 1;
  int order_ = 0;
  double value_ = 0.0;
  std::vector<double> first_;
  std::vector<double> second_;
  std::vector<double> third_;
};

// Transcendental lifts. Domain checks (log/sqrt argument > 0, pow base > 0
// for non-integer exponents) are done by the expression evaluator, which can
// name the offending subexpression.
Jet sin(const Jet& u);
Jet cos(const Jet& u);
Jet exp(const Jet& u);
Jet log(const Jet& u);
Jet sqrt(const Jet& u);
Jet pow(const Jet& u, double p);  // non-integer exponent path

}  // namespace conegeom
