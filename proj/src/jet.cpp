#include "conegeom/jet.hpp"

#include <cmath>

namespace conegeom {

Jet Jet::operator-() const {
  Jet r = *this;
  r.value_ = -r.value_;
  for (auto& x : r.first_) x = -x;
  for (auto& x : r.second_) x = -x;
  for (auto& x : r.third_) x = -x;
  return r;
}

Jet Jet::operator+(const Jet& o) const {
  assert(dim_ == o.dim_ && order_ == o.order_);
  Jet r = *this;
  r.value_ += o.value_;
  for (std::size_t i = 0; i < r.first_.size(); ++i) r.first_[i] += o.first_[i];
  for (std::size_t i = 0; i < r.second_.size(); ++i)
    r.second_[i] += o.second_[i];
  for (std::size_t i = 0; i < r.third_.size(); ++i) r.third_[i] += o.third_[i];
  return r;
}

Jet Jet::operator-(const Jet& o) const {
  assert(dim_ == o.dim_ && order_ == o.order_);
  Jet r = *this;
  r.value_ -= o.value_;
  for (std::size_t i = 0; i < r.first_.size(); ++i) r.first_[i] -= o.first_[i];
  for (std::size_t i = 0; i < r.second_.size(); ++i)
    r.second_[i] -= o.second_[i];
  for (std::size_t i = 0; i < r.third_.size(); ++i) r.third_[i] -= o.third_[i];
  return r;
}

Jet Jet::operator*(const Jet& o) const {
  assert(dim_ == o.dim_ && order_ == o.order_);
  const Jet& a = *this;
  const Jet& b = o;
  Jet r(dim_, order_);
  r.value_ = a.value_ * b.value_;
  if (order_ >= 1) {
    for (int i = 0; i < dim_; ++i)
      r.first(i) = a.value() * b.first(i) + a.first(i) * b.value();
  }
  if (order_ >= 2) {
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        r.second(i, j) = a.value() * b.second(i, j) +
                         a.first(i) * b.first(j) + a.first(j) * b.first(i) +
                         a.second(i, j) * b.value();
  }
  if (order_ >= 3) {
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        for (int k = 0; k < dim_; ++k)
          r.third(i, j, k) =
              a.value() * b.third(i, j, k) + a.third(i, j, k) * b.value() +
              a.first(i) * b.second(j, k) + a.first(j) * b.second(i, k) +
              a.first(k) * b.second(i, j) + a.second(j, k) * b.first(i) +
              a.second(i, k) * b.first(j) + a.second(i, j) * b.first(k);
  }
  return r;
}

Jet Jet::reciprocal() const {
  const double v = value_;
  return compose(1.0 / v, -1.0 / (v * v), 2.0 / (v * v * v),
                 -6.0 / (v * v * v * v));
}

Jet Jet::operator/(const Jet& o) const { return *this * o.reciprocal(); }

Jet Jet::operator+(double c) const {
  Jet r = *this;
  r.value_ += c;
  return r;
}

Jet Jet::operator-(double c) const {
  Jet r = *this;
  r.value_ -= c;
  return r;
}

Jet Jet::operator*(double c) const {
  Jet r = *this;
  r.value_ *= c;
  for (auto& x : r.first_) x *= c;
  for (auto& x : r.second_) x *= c;
  for (auto& x : r.third_) x *= c;
  return r;
}

Jet Jet::operator/(double c) const { return *this * (1.0 / c); }

Jet Jet::compose(double h0, double h1, double h2, double h3) const {
  const Jet& u = *this;
  Jet r(dim_, order_);
  r.value() = h0;
  if (order_ >= 1) {
    for (int i = 0; i < dim_; ++i) r.first(i) = h1 * u.first(i);
  }
  if (order_ >= 2) {
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        r.second(i, j) = h2 * u.first(i) * u.first(j) + h1 * u.second(i, j);
  }
  if (order_ >= 3) {
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        for (int k = 0; k < dim_; ++k)
          r.third(i, j, k) = h3 * u.first(i) * u.first(j) * u.first(k) +
                             h2 * (u.second(i, j) * u.first(k) +
                                   u.second(i, k) * u.first(j) +
                                   u.second(j, k) * u.first(i)) +
                             h1 * u.third(i, j, k);
  }
  return r;
}

Jet Jet::pow_int(long n) const {
  if (n < 0) return pow_int(-n).reciprocal();
  Jet result = Jet::constant(dim_, order_, 1.0);
  Jet base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Jet sin(const Jet& u) {
  const double s = std::sin(u.value()), c = std::cos(u.value());
  return u.compose(s, c, -s, -c);
}

Jet cos(const Jet& u) {
  const double s = std::sin(u.value()), c = std::cos(u.value());
  return u.compose(c, -s, -c, s);
}

Jet exp(const Jet& u) {
  const double e = std::exp(u.value());
  return u.compose(e, e, e, e);
}

Jet log(const Jet& u) {
  const double v = u.value();
  return u.compose(std::log(v), 1.0 / v, -1.0 / (v * v), 2.0 / (v * v * v));
}

Jet sqrt(const Jet& u) {
  const double v = u.value();
  const double r = std::sqrt(v);
  return u.compose(r, 0.5 / r, -0.25 / (r * v), 0.375 / (r * v * v));
}

Jet pow(const Jet& u, double p) {
  const double v = u.value();
  const double h0 = std::pow(v, p);
  const double h1 = p * std::pow(v, p - 1);
  const double h2 = p * (p - 1) * std::pow(v, p - 2);
  const double h3 = p * (p - 1) * (p - 2) * std::pow(v, p - 3);
  return u.compose(h0, h1, h2, h3);
}

}  // namespace conegeom
