#include "plectic/ratfn.hpp"

#include <utility>

#include "plectic/errors.hpp"

namespace plectic {

RationalFn::RationalFn(std::size_t chart_dim)
    : num_(chart_dim), den_(Poly::constant(chart_dim, Rational(1))) {}

RationalFn::RationalFn(Poly p)
    : num_(std::move(p)), den_(Poly::constant(num_.chart_dim(), Rational(1))) {}

RationalFn::RationalFn(Poly num, Poly den, bool /*canonical*/)
    : num_(std::move(num)), den_(std::move(den)) {}

RationalFn RationalFn::constant(std::size_t chart_dim, const Rational& c) {
  return RationalFn(Poly::constant(chart_dim, c));
}

RationalFn RationalFn::variable(std::size_t chart_dim, std::size_t index) {
  return RationalFn(Poly::variable(chart_dim, index));
}

RationalFn ratfn_normalize(Poly num, Poly den) {
  if (num.chart_dim() != den.chart_dim()) {
    throw ChartMismatch("numerator and denominator on different charts");
  }
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  const std::size_t dim = num.chart_dim();
  if (num.is_zero()) return RationalFn(dim);
  if (den.is_constant()) return RationalFn(num.scaled(1 / den.constant_term()));

  const Poly g = poly_gcd(num, den);
  if (!g.is_one()) {
    num = *divide_exact(num, g);
    den = *divide_exact(den, g);
  }
  const Rational lead = den.leading_coefficient();
  if (lead != 1) {
    num = num.scaled(1 / lead);
    den = den.scaled(1 / lead);
  }
  return RationalFn(std::move(num), std::move(den), true);
}

std::optional<Rational> RationalFn::evaluate(std::span<const Rational> point) const {
  Rational d = den_.evaluate(point);
  if (plectic::is_zero(d)) return std::nullopt;
  return Rational(num_.evaluate(point) / d);
}

RationalFn RationalFn::partial(std::size_t i) const {
  if (is_polynomial()) return RationalFn(poly_partial(num_, i));
  Poly top = poly_partial(num_, i) * den_ - num_ * poly_partial(den_, i);
  return ratfn_normalize(std::move(top), den_ * den_);
}

RationalFn RationalFn::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational function");
  return ratfn_normalize(den_, num_);
}

RationalFn RationalFn::scaled(const Rational& c) const {
  if (plectic::is_zero(c)) return RationalFn(chart_dim());
  return RationalFn(num_.scaled(c), den_, true);
}

RationalFn RationalFn::operator-() const { return RationalFn(-num_, den_, true); }

RationalFn& RationalFn::operator+=(const RationalFn& other) {
  if (is_polynomial() && other.is_polynomial()) {
    num_ += other.num_;
    return *this;
  }
  if (den_ == other.den_) {
    *this = ratfn_normalize(num_ + other.num_, den_);
    return *this;
  }
  *this = ratfn_normalize(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
  return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& other) {
  return *this += -other;
}

RationalFn& RationalFn::operator*=(const RationalFn& other) {
  if (is_polynomial() && other.is_polynomial()) {
    num_ = num_ * other.num_;
    return *this;
  }
  *this = ratfn_normalize(num_ * other.num_, den_ * other.den_);
  return *this;
}

RationalFn& RationalFn::operator/=(const RationalFn& other) {
  if (other.is_zero()) throw DivisionByZero("division by zero rational function");
  if (other.is_constant()) {
    num_ = num_.scaled(1 / other.num_.constant_term());
    return *this;
  }
  *this = ratfn_normalize(num_ * other.den_, den_ * other.num_);
  return *this;
}

std::string RationalFn::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace plectic
