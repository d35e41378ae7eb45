#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "plectic/poly.hpp"

namespace plectic {

/// Element of the fraction field Q(x1..xm), kept in canonical form: the
/// numerator and denominator are coprime and the denominator is monic under
/// the graded lexicographic order. Equality is therefore structural.
class RationalFn {
 public:
  explicit RationalFn(std::size_t chart_dim);
  RationalFn(Poly p);  // NOLINT(google-explicit-constructor)

  static RationalFn constant(std::size_t chart_dim, const Rational& c);
  static RationalFn variable(std::size_t chart_dim, std::size_t index);

  std::size_t chart_dim() const { return num_.chart_dim(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }

  /// nullopt when the denominator vanishes at the point.
  std::optional<Rational> evaluate(std::span<const Rational> point) const;

  RationalFn partial(std::size_t i) const;
  RationalFn inverse() const;
  RationalFn scaled(const Rational& c) const;

  RationalFn operator-() const;
  RationalFn& operator+=(const RationalFn& other);
  RationalFn& operator-=(const RationalFn& other);
  RationalFn& operator*=(const RationalFn& other);
  RationalFn& operator/=(const RationalFn& other);
  friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
  friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
  friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
  friend RationalFn operator/(RationalFn a, const RationalFn& b) { return a /= b; }

  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  friend RationalFn ratfn_normalize(Poly num, Poly den);
  RationalFn(Poly num, Poly den, bool canonical);

  Poly num_;
  Poly den_;
};

inline bool is_zero(const RationalFn& f) { return f.is_zero(); }

/// Canonical representative of num / den. Throws DivisionByZero if den = 0.
RationalFn ratfn_normalize(Poly num, Poly den);

}  // namespace plectic
