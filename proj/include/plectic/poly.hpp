#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace plectic {

/// Arbitrary precision rational; GMP keeps it in lowest terms with a
/// positive denominator.
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Exponent vector of a monomial, one entry per chart coordinate.
using Exponents = std::vector<std::uint16_t>;

/// Graded lexicographic order: total degree first, then lexicographic with
/// x1 > x2 > ... > xm.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Multivariate polynomial with rational coefficients in the chart
/// coordinates x1..xm. Coordinate indices are 0-based in the API.
class Poly {
 public:
  using Terms = std::map<Exponents, Rational, GrlexLess>;

  explicit Poly(std::size_t chart_dim);

  static Poly constant(std::size_t chart_dim, const Rational& c);
  static Poly variable(std::size_t chart_dim, std::size_t index,
                       unsigned power = 1);
  static Poly monomial(std::size_t chart_dim, Exponents exps,
                       const Rational& c);

  std::size_t chart_dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  /// Coefficient of the constant monomial.
  Rational constant_term() const;

  /// -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(std::size_t var) const;

  /// Largest term under GrlexLess. Requires a nonzero polynomial.
  const Exponents& leading_exponents() const;
  const Rational& leading_coefficient() const;

  Rational evaluate(std::span<const Rational> point) const;

  /// Accumulates c * x^exps, dropping the term if it cancels.
  void add_term(const Exponents& exps, const Rational& c);

  Poly scaled(const Rational& c) const;
  /// Scaled so the leading coefficient is 1; zero stays zero.
  Poly monic() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);

  friend bool operator==(const Poly& a, const Poly& b);

  std::string to_string() const;

 private:
  void check_chart(const Poly& other) const;

  std::size_t dim_;
  Terms terms_;
};

/// d p / d x_i, with i 0-based. Throws IndexError when i >= chart_dim.
Poly poly_partial(const Poly& p, std::size_t i);

/// Quotient a / b when b divides a exactly, nullopt otherwise.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

/// Monic greatest common divisor (zero only when both inputs are zero).
Poly poly_gcd(const Poly& a, const Poly& b);

}  // namespace plectic
