#include "plectic/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "plectic/errors.hpp"

namespace plectic {

namespace {

unsigned exps_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

}  // namespace

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned da = exps_degree(a);
  const unsigned db = exps_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Poly::Poly(std::size_t chart_dim) : dim_(chart_dim) {}

Poly Poly::constant(std::size_t chart_dim, const Rational& c) {
  Poly p(chart_dim);
  p.add_term(Exponents(chart_dim, 0), c);
  return p;
}

Poly Poly::variable(std::size_t chart_dim, std::size_t index, unsigned power) {
  if (index >= chart_dim) {
    throw IndexError("coordinate index " + std::to_string(index + 1) +
                     " outside chart of dimension " +
                     std::to_string(chart_dim));
  }
  Exponents e(chart_dim, 0);
  e[index] = static_cast<std::uint16_t>(power);
  return monomial(chart_dim, std::move(e), Rational(1));
}

Poly Poly::monomial(std::size_t chart_dim, Exponents exps, const Rational& c) {
  if (exps.size() != chart_dim) {
    throw ChartMismatch("exponent vector length does not match chart");
  }
  Poly p(chart_dim);
  p.add_term(exps, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && exps_degree(terms_.begin()->first) == 0);
}

bool Poly::is_one() const {
  return terms_.size() == 1 && exps_degree(terms_.begin()->first) == 0 &&
         terms_.begin()->second == 1;
}

Rational Poly::constant_term() const {
  auto it = terms_.find(Exponents(dim_, 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(exps_degree(terms_.rbegin()->first));
}

int Poly::degree_in(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
  return d;
}

const Exponents& Poly::leading_exponents() const {
  if (terms_.empty()) throw InvalidInput("leading term of zero polynomial");
  return terms_.rbegin()->first;
}

const Rational& Poly::leading_coefficient() const {
  if (terms_.empty()) throw InvalidInput("leading term of zero polynomial");
  return terms_.rbegin()->second;
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  if (point.size() != dim_) {
    throw ChartMismatch("evaluation point has wrong dimension");
  }
  Rational total(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < dim_; ++i) {
      for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
    }
    total += t;
  }
  return total;
}

void Poly::add_term(const Exponents& exps, const Rational& c) {
  if (plectic::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (plectic::is_zero(it->second)) terms_.erase(it);
  }
}

Poly Poly::scaled(const Rational& c) const {
  Poly out(dim_);
  if (plectic::is_zero(c)) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, v * c);
  return out;
}

Poly Poly::monic() const {
  if (terms_.empty() || leading_coefficient() == 1) return *this;
  return scaled(1 / leading_coefficient());
}

Poly Poly::operator-() const { return scaled(Rational(-1)); }

Poly& Poly::operator+=(const Poly& other) {
  check_chart(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  check_chart(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_chart(b);
  Poly out(a.dim_);
  if (a.is_zero() || b.is_zero()) return out;
  Exponents e(a.dim_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < a.dim_; ++i) {
        e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      }
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

bool operator==(const Poly& a, const Poly& b) {
  return a.dim_ == b.dim_ && a.terms_ == b.terms_;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || exps_degree(e) == 0) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < dim_; ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << '*';
      os << 'x' << (i + 1);
      if (e[i] > 1) os << "**" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

void Poly::check_chart(const Poly& other) const {
  if (dim_ != other.dim_) {
    throw ChartMismatch("polynomials on charts of dimension " +
                        std::to_string(dim_) + " and " +
                        std::to_string(other.dim_));
  }
}

Poly poly_partial(const Poly& p, std::size_t i) {
  if (i >= p.chart_dim()) {
    throw IndexError("partial derivative index " + std::to_string(i + 1) +
                     " outside chart of dimension " +
                     std::to_string(p.chart_dim()));
  }
  Poly out(p.chart_dim());
  for (const auto& [e, c] : p.terms()) {
    if (e[i] == 0) continue;
    Exponents d = e;
    --d[i];
    out.add_term(d, c * e[i]);
  }
  return out;
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  const std::size_t dim = a.chart_dim();
  Poly quotient(dim);
  Poly rest = a;
  const Exponents& lead_b = b.leading_exponents();
  const Rational& lead_c = b.leading_coefficient();
  Exponents shift(dim);
  while (!rest.is_zero()) {
    const Exponents& lead_r = rest.leading_exponents();
    for (std::size_t i = 0; i < dim; ++i) {
      if (lead_r[i] < lead_b[i]) return std::nullopt;
      shift[i] = static_cast<std::uint16_t>(lead_r[i] - lead_b[i]);
    }
    Poly step = Poly::monomial(dim, shift, rest.leading_coefficient() / lead_c);
    rest -= step * b;
    quotient += step;
  }
  return quotient;
}

namespace {

// Index of the highest coordinate occurring in p, or -1 for constants.
int highest_var(const Poly& p) {
  int v = -1;
  for (const auto& [e, c] : p.terms()) {
    for (int i = static_cast<int>(e.size()) - 1; i > v; --i) {
      if (e[i] != 0) {
        v = i;
        break;
      }
    }
  }
  return v;
}

// Coefficients of p viewed as a polynomial in x_var.
std::vector<Poly> split_in(const Poly& p, std::size_t var) {
  std::vector<Poly> out(static_cast<std::size_t>(std::max(p.degree_in(var), 0)) + 1,
                        Poly(p.chart_dim()));
  for (const auto& [e, c] : p.terms()) {
    Exponents rest = e;
    rest[var] = 0;
    out[e[var]].add_term(rest, c);
  }
  return out;
}

Poly leading_in(const Poly& p, std::size_t var) {
  return split_in(p, var).back();
}

Poly content_in(const Poly& p, std::size_t var) {
  Poly g(p.chart_dim());
  for (const Poly& c : split_in(p, var)) {
    if (c.is_zero()) continue;
    g = poly_gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

Poly primitive_in(const Poly& p, std::size_t var) {
  if (p.is_zero()) return p;
  return *divide_exact(p, content_in(p, var));
}

// Pseudo-remainder of a by b with respect to x_var.
Poly pseudo_remainder(const Poly& a, const Poly& b, std::size_t var) {
  const int db = b.degree_in(var);
  const Poly lead_b = leading_in(b, var);
  Poly r = a;
  while (!r.is_zero() && r.degree_in(var) >= db) {
    const int dr = r.degree_in(var);
    Poly shift = Poly::variable(r.chart_dim(), var,
                                static_cast<unsigned>(dr - db));
    r = lead_b * r - leading_in(r, var) * shift * b;
  }
  return r;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.chart_dim() != b.chart_dim()) {
    throw ChartMismatch("gcd of polynomials on different charts");
  }
  const std::size_t dim = a.chart_dim();
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  const int v = std::max(highest_var(a), highest_var(b));
  if (v < 0) return Poly::constant(dim, Rational(1));
  const auto var = static_cast<std::size_t>(v);

  const Poly ca = content_in(a, var);
  const Poly cb = content_in(b, var);
  const Poly content_gcd = poly_gcd(ca, cb);

  Poly p = *divide_exact(a, ca);
  Poly q = *divide_exact(b, cb);
  if (p.degree_in(var) < q.degree_in(var)) std::swap(p, q);
  // Primitive remainder sequence in x_var.
  while (!q.is_zero()) {
    Poly r = pseudo_remainder(p, q, var);
    p = std::move(q);
    q = primitive_in(r, var).monic();
  }
  return (primitive_in(p, var) * content_gcd).monic();
}

}  // namespace plectic
