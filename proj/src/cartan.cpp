#include "plectic/cartan.hpp"

#include <string>
#include <utility>
#include <vector>

#include "plectic/errors.hpp"

namespace plectic {

namespace {

void check_same_chart(std::size_t a, std::size_t b) {
  if (a != b) {
    throw ChartMismatch("operands on charts of dimension " + std::to_string(a) +
                        " and " + std::to_string(b));
  }
}

// iota_{d_j} applied to the basis form dx_I: the sign and the remaining
// multi-index, or sign 0 when j is not in I.
std::pair<int, MultiIndex> contract_basis(int j, const MultiIndex& idx) {
  for (std::size_t r = 0; r < idx.size(); ++r) {
    if (idx[r] == j) {
      MultiIndex rest;
      rest.reserve(idx.size() - 1);
      rest.insert(rest.end(), idx.begin(), idx.begin() + static_cast<long>(r));
      rest.insert(rest.end(), idx.begin() + static_cast<long>(r) + 1, idx.end());
      return {r % 2 == 0 ? 1 : -1, std::move(rest)};
    }
    if (idx[r] > j) break;
  }
  return {0, {}};
}

}  // namespace

Form exterior_derivative(const Form& a) {
  const std::size_t dim = a.chart_dim();
  Form out(dim, a.degree() + 1);
  for (const auto& [idx, c] : a.terms()) {
    for (std::size_t j = 0; j < dim; ++j) {
      const MultiIndex one{static_cast<int>(j)};
      const int sign = merge_sign(one, idx);
      if (sign == 0) continue;
      RationalFn dc = c.partial(j);
      if (dc.is_zero()) continue;
      out.add_term(merge_indices(one, idx), sign > 0 ? dc : -dc);
    }
  }
  return out;
}

Form interior_product(const Multivector& v, const Form& a) {
  check_same_chart(v.chart_dim(), a.chart_dim());
  Form out(a.chart_dim(), a.degree() - v.degree());
  if (v.degree() > a.degree()) return out;
  for (const auto& [vidx, vc] : v.terms()) {
    for (const auto& [aidx, ac] : a.terms()) {
      // iota(d_{j1}^...^d_{jk}) = iota_{d_jk} ... iota_{d_j1}: j1 acts first.
      int sign = 1;
      MultiIndex rest = aidx;
      for (int j : vidx) {
        auto [s, r] = contract_basis(j, rest);
        sign *= s;
        if (sign == 0) break;
        rest = std::move(r);
      }
      if (sign == 0) continue;
      RationalFn c = vc * ac;
      out.add_term(rest, sign > 0 ? c : -c);
    }
  }
  return out;
}

Form interior_product(const VectorField& v, const Form& a) {
  return interior_product(v.multivector(), a);
}

Form lie_derivative(const Multivector& v, const Form& a) {
  Form first = exterior_derivative(interior_product(v, a));
  Form second = interior_product(v, exterior_derivative(a));
  return v.degree() % 2 == 0 ? first - second : first + second;
}

Form lie_derivative(const VectorField& v, const Form& a) {
  return lie_derivative(v.multivector(), a);
}

VectorField vf_bracket(const VectorField& u, const VectorField& v) {
  check_same_chart(u.chart_dim(), v.chart_dim());
  const std::size_t dim = u.chart_dim();
  Multivector out(dim, 1);
  for (const auto& [ui, uc] : u.multivector().terms()) {
    for (const auto& [vi, vc] : v.multivector().terms()) {
      // [f d_a, g d_b] = f (d_a g) d_b - g (d_b f) d_a
      const auto a = static_cast<std::size_t>(ui[0]);
      const auto b = static_cast<std::size_t>(vi[0]);
      RationalFn dg = vc.partial(a);
      if (!dg.is_zero()) out.add_term(vi, uc * dg);
      RationalFn df = uc.partial(b);
      if (!df.is_zero()) out.add_term(ui, -(vc * df));
    }
  }
  return VectorField(std::move(out));
}

namespace {

// Splits the monomial coeff * d_{idx} into its decomposable factors, with the
// coefficient carried by the first factor.
std::vector<VectorField> decompose(const MultiIndex& idx, const RationalFn& coeff,
                                   std::size_t dim) {
  std::vector<VectorField> factors;
  factors.reserve(idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r) {
    RationalFn c = r == 0 ? coeff : RationalFn::constant(dim, Rational(1));
    factors.emplace_back(Multivector::basis(dim, {idx[r]}, std::move(c)));
  }
  return factors;
}

std::vector<VectorField> all_but(const std::vector<VectorField>& fields, std::size_t skip) {
  std::vector<VectorField> out;
  out.reserve(fields.size() - 1);
  for (std::size_t r = 0; r < fields.size(); ++r) {
    if (r != skip) out.push_back(fields[r]);
  }
  return out;
}

}  // namespace

Multivector schouten_bracket(const Multivector& u, const Multivector& v) {
  check_same_chart(u.chart_dim(), v.chart_dim());
  if (u.degree() < 1 || v.degree() < 1) {
    throw InvalidInput("Schouten bracket needs multivectors of degree >= 1");
  }
  const std::size_t dim = u.chart_dim();
  Multivector out(dim, u.degree() + v.degree() - 1);
  for (const auto& [ui, uc] : u.terms()) {
    const std::vector<VectorField> us = decompose(ui, uc, dim);
    for (const auto& [vi, vc] : v.terms()) {
      const std::vector<VectorField> vs = decompose(vi, vc, dim);
      for (std::size_t i = 0; i < us.size(); ++i) {
        const Multivector rest_u = wedge_all(all_but(us, i), dim);
        for (std::size_t j = 0; j < vs.size(); ++j) {
          // (-1)^{i+j} with 1-based i, j
          const bool negative = (i + j) % 2 == 1;
          Multivector term = wedge(vf_bracket(us[i], vs[j]).multivector(), rest_u);
          if (term.is_zero()) continue;
          term = wedge(term, wedge_all(all_but(vs, j), dim));
          if (negative) {
            out -= term;
          } else {
            out += term;
          }
        }
      }
    }
  }
  return out;
}

Form homotopy_operator(const Form& a) {
  const std::size_t dim = a.chart_dim();
  const int k = a.degree();
  Form out(dim, k - 1);
  if (k < 1) return out;
  for (const auto& [idx, c] : a.terms()) {
    if (!c.is_polynomial()) {
      throw InvalidInput("homotopy operator needs polynomial coefficients");
    }
    // h(x^e dx_I) = 1/(k + |e|) * x^e * iota_E dx_I, with E the Euler field.
    Poly scaled(dim);
    for (const auto& [e, q] : c.num().terms()) {
      unsigned total = 0;
      for (auto x : e) total += x;
      scaled.add_term(e, q / static_cast<long>(k + static_cast<int>(total)));
    }
    for (std::size_t r = 0; r < idx.size(); ++r) {
      MultiIndex rest;
      rest.reserve(idx.size() - 1);
      for (std::size_t s = 0; s < idx.size(); ++s) {
        if (s != r) rest.push_back(idx[s]);
      }
      Poly coeff = scaled * Poly::variable(dim, static_cast<std::size_t>(idx[r]));
      if (r % 2 == 1) coeff = -coeff;
      out.add_term(rest, RationalFn(std::move(coeff)));
    }
  }
  return out;
}

std::optional<Form> poincare_primitive(const Form& a) {
  if (a.degree() < 1) {
    throw InvalidInput("poincare_primitive needs a form of degree >= 1");
  }
  if (!exterior_derivative(a).is_zero()) return std::nullopt;
  return homotopy_operator(a);
}

}  // namespace plectic
