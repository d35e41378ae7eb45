#pragma once

#include <optional>

#include "plectic/exterior.hpp"

namespace plectic {

/// de Rham differential. On a top-degree form the result is the zero
/// (m+1)-form.
Form exterior_derivative(const Form& a);

/// Interior product of a multivector with a form, with the nesting
/// iota(v1^...^vk) a = iota_{vk} ... iota_{v1} a on decomposables, extended
/// linearly over coefficient functions. Zero (of degree deg a - deg v) when
/// deg v > deg a.
Form interior_product(const Multivector& v, const Form& a);
Form interior_product(const VectorField& v, const Form& a);

/// L_v a = d iota(v) a - (-1)^{deg v} iota(v) d a, for v of any degree.
Form lie_derivative(const Multivector& v, const Form& a);
Form lie_derivative(const VectorField& v, const Form& a);

/// Lie bracket [u, v] of vector fields.
VectorField vf_bracket(const VectorField& u, const VectorField& v);

/// Schouten bracket of multivectors of degrees p, q >= 1; the result has
/// degree p + q - 1. Each monomial f d_{i1}^...^d_{ip} is treated as the
/// decomposable (f d_{i1}) ^ d_{i2} ^ ... ^ d_{ip} and the double-sum formula
/// for decomposables is applied term by term.
Multivector schouten_bracket(const Multivector& u, const Multivector& v);

/// Radial homotopy operator h of the Poincare lemma for star-shaped domains
/// (around the origin), so that d h + h d = id in positive degree. Requires
/// polynomial coefficients.
Form homotopy_operator(const Form& a);

/// A primitive b with d b = a, or nullopt if a is not closed.
/// Requires deg a >= 1 and polynomial coefficients.
std::optional<Form> poincare_primitive(const Form& a);

}  // namespace plectic
