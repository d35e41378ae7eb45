#pragma once

#include <string>

#include "plectic/exterior.hpp"

namespace plectic {

/// Canonical text of a form or multivector: terms in lexicographic
/// multi-index order, 1-based indices, '^' between basis factors, and
/// coefficients written so that parse_form / parse_multivector reads the
/// string back to an equal element. The zero element renders as "0".
std::string render_form(const Form& f);
std::string render_multivector(const Multivector& v);
std::string render_vector_field(const VectorField& v);
std::string render_function(const RationalFn& f);

}  // namespace plectic
