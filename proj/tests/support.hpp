#pragma once

#include <string>

#include "plectic/parse.hpp"
#include "plectic/ratfn.hpp"

namespace plectic::testing {

inline RationalFn fn(const std::string& text, std::size_t dim) {
  const Form f = parse_form(text, dim);
  return f.is_zero() ? RationalFn(dim) : f.coefficient({});
}

inline Poly poly(const std::string& text, std::size_t dim) {
  const RationalFn f = fn(text, dim);
  return f.num();
}

inline Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace plectic::testing
