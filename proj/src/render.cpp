#include "plectic/render.hpp"

#include <sstream>

namespace plectic {

namespace {

std::string basis_text(const MultiIndex& idx, const char* prefix) {
  std::string out;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) out += '^';
    out += prefix + std::to_string(idx[k] + 1);
  }
  return out;
}

bool is_single_monomial(const RationalFn& f) {
  return f.is_polynomial() && f.num().terms().size() == 1;
}

// Returns the text of one term without its sign and whether the sign is
// negative.
std::pair<std::string, bool> term_text(const RationalFn& c, const std::string& basis) {
  if (basis.empty()) {
    if (!c.is_polynomial()) return {"(" + c.num().to_string() + ")/(" + c.den().to_string() + ")", false};
    if (is_single_monomial(c)) {
      const bool negative = sgn(c.num().terms().begin()->second) < 0;
      return {(negative ? -c : c).num().to_string(), negative};
    }
    return {c.num().to_string(), false};
  }
  if (c.is_one()) return {basis, false};
  if (is_single_monomial(c)) {
    const bool negative = sgn(c.num().terms().begin()->second) < 0;
    const RationalFn mag = negative ? -c : c;
    if (mag.is_one()) return {basis, negative};
    return {mag.num().to_string() + "*" + basis, negative};
  }
  if (c.is_polynomial()) return {"(" + c.num().to_string() + ")*" + basis, false};
  return {"(" + c.num().to_string() + ")/(" + c.den().to_string() + ")*" + basis, false};
}

template <class Kind>
std::string render(const Graded<Kind>& g) {
  if (g.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, c] : g.terms()) {
    const auto [text, negative] = term_text(c, basis_text(idx, Kind::basis_prefix));
    if (first) {
      os << (negative ? "-" : "") << text;
    } else {
      os << (negative ? " - " : " + ") << text;
    }
    first = false;
  }
  return os.str();
}

}  // namespace

std::string render_form(const Form& f) { return render(f); }
std::string render_multivector(const Multivector& v) { return render(v); }
std::string render_vector_field(const VectorField& v) { return render(v.multivector()); }

std::string render_function(const RationalFn& f) {
  return render(Form::function(f));
}

}  // namespace plectic
