#include "plectic/exterior.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "plectic/errors.hpp"

namespace plectic {

int merge_sign(const MultiIndex& a, const MultiIndex& b) {
  // Linear merge; each time an element of b overtakes the remaining elements
  // of a it crosses them all.
  int transpositions = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return 0;
    if (a[i] < b[j]) {
      ++i;
    } else {
      transpositions += static_cast<int>(a.size() - i);
      ++j;
    }
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

MultiIndex merge_indices(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<MultiIndex> multi_indices(std::size_t dim, int k) {
  std::vector<MultiIndex> out;
  if (k < 0 || static_cast<std::size_t>(k) > dim) return out;
  MultiIndex idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i;
  const int n = static_cast<int>(dim);
  while (true) {
    out.push_back(idx);
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return out;
}

namespace {

void check_multi_index(const MultiIndex& idx, std::size_t dim) {
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 0 || static_cast<std::size_t>(idx[i]) >= dim) {
      throw IndexError("basis index " + std::to_string(idx[i] + 1) +
                       " outside chart of dimension " + std::to_string(dim));
    }
    if (i > 0 && idx[i - 1] >= idx[i]) {
      throw InvalidInput("multi-index must be strictly increasing");
    }
  }
}

}  // namespace

template <class Kind>
Graded<Kind>::Graded(std::size_t chart_dim, int degree)
    : dim_(chart_dim), degree_(degree) {}

template <class Kind>
Graded<Kind> Graded<Kind>::basis(std::size_t chart_dim, MultiIndex indices,
                                 RationalFn coeff) {
  check_multi_index(indices, chart_dim);
  Graded out(chart_dim, static_cast<int>(indices.size()));
  out.check_chart(coeff.chart_dim());
  out.add_term(indices, coeff);
  return out;
}

template <class Kind>
Graded<Kind> Graded<Kind>::basis(std::size_t chart_dim, MultiIndex indices) {
  return basis(chart_dim, std::move(indices),
               RationalFn::constant(chart_dim, Rational(1)));
}

template <class Kind>
Graded<Kind> Graded<Kind>::function(RationalFn f) {
  const std::size_t dim = f.chart_dim();
  return basis(dim, {}, std::move(f));
}

template <class Kind>
RationalFn Graded<Kind>::coefficient(const MultiIndex& idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? RationalFn(dim_) : it->second;
}

template <class Kind>
void Graded<Kind>::add_term(const MultiIndex& idx, const RationalFn& coeff) {
  if (coeff.is_zero()) return;
  if (static_cast<int>(idx.size()) != degree_) {
    throw DegreeMismatch("term of degree " + std::to_string(idx.size()) +
                         " added to element of degree " + std::to_string(degree_));
  }
  auto [it, inserted] = terms_.try_emplace(idx, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

template <class Kind>
Graded<Kind> Graded<Kind>::scaled(const RationalFn& f) const {
  check_chart(f.chart_dim());
  Graded out(dim_, degree_);
  if (f.is_zero()) return out;
  for (const auto& [idx, c] : terms_) {
    out.terms_.emplace_hint(out.terms_.end(), idx, c * f);
  }
  return out;
}

template <class Kind>
Graded<Kind> Graded<Kind>::scaled(const Rational& c) const {
  Graded out(dim_, degree_);
  if (plectic::is_zero(c)) return out;
  for (const auto& [idx, v] : terms_) {
    out.terms_.emplace_hint(out.terms_.end(), idx, v.scaled(c));
  }
  return out;
}

template <class Kind>
Graded<Kind> Graded<Kind>::operator-() const {
  return scaled(Rational(-1));
}

template <class Kind>
void Graded<Kind>::check_chart(std::size_t other_dim) const {
  if (other_dim != dim_) {
    throw ChartMismatch("operands on charts of dimension " + std::to_string(dim_) +
                        " and " + std::to_string(other_dim));
  }
}

template <class Kind>
void Graded<Kind>::check_degree(const Graded& other) {
  check_chart(other.dim_);
  if (other.degree_ == degree_ || other.is_zero()) return;
  if (is_zero()) {
    degree_ = other.degree_;
    return;
  }
  throw DegreeMismatch("sum of elements of degree " + std::to_string(degree_) +
                       " and " + std::to_string(other.degree_));
}

template <class Kind>
Graded<Kind>& Graded<Kind>::operator+=(const Graded& other) {
  check_degree(other);
  for (const auto& [idx, c] : other.terms_) add_term(idx, c);
  return *this;
}

template <class Kind>
Graded<Kind>& Graded<Kind>::operator-=(const Graded& other) {
  check_degree(other);
  for (const auto& [idx, c] : other.terms_) add_term(idx, -c);
  return *this;
}

template <class Kind>
std::string Graded<Kind>::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.to_string() << ')';
    for (std::size_t i = 0; i < idx.size(); ++i) {
      os << (i == 0 ? "*" : "^") << Kind::basis_prefix << idx[i] + 1;
    }
  }
  return os.str();
}

template <class Kind>
bool graded_equal(const Graded<Kind>& a, const Graded<Kind>& b) {
  if (a.chart_dim() != b.chart_dim()) {
    throw ChartMismatch("comparing elements on charts of dimension " +
                        std::to_string(a.chart_dim()) + " and " +
                        std::to_string(b.chart_dim()));
  }
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.degree() == b.degree() && a.terms() == b.terms();
}

bool form_equal(const Form& a, const Form& b) { return graded_equal(a, b); }

template <class Kind>
Graded<Kind> wedge(const Graded<Kind>& a, const Graded<Kind>& b) {
  if (a.chart_dim() != b.chart_dim()) {
    throw ChartMismatch("wedge of elements on charts of dimension " +
                        std::to_string(a.chart_dim()) + " and " +
                        std::to_string(b.chart_dim()));
  }
  Graded<Kind> out(a.chart_dim(), a.degree() + b.degree());
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) {
      const int sign = merge_sign(ia, ib);
      if (sign == 0) continue;
      RationalFn c = ca * cb;
      if (sign < 0) c = -c;
      out.add_term(merge_indices(ia, ib), c);
    }
  }
  return out;
}

template bool graded_equal(const Graded<FormKind>&, const Graded<FormKind>&);
template bool graded_equal(const Graded<VectorKind>&, const Graded<VectorKind>&);
template Graded<FormKind> wedge(const Graded<FormKind>&, const Graded<FormKind>&);
template Graded<VectorKind> wedge(const Graded<VectorKind>&, const Graded<VectorKind>&);
template class Graded<FormKind>;
template class Graded<VectorKind>;

VectorField::VectorField(Multivector mv) : mv_(std::move(mv)) {
  if (mv_.degree() != 1) {
    if (!mv_.is_zero()) {
      throw DegreeMismatch("vector field must have degree 1, got " +
                           std::to_string(mv_.degree()));
    }
    mv_ = Multivector(mv_.chart_dim(), 1);
  }
}

VectorField VectorField::zero(std::size_t chart_dim) {
  return VectorField(Multivector(chart_dim, 1));
}

VectorField VectorField::from_components(const std::vector<RationalFn>& components) {
  if (components.empty()) throw InvalidInput("vector field with no components");
  const std::size_t dim = components.size();
  Multivector mv(dim, 1);
  for (std::size_t i = 0; i < dim; ++i) {
    if (components[i].chart_dim() != dim) {
      throw ChartMismatch("vector field component on a different chart");
    }
    mv.add_term({static_cast<int>(i)}, components[i]);
  }
  return VectorField(std::move(mv));
}

VectorField VectorField::coordinate(std::size_t chart_dim, int index) {
  return VectorField(Multivector::basis(chart_dim, {index}));
}

std::vector<RationalFn> VectorField::components() const {
  std::vector<RationalFn> out(chart_dim(), RationalFn(chart_dim()));
  for (const auto& [idx, c] : mv_.terms()) out[static_cast<std::size_t>(idx[0])] = c;
  return out;
}

Multivector wedge_all(const std::vector<VectorField>& fields, std::size_t chart_dim) {
  Multivector out = Multivector::function(RationalFn::constant(chart_dim, Rational(1)));
  for (const VectorField& v : fields) out = wedge(out, v.multivector());
  return out;
}

}  // namespace plectic
