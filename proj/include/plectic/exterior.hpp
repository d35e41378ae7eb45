#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "plectic/ratfn.hpp"

namespace plectic {

/// Strictly increasing, 0-based coordinate indices naming a basis element
/// dx_{i1}^...^dx_{ik} or d_{i1}^...^d_{ik}.
using MultiIndex = std::vector<int>;

/// Sign of the merge I ++ J into sorted order: (-1)^(#pairs i in I, j in J
/// with i > j), or 0 when I and J share an index.
int merge_sign(const MultiIndex& a, const MultiIndex& b);
MultiIndex merge_indices(const MultiIndex& a, const MultiIndex& b);

/// All strictly increasing k-subsets of {0..dim-1} in lexicographic order.
std::vector<MultiIndex> multi_indices(std::size_t dim, int k);

struct FormKind {
  static constexpr const char* basis_prefix = "dx";
};
struct VectorKind {
  static constexpr const char* basis_prefix = "e";
};

/// Homogeneous element of the exterior algebra on a chart R^m, stored as a
/// sparse map from basis multi-index to nonzero rational-function
/// coefficient. Instantiated as Form (differential forms) and Multivector
/// (multivector fields); the two never mix.
///
/// A zero element still carries a degree, which may fall outside 0..m (e.g.
/// the exterior derivative of a top form). Equality treats all zeros alike.
template <class Kind>
class Graded {
 public:
  using Terms = std::map<MultiIndex, RationalFn>;

  Graded(std::size_t chart_dim, int degree);

  /// coeff * basis(indices). Indices must be strictly increasing.
  static Graded basis(std::size_t chart_dim, MultiIndex indices, RationalFn coeff);
  static Graded basis(std::size_t chart_dim, MultiIndex indices);
  static Graded function(RationalFn f);

  std::size_t chart_dim() const { return dim_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Zero if the multi-index is absent.
  RationalFn coefficient(const MultiIndex& idx) const;
  void add_term(const MultiIndex& idx, const RationalFn& coeff);

  Graded scaled(const RationalFn& f) const;
  Graded scaled(const Rational& c) const;

  Graded operator-() const;
  Graded& operator+=(const Graded& other);
  Graded& operator-=(const Graded& other);
  friend Graded operator+(Graded a, const Graded& b) { return a += b; }
  friend Graded operator-(Graded a, const Graded& b) { return a -= b; }

  friend bool operator==(const Graded& a, const Graded& b) { return graded_equal(a, b); }

  /// Debug rendering; the canonical text form lives in the frontend.
  std::string to_string() const;

 private:
  void check_chart(std::size_t other_dim) const;
  void check_degree(const Graded& other);

  std::size_t dim_;
  int degree_;
  Terms terms_;
};

using Form = Graded<FormKind>;
using Multivector = Graded<VectorKind>;

/// Exact equality; throws ChartMismatch for elements on different charts.
template <class Kind>
bool graded_equal(const Graded<Kind>& a, const Graded<Kind>& b);

bool form_equal(const Form& a, const Form& b);

template <class Kind>
Graded<Kind> wedge(const Graded<Kind>& a, const Graded<Kind>& b);

/// A multivector field of degree exactly one.
class VectorField {
 public:
  explicit VectorField(Multivector mv);
  static VectorField zero(std::size_t chart_dim);
  /// Field sum_i components[i] d_i.
  static VectorField from_components(const std::vector<RationalFn>& components);
  static VectorField coordinate(std::size_t chart_dim, int index);

  const Multivector& multivector() const { return mv_; }
  std::size_t chart_dim() const { return mv_.chart_dim(); }
  bool is_zero() const { return mv_.is_zero(); }
  RationalFn component(int index) const { return mv_.coefficient({index}); }
  std::vector<RationalFn> components() const;

  VectorField operator-() const { return VectorField(-mv_); }
  friend VectorField operator+(const VectorField& a, const VectorField& b) {
    return VectorField(a.mv_ + b.mv_);
  }
  friend VectorField operator-(const VectorField& a, const VectorField& b) {
    return VectorField(a.mv_ - b.mv_);
  }
  VectorField scaled(const RationalFn& f) const { return VectorField(mv_.scaled(f)); }
  friend bool operator==(const VectorField& a, const VectorField& b) { return a.mv_ == b.mv_; }

 private:
  Multivector mv_;
};

/// v1 ^ v2 ^ ... ^ vk as a degree-k multivector (the unit function for k = 0).
Multivector wedge_all(const std::vector<VectorField>& fields, std::size_t chart_dim);

extern template class Graded<FormKind>;
extern template class Graded<VectorKind>;

}  // namespace plectic
