#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plectic/plectic.hpp"

namespace plectic {

/// Bijection of {0..k-1}, stored as its list of images.
class Permutation {
 public:
  /// Throws InvalidPermutation unless images is a bijection of 0..k-1.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int k);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  /// (-1)^sigma from the inversion count.
  int sign() const;

  /// Cycle notation with 1-based labels, "(1)" for the identity.
  std::string cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Koszul sign e(sigma; x1..xk) for elements of the given degrees: the sign
/// with x1 ^ ... ^ xk = e x_{sigma(1)} ^ ... ^ x_{sigma(k)} in the free graded
/// commutative algebra. Excludes (-1)^sigma.
int koszul_sign(const Permutation& sigma, const std::vector<int>& degrees);

/// All (p,q)-unshuffles, ordered lexicographically by their first block.
std::vector<Permutation> unshuffles(int p, int q);

/// Element of the complex L: degree 0 holds a Hamiltonian (n-1)-form with
/// its vector field; degree i in 1..n-1 holds an (n-1-i)-form.
class GradedElement {
 public:
  static GradedElement hamiltonian(HamiltonianForm h);
  /// Throws InvalidInput unless 1 <= degree <= n-1 and the payload has form
  /// degree n-1-degree.
  static GradedElement positive(const PlecticStructure& p, int degree, Form payload);
  /// Dispatches on degree; degree 0 solves for the Hamiltonian field and
  /// throws InvalidInput if there is none.
  static GradedElement from_form(const PlecticStructure& p, int degree, const Form& payload);

  int degree() const { return degree_; }
  const Form& payload() const { return payload_; }
  /// Present exactly when degree() == 0.
  const std::optional<VectorField>& vf() const { return vf_; }
  bool is_zero() const { return payload_.is_zero(); }

  /// Degree-0 view; throws InvalidInput for positive degree.
  HamiltonianForm as_hamiltonian(const PlecticStructure& p) const;

 private:
  GradedElement(int degree, Form payload, std::optional<VectorField> vf)
      : degree_(degree), payload_(std::move(payload)), vf_(std::move(vf)) {}

  int degree_;
  Form payload_;
  std::optional<VectorField> vf_;
};

/// An element of L or zero. nullopt also stands for results with no slot in
/// L (degree below 0 or above n-1).
using GradedValue = std::optional<GradedElement>;

/// Payload form of value, or the zero form that would sit in the given
/// degree of L.
Form payload_or_zero(const PlecticStructure& p, const GradedValue& value, int degree);

/// The k-ary bracket of the Lie n-algebra:
///   l_1 = d on positive degree, 0 on degree 0;
///   l_k (k >= 2) = 0 unless all inputs have degree 0, in which case it is
///   (-1)^{k/2+1} iota(v1^...^vk) omega for even k and
///   (-1)^{(k-1)/2} iota(v1^...^vk) omega for odd k.
GradedValue l_k(const PlecticStructure& p, int k, const std::vector<GradedElement>& elems);

/// Sign of l_k on all-degree-0 inputs.
int l_k_sign(int k);

struct JacobiTerm {
  int i;  // arity of the inner bracket
  int j;  // arity of the outer bracket
  Permutation sigma;
  int sign;           // (-1)^sigma e(sigma) (-1)^{i(j-1)}
  Form contribution;  // signed payload, zero when the term vanishes
};

struct JacobiReport {
  int arity;
  int degree;     // degree in L the residual lives in
  Form residual;  // payload of the residual, sum of all contributions
  std::vector<JacobiTerm> trace;
  bool is_zero() const { return residual.is_zero(); }
};

/// Left-hand side of the generalized Jacobi identity of arity m, evaluated
/// term by term over i + j = m + 1 and sigma in Sh(i, m - i).
JacobiReport gen_jacobi_residual(const PlecticStructure& p, int m,
                                 const std::vector<GradedElement>& elems);

/// Differential of the dg Leibniz algebra: d on positive degree, zero on
/// degree 0.
GradedValue leibniz_delta(const PlecticStructure& p, const GradedElement& elem);

/// [[a, b]] = L_{v_a} b when deg a = 0, zero otherwise. Degree preserving.
GradedValue leibniz_bracket(const PlecticStructure& p, const GradedElement& a,
                            const GradedElement& b);

struct LeibnizReport {
  /// delta[[a,b]] - [[delta a,b]] - (-1)^{deg a} [[a,delta b]]
  Form derivation;
  /// [[a,[[b,c]]]] - [[[[a,b]],c]] - (-1)^{deg a deg b} [[b,[[a,c]]]]
  Form jacobi;
  /// [[a,b]] + [[b,a]] - d(iota_{v_a} b + iota_{v_b} a); only for degree-0 a, b.
  std::optional<Form> skew;

  bool all_zero() const {
    return derivation.is_zero() && jacobi.is_zero() && (!skew || skew->is_zero());
  }
};

LeibnizReport check_leibniz_axioms(const PlecticStructure& p, const GradedElement& a,
                                   const GradedElement& b, const GradedElement& c);

/// lhs = L_{v_a} b, rhs = {a, b} + d iota_{v_a} b.
IdentitySides check_der_lemma(const PlecticStructure& p, const HamiltonianForm& a,
                              const HamiltonianForm& b);

}  // namespace plectic
