#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "plectic/errors.hpp"
#include "plectic/exterior.hpp"
#include "plectic/linear.hpp"

namespace plectic {

/// d(omega) != 0. Carries the nonzero residual d(omega).
class NotClosedError : public Error {
 public:
  explicit NotClosedError(Form residual);
  const Form& residual() const { return residual_; }

 private:
  Form residual_;
};

/// The flat map v -> iota_v omega has a kernel. Carries a kernel vector.
class DegenerateError : public Error {
 public:
  explicit DegenerateError(VectorField witness);
  const VectorField& witness() const { return witness_; }

 private:
  VectorField witness_;
};

/// A validated n-plectic form on a chart: closed, and with injective flat
/// map over the fraction field.
class PlecticStructure {
 public:
  int n() const { return n_; }
  std::size_t chart_dim() const { return omega_.chart_dim(); }
  const Form& omega() const { return omega_; }

  /// One row per n-element multi-index (lexicographic), one column per
  /// coordinate: column i holds iota_{d_i} omega in the degree-n basis.
  const Matrix<RationalFn>& flat_matrix() const { return flat_; }
  const std::vector<MultiIndex>& row_basis() const { return rows_; }

  /// Rank drops detected at sample points. Not errors: a polynomial form may
  /// degenerate on a subvariety while being generically nondegenerate.
  const std::vector<std::string>& warnings() const { return warnings_; }

  /// Expansion of a degree-n form in the row basis.
  std::vector<RationalFn> to_row_vector(const Form& a) const;

 private:
  friend PlecticStructure validate_plectic(const Form&, int,
                                           const std::vector<std::vector<Rational>>*);
  PlecticStructure() : omega_(0, 0) {}

  int n_ = 0;
  Form omega_;
  std::vector<MultiIndex> rows_;
  Matrix<RationalFn> flat_;
  std::vector<std::string> warnings_;
};

/// Checks that omega is an n-plectic structure.
///
/// Closedness is decided symbolically. Nondegeneracy is certified as full
/// column rank of the flat matrix over the fraction field; in addition the
/// flat matrix is evaluated at the sample points (default: the origin and
/// the 2m points +-e_i) and any rank drop is recorded as a warning.
///
/// Throws DegreeMismatch, NotClosedError or DegenerateError.
PlecticStructure validate_plectic(
    const Form& omega, int n,
    const std::vector<std::vector<Rational>>* sample_points = nullptr);

/// An (n-1)-form together with its Hamiltonian vector field, satisfying
/// d alpha = -iota_{vf} omega.
class HamiltonianForm {
 public:
  const Form& alpha() const { return alpha_; }
  const VectorField& vf() const { return vf_; }

  /// Wraps (alpha, vf) after re-checking the defining equation. Throws
  /// InternalConsistencyError if it fails.
  static HamiltonianForm certify(const PlecticStructure& p, Form alpha, VectorField vf);

 private:
  HamiltonianForm(Form alpha, VectorField vf)
      : alpha_(std::move(alpha)), vf_(std::move(vf)) {}

  Form alpha_;
  VectorField vf_;
};

struct NotHamiltonian {
  enum class Reason {
    /// iota_v omega = -d alpha has no solution.
    kInconsistent,
    /// A solution exists but needs non-polynomial denominators.
    kRationalDenominator,
  };
  Reason reason;
};

std::string describe(NotHamiltonian::Reason reason);

using HamiltonianResult = std::variant<HamiltonianForm, NotHamiltonian>;

/// Solves iota_v omega = -d alpha for the Hamiltonian vector field.
/// Throws DegreeMismatch unless deg alpha = n - 1.
HamiltonianResult hamiltonian_vf(const PlecticStructure& p, const Form& alpha);

/// Like hamiltonian_vf but throws InvalidInput on NotHamiltonian.
HamiltonianForm require_hamiltonian(const PlecticStructure& p, const Form& alpha);

/// {a, b} = iota_{v_b} iota_{v_a} omega, with Hamiltonian field [v_a, v_b].
HamiltonianForm ham_bracket(const PlecticStructure& p, const HamiltonianForm& a,
                            const HamiltonianForm& b);

/// L_{v_a} omega; vanishes for every Hamiltonian form.
Form check_lemma_Lthm(const PlecticStructure& p, const HamiltonianForm& a);

struct IdentitySides {
  Form lhs;
  Form rhs;
  bool holds() const { return form_equal(lhs, rhs); }
};

/// lhs = {a1,{a2,a3}} - {{a1,a2},a3} - {a2,{a1,a3}},
/// rhs = -d iota(v1 ^ v2 ^ v3) omega.
IdentitySides check_jacobi_defect(const PlecticStructure& p, const HamiltonianForm& a1,
                                  const HamiltonianForm& a2, const HamiltonianForm& a3);

/// For Hamiltonian fields v1..vm (m >= 2):
/// lhs = d iota(v1^...^vm) omega,
/// rhs = (-1)^m sum_{i<j} (-1)^{i+j} iota([vi,vj] ^ v1 ^..^vi^..^vj^..^ vm) omega.
IdentitySides check_tech_lemma(const PlecticStructure& p,
                               const std::vector<VectorField>& vfs);

}  // namespace plectic
