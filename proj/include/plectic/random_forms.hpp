#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "plectic/homotopy.hpp"
#include "plectic/plectic.hpp"

namespace plectic {

/// Deterministic generator: the same seed yields the same stream on every
/// platform (mt19937_64 plus our own range reduction).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Seeded from several words through std::seed_seq.
  Rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t substream);

  std::uint64_t bits() { return engine_(); }
  /// Uniform in [lo, hi].
  int uniform(int lo, int hi);
  bool chance(int num, int den) { return uniform(0, den - 1) < num; }
  /// Nonzero rational a/b with |a| <= 3, 1 <= b <= 3.
  Rational small_rational();

 private:
  std::mt19937_64 engine_;
};

/// Exponent vectors of total degree <= max_deg in lexicographic order.
std::vector<Exponents> monomials_up_to(std::size_t dim, int max_deg);

Poly random_poly(Rng& rng, std::size_t dim, int max_deg, int max_terms = 2);
Form random_form(Rng& rng, std::size_t dim, int degree, int max_deg, int max_terms = 3);
Multivector random_multivector(Rng& rng, std::size_t dim, int degree, int max_deg,
                               int max_terms = 2);
VectorField random_vector_field(Rng& rng, std::size_t dim, int max_deg);

/// d of a random form plus a random constant-coefficient form; closed by
/// construction. Degree 0 gives a constant.
Form random_closed_form(Rng& rng, std::size_t dim, int degree, int max_deg);

/// Samples Hamiltonian (n-1)-forms with polynomial coefficients of degree
/// <= max_deg and nonzero Hamiltonian vector fields.
///
/// The vector fields with polynomial components of degree <= max_deg - 1
/// satisfying d iota_v omega = 0 form a finite-dimensional space whose basis
/// is computed once. A sample takes a random v in that space and returns
/// alpha = -h(iota_v omega) + d beta + c, with h the radial homotopy
/// operator, beta a random (n-2)-form and c a constant closed (n-1)-form;
/// then d alpha = -iota_v omega.
class HamiltonianSampler {
 public:
  /// Keeps a reference to p, which must outlive the sampler.
  HamiltonianSampler(const PlecticStructure& p, int max_deg);

  const PlecticStructure& structure() const { return *p_; }
  int max_deg() const { return max_deg_; }
  const std::vector<VectorField>& field_basis() const { return basis_; }

  HamiltonianForm sample(Rng& rng) const;
  VectorField sample_field(Rng& rng) const;
  /// Element of L of the given degree: Hamiltonian for degree 0, a random
  /// (n-1-degree)-form otherwise.
  GradedElement sample_element(Rng& rng, int degree) const;

 private:
  const PlecticStructure* p_;
  int max_deg_;
  std::vector<VectorField> basis_;
};

}  // namespace plectic
