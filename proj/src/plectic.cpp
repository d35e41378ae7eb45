#include "plectic/plectic.hpp"

#include <sstream>

#include "plectic/cartan.hpp"

namespace plectic {

NotClosedError::NotClosedError(Form residual)
    : Error("form is not closed: d(omega) = " + residual.to_string()),
      residual_(std::move(residual)) {}

DegenerateError::DegenerateError(VectorField witness)
    : Error("form is degenerate: iota_v omega = 0 for v = " +
            witness.multivector().to_string()),
      witness_(std::move(witness)) {}

std::vector<RationalFn> PlecticStructure::to_row_vector(const Form& a) const {
  if (a.chart_dim() != chart_dim()) {
    throw ChartMismatch("form lives on a different chart than omega");
  }
  if (!a.is_zero() && a.degree() != n_) {
    throw DegreeMismatch("expected an " + std::to_string(n_) + "-form");
  }
  std::vector<RationalFn> out;
  out.reserve(rows_.size());
  for (const MultiIndex& idx : rows_) out.push_back(a.coefficient(idx));
  return out;
}

namespace {

std::vector<std::vector<Rational>> default_sample_points(std::size_t dim) {
  std::vector<std::vector<Rational>> points;
  points.emplace_back(dim, Rational(0));
  for (std::size_t i = 0; i < dim; ++i) {
    for (int s : {1, -1}) {
      std::vector<Rational> p(dim, Rational(0));
      p[i] = s;
      points.push_back(std::move(p));
    }
  }
  return points;
}

std::string format_point(const std::vector<Rational>& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i].get_str();
  os << ')';
  return os.str();
}

}  // namespace

PlecticStructure validate_plectic(const Form& omega, int n,
                                  const std::vector<std::vector<Rational>>* sample_points) {
  const std::size_t dim = omega.chart_dim();
  if (n < 1) throw InvalidInput("n must be positive");
  if (omega.degree() != n + 1) {
    throw DegreeMismatch("n-plectic forms with n = " + std::to_string(n) + " have degree " +
                         std::to_string(n + 1) + ", got " +
                         std::to_string(omega.degree()));
  }
  if (dim < static_cast<std::size_t>(n + 1)) {
    throw DegreeMismatch("chart of dimension " + std::to_string(dim) +
                         " carries no nonzero " + std::to_string(n + 1) + "-form");
  }
  Form d_omega = exterior_derivative(omega);
  if (!d_omega.is_zero()) throw NotClosedError(std::move(d_omega));

  PlecticStructure p;
  p.n_ = n;
  p.omega_ = omega;
  p.rows_ = multi_indices(dim, n);
  p.flat_.assign(p.rows_.size(), std::vector<RationalFn>(dim, RationalFn(dim)));
  for (std::size_t i = 0; i < dim; ++i) {
    const Form column = interior_product(VectorField::coordinate(dim, static_cast<int>(i)), omega);
    for (std::size_t r = 0; r < p.rows_.size(); ++r) {
      p.flat_[r][i] = column.coefficient(p.rows_[r]);
    }
  }

  const Echelon<RationalFn> echelon = row_reduce(p.flat_);
  if (echelon.rank() < dim) {
    auto kernel = nullspace(echelon, RationalFn(dim), RationalFn::constant(dim, Rational(1)));
    throw DegenerateError(VectorField::from_components(kernel.front()));
  }

  const auto points = sample_points ? *sample_points : default_sample_points(dim);
  for (const auto& point : points) {
    Matrix<Rational> at(p.rows_.size(), std::vector<Rational>(dim));
    bool defined = true;
    for (std::size_t r = 0; r < p.rows_.size() && defined; ++r) {
      for (std::size_t i = 0; i < dim; ++i) {
        auto value = p.flat_[r][i].evaluate(point);
        if (!value) {
          defined = false;
          break;
        }
        at[r][i] = *value;
      }
    }
    if (!defined) {
      p.warnings_.push_back("flat matrix undefined at " + format_point(point));
      continue;
    }
    const std::size_t rank = row_reduce(std::move(at)).rank();
    if (rank < dim) {
      p.warnings_.push_back("flat matrix has rank " + std::to_string(rank) + " < " +
                            std::to_string(dim) + " at " + format_point(point));
    }
  }
  return p;
}

HamiltonianForm HamiltonianForm::certify(const PlecticStructure& p, Form alpha,
                                         VectorField vf) {
  const Form lhs = exterior_derivative(alpha);
  const Form rhs = -interior_product(vf, p.omega());
  if (!form_equal(lhs, rhs)) {
    throw InternalConsistencyError("d alpha != -iota_v omega for alpha = " +
                                   alpha.to_string());
  }
  return HamiltonianForm(std::move(alpha), std::move(vf));
}

std::string describe(NotHamiltonian::Reason reason) {
  switch (reason) {
    case NotHamiltonian::Reason::kInconsistent:
      return "no vector field v solves iota_v omega = -d alpha";
    case NotHamiltonian::Reason::kRationalDenominator:
      return "the solution needs non-polynomial denominators";
  }
  return "unknown";
}

HamiltonianResult hamiltonian_vf(const PlecticStructure& p, const Form& alpha) {
  if (alpha.chart_dim() != p.chart_dim()) {
    throw ChartMismatch("form lives on a different chart than omega");
  }
  if (alpha.degree() != p.n() - 1) {
    throw DegreeMismatch("Hamiltonian forms have degree " + std::to_string(p.n() - 1) +
                         ", got " + std::to_string(alpha.degree()));
  }
  const Form d_alpha = exterior_derivative(alpha);
  if (d_alpha.is_zero()) {
    return HamiltonianForm::certify(p, alpha, VectorField::zero(p.chart_dim()));
  }
  const SolveResult<RationalFn> solved =
      solve_linear(p.flat_matrix(), p.to_row_vector(-d_alpha));
  if (std::holds_alternative<NoSolution>(solved)) {
    return NotHamiltonian{NotHamiltonian::Reason::kInconsistent};
  }
  if (std::holds_alternative<NonUniqueSolution>(solved)) {
    throw InternalConsistencyError("flat matrix of a validated structure lost rank");
  }
  const auto& x = std::get<UniqueSolution<RationalFn>>(solved).x;
  for (const RationalFn& c : x) {
    if (!c.is_polynomial()) return NotHamiltonian{NotHamiltonian::Reason::kRationalDenominator};
  }
  return HamiltonianForm::certify(p, alpha, VectorField::from_components(x));
}

HamiltonianForm require_hamiltonian(const PlecticStructure& p, const Form& alpha) {
  HamiltonianResult r = hamiltonian_vf(p, alpha);
  if (auto* bad = std::get_if<NotHamiltonian>(&r)) {
    throw InvalidInput("not Hamiltonian: " + describe(bad->reason));
  }
  return std::get<HamiltonianForm>(std::move(r));
}

HamiltonianForm ham_bracket(const PlecticStructure& p, const HamiltonianForm& a,
                            const HamiltonianForm& b) {
  Form value = interior_product(b.vf(), interior_product(a.vf(), p.omega()));
  return HamiltonianForm::certify(p, std::move(value), vf_bracket(a.vf(), b.vf()));
}

Form check_lemma_Lthm(const PlecticStructure& p, const HamiltonianForm& a) {
  return lie_derivative(a.vf(), p.omega());
}

IdentitySides check_jacobi_defect(const PlecticStructure& p, const HamiltonianForm& a1,
                                  const HamiltonianForm& a2, const HamiltonianForm& a3) {
  Form lhs = ham_bracket(p, a1, ham_bracket(p, a2, a3)).alpha() -
             ham_bracket(p, ham_bracket(p, a1, a2), a3).alpha() -
             ham_bracket(p, a2, ham_bracket(p, a1, a3)).alpha();
  const Multivector v123 = wedge_all({a1.vf(), a2.vf(), a3.vf()}, p.chart_dim());
  Form rhs = -exterior_derivative(interior_product(v123, p.omega()));
  return {std::move(lhs), std::move(rhs)};
}

IdentitySides check_tech_lemma(const PlecticStructure& p,
                               const std::vector<VectorField>& vfs) {
  const std::size_t m = vfs.size();
  if (m < 2) throw InvalidInput("check_tech_lemma needs at least two vector fields");
  const std::size_t dim = p.chart_dim();
  Form lhs = exterior_derivative(interior_product(wedge_all(vfs, dim), p.omega()));

  Form rhs(dim, p.n() + 2 - static_cast<int>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      std::vector<VectorField> factors{vf_bracket(vfs[i], vfs[j])};
      for (std::size_t r = 0; r < m; ++r) {
        if (r != i && r != j) factors.push_back(vfs[r]);
      }
      Form term = interior_product(wedge_all(factors, dim), p.omega());
      if ((i + j) % 2 == 0) {
        rhs += term;
      } else {
        rhs -= term;
      }
    }
  }
  if (m % 2 == 1) rhs = -rhs;
  return {std::move(lhs), std::move(rhs)};
}

}  // namespace plectic
