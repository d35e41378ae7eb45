#include "plectic/random_forms.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "plectic/cartan.hpp"
#include "plectic/linear.hpp"

namespace plectic {

Rng::Rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t substream) {
  auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v & 0xffffffffu); };
  auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); };
  std::seed_seq seq{lo(seed), hi(seed), lo(stream), hi(stream), lo(substream), hi(substream)};
  engine_.seed(seq);
}

int Rng::uniform(int lo, int hi) {
  if (hi < lo) throw InvalidInput("empty random range");
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<int>(x % range);
}

Rational Rng::small_rational() {
  int a = uniform(1, 3);
  if (chance(1, 2)) a = -a;
  Rational q(a, uniform(1, 3));
  q.canonicalize();
  return q;
}

namespace {

void monomials_rec(std::size_t dim, int remaining, Exponents& cur, std::size_t pos,
                   std::vector<Exponents>& out) {
  if (pos == dim) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    cur[pos] = static_cast<std::uint16_t>(e);
    monomials_rec(dim, remaining - e, cur, pos + 1, out);
  }
  cur[pos] = 0;
}

MultiIndex random_subset(Rng& rng, std::size_t dim, int k) {
  std::vector<int> pool(dim);
  for (std::size_t i = 0; i < dim; ++i) pool[i] = static_cast<int>(i);
  // Partial Fisher-Yates.
  for (int t = 0; t < k; ++t) {
    const int j = rng.uniform(t, static_cast<int>(dim) - 1);
    std::swap(pool[static_cast<std::size_t>(t)], pool[static_cast<std::size_t>(j)]);
  }
  MultiIndex idx(pool.begin(), pool.begin() + k);
  std::sort(idx.begin(), idx.end());
  return idx;
}

template <class Kind>
Graded<Kind> random_graded(Rng& rng, std::size_t dim, int degree, int max_deg, int max_terms) {
  Graded<Kind> out(dim, degree);
  if (degree < 0 || static_cast<std::size_t>(degree) > dim) return out;
  const int terms = rng.uniform(1, max_terms);
  for (int t = 0; t < terms; ++t) {
    Graded<Kind> term = Graded<Kind>::basis(dim, random_subset(rng, dim, degree),
                                            RationalFn(random_poly(rng, dim, max_deg)));
    out += term;
  }
  return out;
}

}  // namespace

std::vector<Exponents> monomials_up_to(std::size_t dim, int max_deg) {
  std::vector<Exponents> out;
  if (max_deg < 0) return out;
  Exponents cur(dim, 0);
  monomials_rec(dim, max_deg, cur, 0, out);
  return out;
}

Poly random_poly(Rng& rng, std::size_t dim, int max_deg, int max_terms) {
  Poly p(dim);
  const int terms = rng.uniform(1, std::max(1, max_terms));
  for (int t = 0; t < terms; ++t) {
    Exponents e(dim, 0);
    const int total = dim == 0 ? 0 : rng.uniform(0, std::max(0, max_deg));
    for (int k = 0; k < total; ++k) ++e[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(dim) - 1))];
    p += Poly::monomial(dim, std::move(e), rng.small_rational());
  }
  return p;
}

Form random_form(Rng& rng, std::size_t dim, int degree, int max_deg, int max_terms) {
  return random_graded<FormKind>(rng, dim, degree, max_deg, max_terms);
}

Multivector random_multivector(Rng& rng, std::size_t dim, int degree, int max_deg,
                               int max_terms) {
  return random_graded<VectorKind>(rng, dim, degree, max_deg, max_terms);
}

VectorField random_vector_field(Rng& rng, std::size_t dim, int max_deg) {
  return VectorField(random_multivector(rng, dim, 1, max_deg, 2));
}

Form random_closed_form(Rng& rng, std::size_t dim, int degree, int max_deg) {
  if (degree == 0) {
    return Form::function(RationalFn::constant(dim, rng.small_rational()));
  }
  Form out = exterior_derivative(random_form(rng, dim, degree - 1, max_deg + 1));
  if (static_cast<std::size_t>(degree) <= dim && rng.chance(1, 2)) {
    out += random_form(rng, dim, degree, 0, 1);
  }
  return out;
}

HamiltonianSampler::HamiltonianSampler(const PlecticStructure& p, int max_deg)
    : p_(&p), max_deg_(std::max(1, max_deg)) {
  const std::size_t dim = p.chart_dim();
  for (const auto& [idx, c] : p.omega().terms()) {
    // The homotopy operator needs polynomial input; other structures only
    // get closed forms with zero field.
    if (!c.is_polynomial()) return;
  }

  std::vector<VectorField> candidates;
  for (const Exponents& e : monomials_up_to(dim, max_deg_ - 1)) {
    for (std::size_t i = 0; i < dim; ++i) {
      candidates.emplace_back(Multivector::basis(dim, {static_cast<int>(i)},
                                                 RationalFn(Poly::monomial(dim, e, Rational(1)))));
    }
  }

  // Column j holds the coefficients of d iota_{candidate j} omega.
  std::map<std::pair<MultiIndex, Exponents>, std::size_t> rows;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> columns(candidates.size());
  for (std::size_t j = 0; j < candidates.size(); ++j) {
    const Form image = exterior_derivative(interior_product(candidates[j], p.omega()));
    for (const auto& [idx, c] : image.terms()) {
      for (const auto& [e, q] : c.num().terms()) {
        const auto key = std::make_pair(idx, e);
        auto it = rows.find(key);
        if (it == rows.end()) it = rows.emplace(key, rows.size()).first;
        columns[j].emplace_back(it->second, q);
      }
    }
  }
  Matrix<Rational> m(std::max<std::size_t>(rows.size(), 1),
                     std::vector<Rational>(candidates.size(), Rational(0)));
  for (std::size_t j = 0; j < candidates.size(); ++j) {
    for (const auto& [r, q] : columns[j]) m[r][j] = q;
  }
  const auto kernel = nullspace(row_reduce(std::move(m)), Rational(0), Rational(1));
  for (const auto& combo : kernel) {
    VectorField v = VectorField::zero(dim);
    for (std::size_t j = 0; j < combo.size(); ++j) {
      if (combo[j] != 0) v = v + candidates[j].scaled(RationalFn::constant(dim, combo[j]));
    }
    basis_.push_back(std::move(v));
  }
}

VectorField HamiltonianSampler::sample_field(Rng& rng) const {
  VectorField v = VectorField::zero(p_->chart_dim());
  if (basis_.empty()) return v;
  const int count = rng.uniform(1, 3);
  for (int t = 0; t < count; ++t) {
    const auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(basis_.size()) - 1));
    v = v + basis_[j].scaled(RationalFn::constant(p_->chart_dim(), rng.small_rational()));
  }
  return v;
}

HamiltonianForm HamiltonianSampler::sample(Rng& rng) const {
  const std::size_t dim = p_->chart_dim();
  const int n = p_->n();
  VectorField v = rng.chance(1, 8) ? VectorField::zero(dim) : sample_field(rng);
  Form alpha = -homotopy_operator(interior_product(v, p_->omega()));
  if (alpha.is_zero()) alpha = Form(dim, n - 1);
  if (n >= 2 && rng.chance(2, 3)) {
    alpha += exterior_derivative(random_form(rng, dim, n - 2, max_deg_, 2));
  }
  if (rng.chance(1, 2)) alpha += random_form(rng, dim, n - 1, 0, 1);
  return HamiltonianForm::certify(*p_, std::move(alpha), std::move(v));
}

GradedElement HamiltonianSampler::sample_element(Rng& rng, int degree) const {
  if (degree == 0) return GradedElement::hamiltonian(sample(rng));
  return GradedElement::positive(*p_, degree,
                                 random_form(rng, p_->chart_dim(), p_->n() - 1 - degree, max_deg_));
}

}  // namespace plectic
