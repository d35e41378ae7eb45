#include "plectic/homotopy.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "plectic/cartan.hpp"

namespace plectic {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() ||
        seen[static_cast<std::size_t>(v)]) {
      throw InvalidPermutation("not a bijection of 1.." + std::to_string(images_.size()));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int k) {
  std::vector<int> images(static_cast<std::size_t>(k));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

int Permutation::sign() const {
  int inversions = 0;
  for (std::size_t a = 0; a < images_.size(); ++a) {
    for (std::size_t b = a + 1; b < images_.size(); ++b) {
      if (images_[a] > images_[b]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

std::string Permutation::cycle_string() const {
  std::ostringstream os;
  std::vector<bool> done(images_.size(), false);
  bool any = false;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == static_cast<int>(start)) continue;
    any = true;
    os << '(';
    std::size_t cur = start;
    bool first = true;
    while (!done[cur]) {
      done[cur] = true;
      os << (first ? "" : " ") << cur + 1;
      first = false;
      cur = static_cast<std::size_t>(images_[cur]);
    }
    os << ')';
  }
  return any ? os.str() : "(1)";
}

int koszul_sign(const Permutation& sigma, const std::vector<int>& degrees) {
  if (static_cast<int>(degrees.size()) != sigma.size()) {
    throw InvalidInput("koszul_sign: permutation and degree list differ in length");
  }
  // Bubble-sort x_{sigma(1)} ... x_{sigma(k)} back to x_1 ... x_k; each
  // adjacent swap of x_a, x_b costs (-1)^{deg a * deg b}.
  std::vector<int> seq = sigma.images();
  int sign = 1;
  for (std::size_t pass = 0; pass < seq.size(); ++pass) {
    for (std::size_t t = 0; t + 1 < seq.size() - pass; ++t) {
      if (seq[t] > seq[t + 1]) {
        const int da = degrees[static_cast<std::size_t>(seq[t])];
        const int db = degrees[static_cast<std::size_t>(seq[t + 1])];
        if ((da * db) % 2 != 0) sign = -sign;
        std::swap(seq[t], seq[t + 1]);
      }
    }
  }
  return sign;
}

std::vector<Permutation> unshuffles(int p, int q) {
  if (p < 0 || q < 0) throw InvalidInput("unshuffles: negative block size");
  const int k = p + q;
  std::vector<Permutation> out;
  for (const MultiIndex& first : multi_indices(static_cast<std::size_t>(k), p)) {
    std::vector<int> images = first;
    std::vector<bool> used(static_cast<std::size_t>(k), false);
    for (int v : first) used[static_cast<std::size_t>(v)] = true;
    for (int v = 0; v < k; ++v) {
      if (!used[static_cast<std::size_t>(v)]) images.push_back(v);
    }
    out.emplace_back(std::move(images));
  }
  return out;
}

GradedElement GradedElement::hamiltonian(HamiltonianForm h) {
  return GradedElement(0, h.alpha(), h.vf());
}

GradedElement GradedElement::positive(const PlecticStructure& p, int degree, Form payload) {
  if (degree < 1 || degree > p.n() - 1) {
    throw InvalidInput("degree " + std::to_string(degree) + " is not a positive degree of L (n = " +
                       std::to_string(p.n()) + ")");
  }
  if (payload.chart_dim() != p.chart_dim()) {
    throw ChartMismatch("element lives on a different chart than omega");
  }
  const int form_degree = p.n() - 1 - degree;
  if (payload.degree() != form_degree) {
    if (!payload.is_zero()) {
      throw InvalidInput("degree " + std::to_string(degree) + " elements are " +
                         std::to_string(form_degree) + "-forms, got a " +
                         std::to_string(payload.degree()) + "-form");
    }
    payload = Form(p.chart_dim(), form_degree);
  }
  return GradedElement(degree, std::move(payload), std::nullopt);
}

GradedElement GradedElement::from_form(const PlecticStructure& p, int degree,
                                       const Form& payload) {
  if (degree == 0) {
    if (payload.is_zero()) {
      return hamiltonian(require_hamiltonian(p, Form(p.chart_dim(), p.n() - 1)));
    }
    return hamiltonian(require_hamiltonian(p, payload));
  }
  return positive(p, degree, payload);
}

HamiltonianForm GradedElement::as_hamiltonian(const PlecticStructure& p) const {
  if (degree_ != 0) throw InvalidInput("only degree-0 elements are Hamiltonian forms");
  return HamiltonianForm::certify(p, payload_, *vf_);
}

Form payload_or_zero(const PlecticStructure& p, const GradedValue& value, int degree) {
  if (value) return value->payload();
  return Form(p.chart_dim(), p.n() - 1 - degree);
}

namespace {

void check_elements(const PlecticStructure& p, const std::vector<GradedElement>& elems) {
  for (const GradedElement& e : elems) {
    if (e.payload().chart_dim() != p.chart_dim()) {
      throw InvalidInput("element lives on a different chart than omega");
    }
    if (e.degree() < 0 || e.degree() > p.n() - 1) {
      throw InvalidInput("element degree outside 0..n-1");
    }
  }
}

// d on a positive-degree element, rewrapped in L.
GradedElement differential(const PlecticStructure& p, const GradedElement& e) {
  Form d = exterior_derivative(e.payload());
  if (e.degree() == 1) {
    // Exact (n-1)-forms are Hamiltonian with zero vector field.
    return GradedElement::hamiltonian(
        HamiltonianForm::certify(p, std::move(d), VectorField::zero(p.chart_dim())));
  }
  return GradedElement::positive(p, e.degree() - 1, std::move(d));
}

}  // namespace

int l_k_sign(int k) {
  const int exponent = k % 2 == 0 ? k / 2 + 1 : (k - 1) / 2;
  return exponent % 2 == 0 ? 1 : -1;
}

GradedValue l_k(const PlecticStructure& p, int k, const std::vector<GradedElement>& elems) {
  if (k < 1) throw InvalidInput("l_k needs k >= 1");
  if (static_cast<int>(elems.size()) != k) {
    throw InvalidInput("l_" + std::to_string(k) + " applied to " +
                       std::to_string(elems.size()) + " elements");
  }
  check_elements(p, elems);
  if (k == 1) {
    if (elems[0].degree() == 0) return std::nullopt;
    return differential(p, elems[0]);
  }
  for (const GradedElement& e : elems) {
    if (e.degree() > 0) return std::nullopt;
  }
  // The output lands in degree k - 2, which exists only for k <= n + 1.
  if (k > p.n() + 1) return std::nullopt;

  std::vector<VectorField> fields;
  fields.reserve(elems.size());
  for (const GradedElement& e : elems) fields.push_back(*e.vf());
  Form value = interior_product(wedge_all(fields, p.chart_dim()), p.omega());
  if (l_k_sign(k) < 0) value = -value;
  if (k == 2) {
    return GradedElement::hamiltonian(
        HamiltonianForm::certify(p, std::move(value), vf_bracket(fields[0], fields[1])));
  }
  return GradedElement::positive(p, k - 2, std::move(value));
}

JacobiReport gen_jacobi_residual(const PlecticStructure& p, int m,
                                 const std::vector<GradedElement>& elems) {
  if (m < 1) throw InvalidInput("generalized Jacobi identity needs m >= 1");
  if (static_cast<int>(elems.size()) != m) {
    throw InvalidInput("arity " + std::to_string(m) + " with " +
                       std::to_string(elems.size()) + " elements");
  }
  check_elements(p, elems);
  std::vector<int> degrees;
  degrees.reserve(elems.size());
  for (const GradedElement& e : elems) degrees.push_back(e.degree());
  const int total = std::accumulate(degrees.begin(), degrees.end(), 0);

  JacobiReport report{m, total + m - 3, Form(p.chart_dim(), p.n() - 1 - (total + m - 3)), {}};
  for (int i = 1; i <= m; ++i) {
    const int j = m + 1 - i;
    for (Permutation& sigma : unshuffles(i, m - i)) {
      int sign = sigma.sign() * koszul_sign(sigma, degrees);
      if ((i * (j - 1)) % 2 != 0) sign = -sign;

      std::vector<GradedElement> inner_args;
      for (int t = 0; t < i; ++t) inner_args.push_back(elems[static_cast<std::size_t>(sigma(t))]);
      Form contribution(p.chart_dim(), report.residual.degree());
      if (GradedValue inner = l_k(p, i, inner_args)) {
        std::vector<GradedElement> outer_args{*inner};
        for (int t = i; t < m; ++t) outer_args.push_back(elems[static_cast<std::size_t>(sigma(t))]);
        if (GradedValue outer = l_k(p, j, outer_args)) {
          contribution = sign > 0 ? outer->payload() : -outer->payload();
        }
      }
      report.residual += contribution;
      report.trace.push_back({i, j, std::move(sigma), sign, std::move(contribution)});
    }
  }
  return report;
}

GradedValue leibniz_delta(const PlecticStructure& p, const GradedElement& elem) {
  check_elements(p, {elem});
  if (elem.degree() == 0) return std::nullopt;
  return differential(p, elem);
}

GradedValue leibniz_bracket(const PlecticStructure& p, const GradedElement& a,
                            const GradedElement& b) {
  check_elements(p, {a, b});
  if (a.degree() > 0) return std::nullopt;
  Form value = lie_derivative(*a.vf(), b.payload());
  if (b.degree() == 0) {
    return GradedElement::hamiltonian(
        HamiltonianForm::certify(p, std::move(value), vf_bracket(*a.vf(), *b.vf())));
  }
  return GradedElement::positive(p, b.degree(), std::move(value));
}

LeibnizReport check_leibniz_axioms(const PlecticStructure& p, const GradedElement& a,
                                   const GradedElement& b, const GradedElement& c) {
  auto bracket = [&](const GradedValue& x, const GradedValue& y) -> GradedValue {
    if (!x || !y) return std::nullopt;
    return leibniz_bracket(p, *x, *y);
  };
  auto delta = [&](const GradedValue& x) -> GradedValue {
    if (!x) return std::nullopt;
    return leibniz_delta(p, *x);
  };
  const GradedValue va = a;
  const GradedValue vb = b;
  const GradedValue vc = c;

  LeibnizReport report{Form(p.chart_dim(), 0), Form(p.chart_dim(), 0), std::nullopt};

  const int d1 = a.degree() + b.degree() - 1;
  Form derivation = payload_or_zero(p, delta(bracket(va, vb)), d1) -
                    payload_or_zero(p, bracket(delta(va), vb), d1);
  Form third = payload_or_zero(p, bracket(va, delta(vb)), d1);
  report.derivation = a.degree() % 2 == 0 ? derivation - third : derivation + third;

  const int d2 = a.degree() + b.degree() + c.degree();
  Form jacobi = payload_or_zero(p, bracket(va, bracket(vb, vc)), d2) -
                payload_or_zero(p, bracket(bracket(va, vb), vc), d2);
  Form swapped = payload_or_zero(p, bracket(vb, bracket(va, vc)), d2);
  report.jacobi = (a.degree() * b.degree()) % 2 == 0 ? jacobi - swapped : jacobi + swapped;

  if (a.degree() == 0 && b.degree() == 0) {
    Form homotopy = interior_product(*a.vf(), b.payload()) +
                    interior_product(*b.vf(), a.payload());
    report.skew = payload_or_zero(p, bracket(va, vb), 0) +
                  payload_or_zero(p, bracket(vb, va), 0) - exterior_derivative(homotopy);
  }
  return report;
}

IdentitySides check_der_lemma(const PlecticStructure& p, const HamiltonianForm& a,
                              const HamiltonianForm& b) {
  Form lhs = lie_derivative(a.vf(), b.alpha());
  Form rhs = ham_bracket(p, a, b).alpha() +
             exterior_derivative(interior_product(a.vf(), b.alpha()));
  return {std::move(lhs), std::move(rhs)};
}

}  // namespace plectic
