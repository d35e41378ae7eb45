#include "plectic/suite.hpp"

#include <chrono>
#include <functional>
#include <json.hpp>

#include "plectic/cartan.hpp"
#include "plectic/homotopy.hpp"
#include "plectic/parse.hpp"
#include "plectic/random_forms.hpp"
#include "plectic/render.hpp"

namespace plectic {

namespace {

struct Context {
  const PlecticStructure& p;
  const HamiltonianSampler& sampler;
  Rng& rng;
  int max_deg;
  VerificationReport& report;

  std::size_t dim() const { return p.chart_dim(); }
  int n() const { return p.n(); }

  void count(const std::string& name) {
    for (auto& [key, c] : report.checks) {
      if (key == name) {
        ++c;
        return;
      }
    }
    report.checks.emplace_back(name, 1);
  }

  template <class Inputs>
  void check(const std::string& name, const std::string& residual, Inputs inputs) {
    count(name);
    if (residual != "0") report.failures.push_back({name, inputs(), residual});
  }

  template <class Inputs>
  void check(const std::string& name, const Form& residual, Inputs inputs) {
    count(name);
    if (!residual.is_zero()) report.failures.push_back({name, inputs(), render_form(residual)});
  }

  HamiltonianForm ham() { return sampler.sample(rng); }

  int random_degree_of_L() {
    if (n() == 1 || rng.chance(1, 2)) return 0;
    return rng.uniform(1, n() - 1);
  }
};

std::string join(const std::vector<std::pair<std::string, std::string>>& parts) {
  std::string out;
  for (const auto& [name, value] : parts) {
    if (!out.empty()) out += "; ";
    out += name + " = " + value;
  }
  return out;
}

std::string elements_text(const std::vector<GradedElement>& elems) {
  std::string out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) out += "; ";
    out += "x" + std::to_string(i + 1) + " (deg " + std::to_string(elems[i].degree()) +
           ") = " + render_form(elems[i].payload());
  }
  return out;
}

int cap(int degree, std::size_t dim) { return std::min(degree, static_cast<int>(dim)); }

void d_squared(Context& c) {
  const int k = c.rng.uniform(0, static_cast<int>(c.dim()));
  const Form a = random_form(c.rng, c.dim(), k, c.max_deg + 1);
  c.check("d_squared", exterior_derivative(exterior_derivative(a)),
          [&] { return join({{"a", render_form(a)}}); });
}

void cartan_commutator(Context& c) {
  const int pu = c.rng.uniform(1, cap(3, c.dim()));
  const int qv = c.rng.uniform(1, cap(3, c.dim()));
  const Multivector u = random_multivector(c.rng, c.dim(), pu, c.max_deg);
  const Multivector v = random_multivector(c.rng, c.dim(), qv, c.max_deg);
  const Form a = random_form(c.rng, c.dim(), c.rng.uniform(qv, static_cast<int>(c.dim())),
                             c.max_deg);
  const Form lhs = interior_product(schouten_bracket(u, v), a);
  Form rhs = lie_derivative(u, interior_product(v, a));
  if (((pu - 1) * qv) % 2 != 0) rhs = -rhs;
  rhs -= interior_product(v, lie_derivative(u, a));
  c.check("cartan_commutator", lhs - rhs, [&] {
    return join({{"u", render_multivector(u)}, {"v", render_multivector(v)}, {"a", render_form(a)}});
  });
}

void schouten_antisymmetry(Context& c) {
  const int pu = c.rng.uniform(1, cap(3, c.dim()));
  const int qv = c.rng.uniform(1, cap(3, c.dim()));
  const Multivector u = random_multivector(c.rng, c.dim(), pu, c.max_deg);
  const Multivector v = random_multivector(c.rng, c.dim(), qv, c.max_deg);
  Multivector residual = schouten_bracket(u, v);
  if (((pu - 1) * (qv - 1)) % 2 == 0) {
    residual += schouten_bracket(v, u);
  } else {
    residual -= schouten_bracket(v, u);
  }
  c.check("schouten_antisymmetry", render_multivector(residual), [&] {
    return join({{"u", render_multivector(u)}, {"v", render_multivector(v)}});
  });
}

void schouten_leibniz(Context& c) {
  const int pu = c.rng.uniform(1, cap(3, c.dim()));
  const int qv = c.rng.uniform(1, cap(2, c.dim()));
  const int rw = c.rng.uniform(1, cap(2, c.dim()));
  const Multivector u = random_multivector(c.rng, c.dim(), pu, c.max_deg);
  const Multivector v = random_multivector(c.rng, c.dim(), qv, c.max_deg);
  const Multivector w = random_multivector(c.rng, c.dim(), rw, c.max_deg);
  // [u, v ^ w] = [u, v] ^ w + (-1)^{(p-1) q} v ^ [u, w]
  Multivector residual = schouten_bracket(u, wedge(v, w)) - wedge(schouten_bracket(u, v), w);
  if (((pu - 1) * qv) % 2 == 0) {
    residual -= wedge(v, schouten_bracket(u, w));
  } else {
    residual += wedge(v, schouten_bracket(u, w));
  }
  c.check("schouten_leibniz", render_multivector(residual), [&] {
    return join({{"u", render_multivector(u)},
                 {"v", render_multivector(v)},
                 {"w", render_multivector(w)}});
  });
}

void interior_nesting(Context& c) {
  const VectorField u = random_vector_field(c.rng, c.dim(), c.max_deg);
  const VectorField v = random_vector_field(c.rng, c.dim(), c.max_deg);
  const Form a = random_form(c.rng, c.dim(), c.rng.uniform(0, static_cast<int>(c.dim())),
                             c.max_deg);
  const Form lhs = interior_product(wedge(u.multivector(), v.multivector()), a);
  const Form rhs = interior_product(v, interior_product(u, a));
  c.check("interior_nesting", lhs - rhs, [&] {
    return join({{"u", render_vector_field(u)}, {"v", render_vector_field(v)},
                 {"a", render_form(a)}});
  });
}

void wedge_laws(Context& c) {
  const int da = c.rng.uniform(0, static_cast<int>(c.dim()));
  const int db = c.rng.uniform(0, static_cast<int>(c.dim()));
  const int dc = c.rng.uniform(0, static_cast<int>(c.dim()));
  const Form a = random_form(c.rng, c.dim(), da, c.max_deg);
  const Form b = random_form(c.rng, c.dim(), db, c.max_deg);
  const Form e = random_form(c.rng, c.dim(), dc, c.max_deg);
  Form comm = wedge(a, b);
  if ((da * db) % 2 == 0) {
    comm -= wedge(b, a);
  } else {
    comm += wedge(b, a);
  }
  c.check("wedge_graded_commutativity", comm,
          [&] { return join({{"a", render_form(a)}, {"b", render_form(b)}}); });
  c.check("wedge_associativity", wedge(wedge(a, b), e) - wedge(a, wedge(b, e)), [&] {
    return join({{"a", render_form(a)}, {"b", render_form(b)}, {"c", render_form(e)}});
  });
}

void poincare_lemma(Context& c) {
  const int k = c.rng.uniform(1, static_cast<int>(c.dim()));
  const Form a = random_closed_form(c.rng, c.dim(), k, c.max_deg);
  const auto b = poincare_primitive(a);
  const std::string residual = b ? render_form(exterior_derivative(*b) - a) : "no primitive";
  c.check("poincare_lemma", residual, [&] { return join({{"a", render_form(a)}}); });
}

void complex_exactness(Context& c) {
  // A closed element of degree i in L with a form payload of degree >= 1 is
  // l_1 of an element of degree i + 1.
  for (int i = 0; i + 2 <= c.n(); ++i) {
    const Form a = random_closed_form(c.rng, c.dim(), c.n() - 1 - i, c.max_deg);
    const auto b = poincare_primitive(a);
    std::string residual = "no primitive";
    if (b) {
      const GradedValue image = l_k(c.p, 1, {GradedElement::positive(c.p, i + 1, *b)});
      residual = render_form(payload_or_zero(c.p, image, i) - a);
    }
    c.check("complex_exactness:deg=" + std::to_string(i), residual,
            [&] { return join({{"a", render_form(a)}}); });
  }
}

void hamiltonian_laws(Context& c) {
  const HamiltonianForm a = c.ham();
  const HamiltonianForm b = c.ham();
  auto inputs = [&] { return join({{"alpha", render_form(a.alpha())}, {"beta", render_form(b.alpha())}}); };
  c.check("lie_derivative_of_omega", check_lemma_Lthm(c.p, a),
          [&] { return join({{"alpha", render_form(a.alpha())}}); });

  const HamiltonianForm ab = ham_bracket(c.p, a, b);
  const HamiltonianForm ba = ham_bracket(c.p, b, a);
  c.check("bracket_antisymmetry", ab.alpha() + ba.alpha(), inputs);

  const HamiltonianResult solved = hamiltonian_vf(c.p, ab.alpha());
  std::string vf_residual;
  if (const auto* h = std::get_if<HamiltonianForm>(&solved)) {
    vf_residual = render_vector_field(h->vf() - vf_bracket(a.vf(), b.vf()));
  } else {
    vf_residual = "not Hamiltonian: " + describe(std::get<NotHamiltonian>(solved).reason);
  }
  c.check("bracket_hamiltonian_field", vf_residual, inputs);

  const IdentitySides der = check_der_lemma(c.p, a, b);
  c.check("der_lemma", der.lhs - der.rhs, inputs);

  if (c.n() == 1) {
    // Poisson bracket of functions: {f, g} = v_f(g).
    c.check("poisson_bracket", ab.alpha() - lie_derivative(a.vf(), b.alpha()), inputs);
  }
}

void jacobi_defect(Context& c) {
  const HamiltonianForm a1 = c.ham();
  const HamiltonianForm a2 = c.ham();
  const HamiltonianForm a3 = c.ham();
  const IdentitySides sides = check_jacobi_defect(c.p, a1, a2, a3);
  c.check("jacobi_defect", sides.lhs - sides.rhs, [&] {
    return join({{"alpha1", render_form(a1.alpha())},
                 {"alpha2", render_form(a2.alpha())},
                 {"alpha3", render_form(a3.alpha())}});
  });
}

void tech_lemma(Context& c) {
  for (int m = 2; m <= 4; ++m) {
    std::vector<VectorField> fields;
    for (int i = 0; i < m; ++i) fields.push_back(c.ham().vf());
    const IdentitySides sides = check_tech_lemma(c.p, fields);
    c.check("tech_lemma:m=" + std::to_string(m), sides.lhs - sides.rhs, [&] {
      std::vector<std::pair<std::string, std::string>> parts;
      for (int i = 0; i < m; ++i) {
        parts.emplace_back("v" + std::to_string(i + 1), render_vector_field(fields[static_cast<std::size_t>(i)]));
      }
      return join(parts);
    });
  }
}

void generalized_jacobi(Context& c) {
  for (int m = 1; m <= c.n() + 2; ++m) {
    // Brackets of arity >= 2 vanish unless every input has degree 0, so
    // most tuples are all-degree-0 or carry a single degree-1 element.
    std::vector<int> degrees(static_cast<std::size_t>(m), 0);
    const int pattern = c.rng.uniform(0, 3);
    if (pattern == 2 && c.n() >= 2) {
      degrees[static_cast<std::size_t>(c.rng.uniform(0, m - 1))] = 1;
    } else if (pattern == 3) {
      for (int& d : degrees) d = c.random_degree_of_L();
    }
    std::vector<GradedElement> elems;
    for (int d : degrees) elems.push_back(c.sampler.sample_element(c.rng, d));
    const JacobiReport r = gen_jacobi_residual(c.p, m, elems);
    c.check("generalized_jacobi:m=" + std::to_string(m), r.residual,
            [&] { return elements_text(elems); });
  }
}

void lk_skew_symmetry(Context& c) {
  if (c.n() + 1 < 2) return;
  const int k = c.rng.uniform(2, c.n() + 1);
  std::vector<GradedElement> elems;
  for (int i = 0; i < k; ++i) elems.push_back(GradedElement::hamiltonian(c.ham()));
  std::vector<int> images(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) images[static_cast<std::size_t>(i)] = i;
  for (int i = k - 1; i > 0; --i) std::swap(images[static_cast<std::size_t>(i)], images[static_cast<std::size_t>(c.rng.uniform(0, i))]);
  const Permutation sigma(images);
  std::vector<GradedElement> permuted;
  for (int i = 0; i < k; ++i) permuted.push_back(elems[static_cast<std::size_t>(sigma(i))]);
  const Form lhs = payload_or_zero(c.p, l_k(c.p, k, permuted), k - 2);
  Form rhs = payload_or_zero(c.p, l_k(c.p, k, elems), k - 2);
  if (sigma.sign() < 0) rhs = -rhs;
  c.check("lk_skew_symmetry", lhs - rhs, [&] {
    return elements_text(elems) + "; sigma = " + sigma.cycle_string();
  });
}

void leibniz_axioms(Context& c) {
  const GradedElement a = c.sampler.sample_element(c.rng, c.random_degree_of_L());
  const GradedElement b = c.sampler.sample_element(c.rng, c.random_degree_of_L());
  const GradedElement e = c.sampler.sample_element(c.rng, c.random_degree_of_L());
  const LeibnizReport r = check_leibniz_axioms(c.p, a, b, e);
  auto inputs = [&] { return elements_text({a, b, e}); };
  c.check("leibniz_derivation", r.derivation, inputs);
  c.check("leibniz_jacobi", r.jacobi, inputs);
  if (r.skew) c.check("leibniz_skew_defect", *r.skew, inputs);
}

void round_trip(Context& c) {
  const int k = c.rng.uniform(0, static_cast<int>(c.dim()));
  Form f = random_form(c.rng, c.dim(), k, c.max_deg, 4);
  if (c.rng.chance(1, 4)) {
    // Exercise non-polynomial coefficients too.
    const Poly den = Poly::constant(c.dim(), Rational(1)) + random_poly(c.rng, c.dim(), 1, 2);
    if (!den.is_zero()) f = f.scaled(RationalFn(den).inverse());
  }
  const std::string text = render_form(f);
  const Form back = parse_form(text, c.dim());
  c.check("render_parse_round_trip", back - f, [&] { return join({{"text", text}}); });
}

using Family = void (*)(Context&);

const std::vector<std::pair<std::string, Family>>& families() {
  static const std::vector<std::pair<std::string, Family>> list{
      {"d_squared", d_squared},
      {"cartan_commutator", cartan_commutator},
      {"schouten_antisymmetry", schouten_antisymmetry},
      {"schouten_leibniz", schouten_leibniz},
      {"interior_nesting", interior_nesting},
      {"wedge_laws", wedge_laws},
      {"poincare_lemma", poincare_lemma},
      {"complex_exactness", complex_exactness},
      {"hamiltonian_laws", hamiltonian_laws},
      {"jacobi_defect", jacobi_defect},
      {"tech_lemma", tech_lemma},
      {"generalized_jacobi", generalized_jacobi},
      {"lk_skew_symmetry", lk_skew_symmetry},
      {"leibniz_axioms", leibniz_axioms},
      {"render_parse_round_trip", round_trip},
  };
  return list;
}

}  // namespace

const std::vector<std::string>& suite_identities() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : families()) out.push_back(name);
    return out;
  }();
  return names;
}

VerificationReport run_suite(const std::string& structure_key, const PlecticStructure& p,
                             const SuiteOptions& options) {
  for (const std::string& name : options.only) {
    if (std::find(suite_identities().begin(), suite_identities().end(), name) ==
        suite_identities().end()) {
      throw InvalidInput("unknown identity family '" + name + "'");
    }
  }
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.structure = structure_key;
  report.suite = options.only.empty() ? "all" : "";
  for (const std::string& name : options.only) {
    report.suite += (report.suite.empty() ? "" : ",") + name;
  }
  report.trials = options.trials;
  report.seed = options.seed;
  report.max_deg = options.max_deg;

  const HamiltonianSampler sampler(p, options.max_deg);
  const auto& list = families();
  for (int trial = 0; trial < options.trials; ++trial) {
    for (std::size_t f = 0; f < list.size(); ++f) {
      const auto& [name, fn] = list[f];
      if (!options.only.empty() &&
          std::find(options.only.begin(), options.only.end(), name) == options.only.end()) {
        continue;
      }
      Rng rng(options.seed, static_cast<std::uint64_t>(trial), f);
      Context ctx{p, sampler, rng, options.max_deg, report};
      try {
        fn(ctx);
      } catch (const Error& e) {
        report.failures.push_back({name, "trial " + std::to_string(trial), e.what()});
      }
    }
  }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

std::string report_json(const VerificationReport& report, bool include_elapsed) {
  nlohmann::ordered_json j;
  j["structure"] = report.structure;
  j["suite"] = report.suite;
  j["trials"] = report.trials;
  j["seed"] = report.seed;
  j["max_deg"] = report.max_deg;
  nlohmann::ordered_json checks = nlohmann::ordered_json::object();
  for (const auto& [name, count] : report.checks) checks[name] = count;
  j["checks"] = checks;
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const Failure& f : report.failures) {
    failures.push_back({{"identity", f.identity}, {"inputs", f.inputs}, {"residual", f.residual}});
  }
  j["failures"] = failures;
  j["passed"] = report.passed();
  if (include_elapsed) j["elapsed_ms"] = static_cast<std::int64_t>(report.elapsed_ms);
  return j.dump(2) + "\n";
}

}  // namespace plectic
