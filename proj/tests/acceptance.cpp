// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "plectic/cartan.hpp"
#include "plectic/catalog.hpp"
#include "plectic/homotopy.hpp"
#include "plectic/parse.hpp"
#include "plectic/random_forms.hpp"
#include "plectic/render.hpp"
#include "plectic/suite.hpp"

using namespace plectic;

namespace {

constexpr int kTrials = 50;
constexpr std::uint64_t kSeed = 20100401;
constexpr int kMaxDeg = 2;

const std::vector<std::string> kStructures{
    "symplectic:1", "symplectic:2", "symplectic:3", "volume:1",       "volume:2",
    "volume:3",     "volume:4",     "multiphase:1:2", "multiphase:2:3", "multiphase:3:4",
    "cartan3",      "hyperkahler"};

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& why) {
    if (!ok && pass) {
      pass = false;
      detail = why;
    }
  }
};

struct SuiteRun {
  PlecticStructure structure;
  VerificationReport report;
};

int checks_of(const VerificationReport& r, const std::string& name) {
  for (const auto& [key, count] : r.checks) {
    if (key == name) return count;
  }
  return 0;
}

int failures_of(const VerificationReport& r, const std::string& prefix) {
  int n = 0;
  for (const Failure& f : r.failures) n += f.identity.rfind(prefix, 0) == 0;
  return n;
}

// Requires at least `min` checks and no failures for the named identity.
void require_identity(Outcome& o, const std::string& key, const VerificationReport& r,
                      const std::string& name, int min = kTrials) {
  const int count = checks_of(r, name);
  const int failed = failures_of(r, name);
  o.require(count >= min, key + ": only " + std::to_string(count) + " checks of " + name);
  o.require(failed == 0, key + ": " + std::to_string(failed) + " failures of " + name);
}

Form form(const std::string& text, std::size_t dim) { return parse_form(text, dim); }

Outcome poisson_recovery() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (int k = 1; k <= 3; ++k) {
    const PlecticStructure p = make_symplectic(k);
    const std::size_t dim = p.chart_dim();
    std::vector<HamiltonianForm> coords;
    for (std::size_t i = 0; i < dim; ++i) {
      coords.push_back(require_hamiltonian(p, form("x" + std::to_string(i + 1), dim)));
    }
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        const Form b = ham_bracket(p, coords[i], coords[j]).alpha();
        const Rational expected = (j == i + static_cast<std::size_t>(k) && i < static_cast<std::size_t>(k)) ? 1
                                  : (i == j + static_cast<std::size_t>(k) && j < static_cast<std::size_t>(k)) ? -1
                                                                                                  : 0;
        o.require(b == Form::function(RationalFn::constant(dim, expected)),
                  "symplectic:" + std::to_string(k) + " {x" + std::to_string(i + 1) + ",x" +
                      std::to_string(j + 1) + "} = " + render_form(b));
      }
    }
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  o.require(ms < 1000, "took " + std::to_string(ms) + " ms");
  if (o.pass) o.detail = "all pairs exact, k = 1..3";
  return o;
}

Outcome generalized_jacobi(const std::map<std::string, SuiteRun>& runs, double suite_ms) {
  Outcome o;
  int total = 0;
  for (const auto& [key, run] : runs) {
    if (run.structure.n() > 4) continue;
    for (int m = 1; m <= run.structure.n() + 2; ++m) {
      const std::string name = "generalized_jacobi:m=" + std::to_string(m);
      require_identity(o, key, run.report, name);
      total += checks_of(run.report, name);
    }
  }
  o.require(suite_ms < 120000, "suite took " + std::to_string(suite_ms) + " ms");
  if (o.pass) {
    o.detail = std::to_string(total) + " tuples, zero residual; suite " +
               std::to_string(static_cast<long>(suite_ms)) + " ms";
  }
  return o;
}

Outcome no_jacobi(const std::map<std::string, SuiteRun>& runs) {
  Outcome o;
  for (const auto& [key, run] : runs) require_identity(o, key, run.report, "jacobi_defect");
  // Worked triple on volume R^3: fields -d1, d2, d3, so
  // l_3 = -iota_{d3} iota_{d2} iota_{-d1} (dx1^dx2^dx3) = iota_{d3} iota_{d2} (dx2^dx3) = 1.
  const PlecticStructure p = make_volume(2);
  std::vector<GradedElement> elems;
  std::vector<HamiltonianForm> hams;
  for (const char* text : {"x2*dx3", "x1*dx3", "-x1*dx2"}) {
    hams.push_back(require_hamiltonian(p, form(text, 3)));
    elems.push_back(GradedElement::hamiltonian(hams.back()));
  }
  const GradedValue l3 = l_k(p, 3, elems);
  o.require(l3 && l3->payload() == form("1", 3), "worked triple l_3 != 1");
  o.require(check_jacobi_defect(p, hams[0], hams[1], hams[2]).holds(), "worked triple defect");
  if (o.pass) o.detail = "all structures, worked triple l_3 = 1";
  return o;
}

Outcome tech_lemma(const std::map<std::string, SuiteRun>& runs) {
  Outcome o;
  for (const char* key : {"multiphase:2:3", "volume:3"}) {
    for (int m = 2; m <= 4; ++m) {
      require_identity(o, key, runs.at(key).report, "tech_lemma:m=" + std::to_string(m));
    }
  }
  if (o.pass) o.detail = "m = 2, 3, 4 on multiphase:2:3 and volume:3";
  return o;
}

Outcome bracket_prop(const std::map<std::string, SuiteRun>& runs) {
  Outcome o;
  for (const auto& [key, run] : runs) {
    require_identity(o, key, run.report, "bracket_antisymmetry");
    require_identity(o, key, run.report, "bracket_hamiltonian_field");
    require_identity(o, key, run.report, "lie_derivative_of_omega");
  }
  if (o.pass) o.detail = "antisymmetry, field of the bracket, L_v omega = 0";
  return o;
}

Outcome leibniz(const std::map<std::string, SuiteRun>& runs) {
  Outcome o;
  int skew = 0;
  for (const auto& [key, run] : runs) {
    require_identity(o, key, run.report, "leibniz_derivation");
    require_identity(o, key, run.report, "leibniz_jacobi");
    require_identity(o, key, run.report, "der_lemma");
    require_identity(o, key, run.report, "leibniz_skew_defect", 1);
    skew += checks_of(run.report, "leibniz_skew_defect");
  }
  if (o.pass) o.detail = "derivation, Jacobi, der_lemma; " + std::to_string(skew) + " skew-defect checks";
  return o;
}

Outcome cartan_layer(const std::map<std::string, SuiteRun>& runs) {
  Outcome o;
  for (const auto& [key, run] : runs) {
    for (const char* name : {"d_squared", "cartan_commutator", "schouten_antisymmetry",
                             "schouten_leibniz", "interior_nesting"}) {
      require_identity(o, key, run.report, name);
    }
  }
  if (o.pass) o.detail = "d^2 = 0, commutator, Schouten antisymmetry and Leibniz";
  return o;
}

Outcome resolution(const std::map<std::string, SuiteRun>& runs) {
  Outcome o;
  int degrees = 0;
  for (const auto& [key, run] : runs) {
    for (int i = 0; i + 2 <= run.structure.n(); ++i) {
      require_identity(o, key, run.report, "complex_exactness:deg=" + std::to_string(i));
      ++degrees;
    }
    require_identity(o, key, run.report, "poincare_lemma");
  }
  if (o.pass) o.detail = std::to_string(degrees) + " (structure, degree) pairs exact";
  return o;
}

Outcome validator() {
  Outcome o;
  for (const char* key : {"symplectic:2", "volume:3", "multiphase:2:3", "cartan3", "hyperkahler"}) {
    try {
      catalog_lookup(key);
    } catch (const Error& e) {
      o.require(false, std::string(key) + ": " + e.what());
    }
  }
  const Form degenerate = form("dx1^dx2", 3);
  try {
    validate_plectic(degenerate, 1);
    o.require(false, "degenerate form accepted");
  } catch (const DegenerateError& e) {
    o.require(!e.witness().is_zero() && interior_product(e.witness(), degenerate).is_zero(),
              "bad witness " + render_vector_field(e.witness()));
  }
  try {
    validate_plectic(form("x1*dx2^dx3", 3), 1);
    o.require(false, "non-closed form accepted");
  } catch (const NotClosedError& e) {
    o.require(e.residual() == form("dx1^dx2^dx3", 3), "bad residual " + render_form(e.residual()));
  }
  if (o.pass) o.detail = "five families validate; witness e3, residual dx1^dx2^dx3";
  return o;
}

int run_cli(const std::string& args) {
  const int status = std::system((std::string(PLECTIC_CLI) + " " + args + " > /dev/null").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome frontend() {
  Outcome o;
  Rng rng(kSeed);
  for (int t = 0; t < 500; ++t) {
    const std::size_t dim = static_cast<std::size_t>(rng.uniform(1, 6));
    const int k = rng.uniform(0, static_cast<int>(dim));
    Form f = random_form(rng, dim, k, 3, 4);
    if (rng.chance(1, 4)) {
      const Poly den = Poly::constant(dim, Rational(1)) + random_poly(rng, dim, 2, 2);
      if (!den.is_zero()) f = f.scaled(RationalFn(den).inverse());
    }
    const std::string text = render_form(f);
    o.require(parse_form(text, dim) == f, "round trip failed for " + text);
  }
  const auto dir = std::filesystem::temp_directory_path();
  const auto a = dir / "plectic_acceptance_a.json";
  const auto b = dir / "plectic_acceptance_b.json";
  const std::string args = "suite --catalog multiphase:2:3 --trials 50 --seed 7 --max-deg 2 --json ";
  o.require(run_cli(args + a.string()) == 0, "suite run 1 failed");
  o.require(run_cli(args + b.string()) == 0, "suite run 2 failed");
  const std::string ja = slurp(a);
  o.require(!ja.empty() && ja == slurp(b), "JSON reports differ");
  if (o.pass) o.detail = "500 round trips; byte-identical suite JSON";
  return o;
}

}  // namespace

int main() {
  std::map<std::string, SuiteRun> runs;
  SuiteOptions options;
  options.trials = kTrials;
  options.seed = kSeed;
  options.max_deg = kMaxDeg;
  const auto start = std::chrono::steady_clock::now();
  for (const std::string& key : kStructures) {
    PlecticStructure p = catalog_lookup(key);
    VerificationReport r = run_suite(key, p, options);
    runs.emplace(key, SuiteRun{std::move(p), std::move(r)});
  }
  const double suite_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  int unexpected = 0;
  for (const auto& [key, run] : runs) {
    for (const Failure& f : run.report.failures) {
      std::cout << "  failure on " << key << ": " << f.identity << ": " << f.inputs
                << " -> " << f.residual << "\n";
      ++unexpected;
    }
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 Poisson recovery", poisson_recovery},
      {"2 generalized Jacobi", [&] { return generalized_jacobi(runs, suite_ms); }},
      {"3 Jacobi up to exact term", [&] { return no_jacobi(runs); }},
      {"4 technical lemma", [&] { return tech_lemma(runs); }},
      {"5 bracket properties", [&] { return bracket_prop(runs); }},
      {"6 dg Leibniz axioms", [&] { return leibniz(runs); }},
      {"7 Cartan calculus", [&] { return cartan_layer(runs); }},
      {"8 resolution exactness", [&] { return resolution(runs); }},
      {"9 validator soundness", validator},
      {"10 frontend", frontend},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << "\n";
    failed += !o.pass;
  }
  if (unexpected > 0) {
    std::cout << "FAIL suite: " << unexpected << " failures outside the criteria above\n";
    ++failed;
  }
  return failed == 0 ? 0 : 1;
}
