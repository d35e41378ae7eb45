#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "plectic/cartan.hpp"
#include "plectic/catalog.hpp"
#include "plectic/homotopy.hpp"
#include "plectic/parse.hpp"
#include "plectic/plectic.hpp"
#include "plectic/render.hpp"
#include "plectic/suite.hpp"

using namespace plectic;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

/// Bad command-line input; reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct StructureArgs {
  std::string catalog;
  std::string omega;
  int dim = 0;
  int n = 0;

  std::string label() const { return catalog.empty() ? "custom" : catalog; }
};

void add_structure_options(CLI::App* cmd, StructureArgs& s) {
  cmd->add_option("--catalog", s.catalog, "catalog key (symplectic:k, volume:n, multiphase:n:k, cartan3, hyperkahler)");
  cmd->add_option("--omega", s.omega, "custom (n+1)-form, e.g. \"dx1^dx2\"");
  cmd->add_option("--dim", s.dim, "chart dimension for --omega");
  cmd->add_option("--n", s.n, "n for --omega");
}

Form parse_or_usage(const std::string& text, std::size_t dim, const std::string& what) {
  try {
    return parse_form(text, dim);
  } catch (const SyntaxError& e) {
    throw UsageError(what + ": " + e.what());
  } catch (const DegreeMixError& e) {
    throw UsageError(what + ": " + e.what());
  } catch (const IndexError& e) {
    throw UsageError(what + ": " + e.what());
  }
}

PlecticStructure load_structure(const StructureArgs& s) {
  if (!s.catalog.empty() && !s.omega.empty()) {
    throw UsageError("give either --catalog or --omega, not both");
  }
  if (!s.catalog.empty()) {
    try {
      return catalog_lookup(s.catalog);
    } catch (const InvalidInput& e) {
      throw UsageError(e.what());
    }
  }
  if (s.omega.empty()) throw UsageError("one of --catalog or --omega is required");
  if (s.dim < 1 || s.n < 1) throw UsageError("--omega needs --dim M and --n N (both positive)");
  return validate_plectic(parse_or_usage(s.omega, static_cast<std::size_t>(s.dim), "--omega"),
                          s.n);
}

std::string describe_structure(const PlecticStructure& p) {
  return std::to_string(p.n()) + "-plectic on R^" + std::to_string(p.chart_dim()) +
         ", omega = " + render_form(p.omega());
}

int cmd_check(const StructureArgs& s) {
  try {
    const PlecticStructure p = load_structure(s);
    std::cout << "ok: " << describe_structure(p) << "\n";
    for (const std::string& w : p.warnings()) std::cout << "warning: " << w << "\n";
    return kPass;
  } catch (const NotClosedError& e) {
    std::cout << "not closed: d(omega) = " << render_form(e.residual()) << "\n";
  } catch (const DegenerateError& e) {
    std::cout << "degenerate: iota_v omega = 0 for v = " << render_vector_field(e.witness())
              << "\n";
  } catch (const DegreeMismatch& e) {
    std::cout << "wrong degree: " << e.what() << "\n";
  }
  return kFail;
}

HamiltonianForm hamiltonian_or_fail(const PlecticStructure& p, const Form& alpha,
                                    const std::string& what) {
  HamiltonianResult r = hamiltonian_vf(p, alpha);
  if (const auto* bad = std::get_if<NotHamiltonian>(&r)) {
    throw InvalidInput(what + " is not Hamiltonian: " + describe(bad->reason));
  }
  return std::get<HamiltonianForm>(std::move(r));
}

int cmd_ham(const StructureArgs& s, const std::string& alpha_text) {
  const PlecticStructure p = load_structure(s);
  const Form alpha = parse_or_usage(alpha_text, p.chart_dim(), "--alpha");
  HamiltonianResult r = hamiltonian_vf(p, alpha);
  if (const auto* bad = std::get_if<NotHamiltonian>(&r)) {
    std::cout << "not Hamiltonian: " << describe(bad->reason) << "\n";
    return kFail;
  }
  std::cout << render_vector_field(std::get<HamiltonianForm>(r).vf()) << "\n";
  return kPass;
}

int cmd_bracket(const StructureArgs& s, const std::string& a_text, const std::string& b_text) {
  const PlecticStructure p = load_structure(s);
  const HamiltonianForm a =
      hamiltonian_or_fail(p, parse_or_usage(a_text, p.chart_dim(), "--alpha"), "alpha");
  const HamiltonianForm b =
      hamiltonian_or_fail(p, parse_or_usage(b_text, p.chart_dim(), "--beta"), "beta");
  std::cout << render_form(ham_bracket(p, a, b).alpha()) << "\n";
  return kPass;
}

std::vector<GradedElement> read_elements(const PlecticStructure& p, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::string line;
  std::vector<int> degrees;
  bool header = false;
  std::vector<std::string> exprs;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!header) {
      const std::string prefix = "degrees:";
      if (line.rfind(prefix, 0) != 0) throw UsageError(path + ": first line must be 'degrees: d1,...,dm'");
      std::stringstream ss(line.substr(prefix.size()));
      std::string item;
      while (std::getline(ss, item, ',')) {
        try {
          std::size_t used = 0;
          degrees.push_back(std::stoi(item, &used));
          if (item.find_first_not_of(" \t\r", used) != std::string::npos) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
          throw UsageError(path + ": bad degree '" + item + "'");
        }
      }
      header = true;
      continue;
    }
    exprs.push_back(line);
  }
  if (!header) throw UsageError(path + ": missing 'degrees:' line");
  if (exprs.size() != degrees.size()) {
    throw UsageError(path + ": " + std::to_string(degrees.size()) + " degrees but " +
                     std::to_string(exprs.size()) + " expressions");
  }
  std::vector<GradedElement> out;
  for (std::size_t i = 0; i < exprs.size(); ++i) {
    const Form f = parse_or_usage(exprs[i], p.chart_dim(), path + " line " + std::to_string(i + 2));
    out.push_back(GradedElement::from_form(p, degrees[i], f));
  }
  return out;
}

int cmd_lk(const StructureArgs& s, int k, const std::string& path) {
  const PlecticStructure p = load_structure(s);
  const std::vector<GradedElement> elems = read_elements(p, path);
  const GradedValue value = l_k(p, k, elems);
  std::cout << (value ? render_form(value->payload()) : "0") << "\n";
  return kPass;
}

int cmd_jacobi(const StructureArgs& s, int m, const std::string& path, bool trace) {
  const PlecticStructure p = load_structure(s);
  const std::vector<GradedElement> elems = read_elements(p, path);
  const JacobiReport r = gen_jacobi_residual(p, m, elems);
  std::cout << "residual: " << render_form(r.residual) << "\n";
  if (trace || !r.is_zero()) {
    for (const JacobiTerm& t : r.trace) {
      std::cout << "  i=" << t.i << " j=" << t.j << " sigma=" << t.sigma.cycle_string()
                << " sign=" << (t.sign > 0 ? "+" : "-") << " term=" << render_form(t.contribution)
                << "\n";
    }
  }
  return r.is_zero() ? kPass : kFail;
}

GradedElement element_from_text(const PlecticStructure& p, const std::string& text,
                                const std::string& what) {
  const Form f = parse_or_usage(text, p.chart_dim(), what);
  // The form degree fixes the degree in L; a zero form counts as degree 0.
  const int degree = f.is_zero() ? 0 : p.n() - 1 - f.degree();
  if (degree < 0 || degree > p.n() - 1) {
    throw UsageError(what + ": a " + std::to_string(f.degree()) + "-form is not an element of L");
  }
  return GradedElement::from_form(p, degree, f);
}

int cmd_leibniz(const StructureArgs& s, const std::string& a_text, const std::string& b_text,
                const std::string& c_text) {
  const PlecticStructure p = load_structure(s);
  const GradedElement a = element_from_text(p, a_text, "--a");
  const GradedElement b = element_from_text(p, b_text, "--b");
  const GradedElement c = c_text.empty() ? b : element_from_text(p, c_text, "--c");
  const GradedValue ab = leibniz_bracket(p, a, b);
  std::cout << "[[a,b]] = " << (ab ? render_form(ab->payload()) : "0") << "\n";
  const LeibnizReport r = check_leibniz_axioms(p, a, b, c);
  std::cout << "derivation: " << render_form(r.derivation) << "\n";
  std::cout << "jacobi: " << render_form(r.jacobi) << "\n";
  if (r.skew) std::cout << "skew defect: " << render_form(*r.skew) << "\n";
  return r.all_zero() ? kPass : kFail;
}

int cmd_suite(const StructureArgs& s, const SuiteOptions& options, const std::string& json_path,
              bool timing) {
  const PlecticStructure p = load_structure(s);
  const VerificationReport report = run_suite(s.label(), p, options);
  const std::string json = report_json(report, timing);
  if (json_path == "-") {
    std::cout << json;
  } else {
    if (!json_path.empty()) {
      std::ofstream out(json_path, std::ios::binary);
      if (!out) throw UsageError("cannot write " + json_path);
      out << json;
    }
    int total = 0;
    for (const auto& [name, count] : report.checks) total += count;
    std::cout << report.structure << ": " << total << " checks over " << report.trials
              << " trials, " << report.failures.size() << " failures\n";
    for (const Failure& f : report.failures) {
      std::cout << "FAIL " << f.identity << ": " << f.inputs << "\n  residual: " << f.residual
                << "\n";
    }
  }
  return report.passed() ? kPass : kFail;
}

std::uint64_t default_seed() {
  const char* env = std::getenv("PLECTIC_SEED");
  if (env == nullptr || *env == '\0') return 0;
  try {
    return std::stoull(env);
  } catch (const std::logic_error&) {
    throw UsageError(std::string("PLECTIC_SEED is not an unsigned integer: ") + env);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of n-plectic structures and their Lie n-algebras"};
  app.require_subcommand(1);

  StructureArgs s;
  std::string alpha, beta, a_text, b_text, c_text, elems_path, json_path;
  std::string only;
  int k = 0, m = 0;
  bool trace = false, timing = false;
  SuiteOptions options;
  std::uint64_t seed = 0;

  auto* check = app.add_subcommand("check", "validate an n-plectic structure");
  add_structure_options(check, s);

  auto* ham = app.add_subcommand("ham", "Hamiltonian vector field of an (n-1)-form");
  add_structure_options(ham, s);
  ham->add_option("--alpha", alpha, "(n-1)-form")->required();

  auto* bracket = app.add_subcommand("bracket", "bracket {alpha, beta} of Hamiltonian forms");
  add_structure_options(bracket, s);
  bracket->add_option("--alpha", alpha, "Hamiltonian (n-1)-form")->required();
  bracket->add_option("--beta", beta, "Hamiltonian (n-1)-form")->required();

  auto* lk = app.add_subcommand("lk", "apply the k-ary bracket l_k");
  add_structure_options(lk, s);
  lk->add_option("--k", k, "arity")->required();
  lk->add_option("--elems", elems_path, "element file")->required();

  auto* jacobi = app.add_subcommand("jacobi", "generalized Jacobi identity of arity m");
  add_structure_options(jacobi, s);
  jacobi->add_option("--m", m, "arity")->required();
  jacobi->add_option("--elems", elems_path, "element file")->required();
  jacobi->add_flag("--trace", trace, "print every term, also on success");

  auto* leibniz = app.add_subcommand("leibniz", "dg Leibniz axioms on elements of L");
  add_structure_options(leibniz, s);
  leibniz->add_option("--a", a_text, "element a")->required();
  leibniz->add_option("--b", b_text, "element b")->required();
  leibniz->add_option("--c", c_text, "element c (defaults to b)");

  auto* suite = app.add_subcommand("suite", "random-input property suite");
  add_structure_options(suite, s);
  suite->add_option("--trials", options.trials, "number of trials")->check(CLI::NonNegativeNumber);
  suite->add_option("--seed", seed, "seed (default: PLECTIC_SEED or 0)");
  suite->add_option("--max-deg", options.max_deg, "coefficient degree bound")->check(CLI::NonNegativeNumber);
  suite->add_option("--json", json_path, "write the JSON report here ('-' for stdout)");
  suite->add_option("--only", only, "comma-separated identity families");
  suite->add_flag("--timing", timing, "include elapsed_ms in the JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*check) return cmd_check(s);
    if (*ham) return cmd_ham(s, alpha);
    if (*bracket) return cmd_bracket(s, alpha, beta);
    if (*lk) return cmd_lk(s, k, elems_path);
    if (*jacobi) return cmd_jacobi(s, m, elems_path, trace);
    if (*leibniz) return cmd_leibniz(s, a_text, b_text, c_text);
    if (*suite) {
      options.seed = suite->count("--seed") ? seed : default_seed();
      std::stringstream ss(only);
      for (std::string item; std::getline(ss, item, ',');) {
        if (item.empty()) continue;
        const auto& names = suite_identities();
        if (std::find(names.begin(), names.end(), item) == names.end()) {
          throw UsageError("unknown identity family '" + item + "'");
        }
        options.only.push_back(item);
      }
      return cmd_suite(s, options, json_path, timing);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const NotClosedError& e) {
    std::cerr << "error: omega is not closed: d(omega) = " << render_form(e.residual()) << "\n";
    return kFail;
  } catch (const DegenerateError& e) {
    std::cerr << "error: omega is degenerate, witness v = " << render_vector_field(e.witness())
              << "\n";
    return kFail;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
