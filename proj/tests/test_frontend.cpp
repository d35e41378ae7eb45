#include <gtest/gtest.h>

#include <json.hpp>

#include "plectic/cartan.hpp"
#include "plectic/catalog.hpp"
#include "plectic/parse.hpp"
#include "plectic/random_forms.hpp"
#include "plectic/render.hpp"
#include "plectic/suite.hpp"
#include "support.hpp"

using namespace plectic;
using plectic::testing::fn;

TEST(Parse, SymplecticForm) {
  EXPECT_EQ(parse_form("dx1^dx2 + dx3^dx4", 4),
            Form::basis(4, {0, 1}) + Form::basis(4, {2, 3}));
}

TEST(Parse, MonomialCoefficient) {
  const Form f = parse_form("3/2 * x1**2 * dx2 ^ dx3", 3);
  Poly c = Poly::monomial(3, {2, 0, 0}, Rational(3, 2));
  EXPECT_EQ(f, Form::basis(3, {1, 2}, RationalFn(c)));
}

TEST(Parse, WhitespaceInsensitive) {
  EXPECT_EQ(parse_form("  x1*dx2^dx3", 3), parse_form("x1 * dx2 ^ dx3 ", 3));
  EXPECT_EQ(parse_form("d( x1 * dx2 )", 3), parse_form("dx1^dx2", 3));
}

TEST(Parse, DegreeMix) {
  try {
    parse_form("dx1 + dx1^dx2", 2);
    FAIL();
  } catch (const DegreeMixError& e) {
    EXPECT_EQ(e.offset(), 4u);
  }
  EXPECT_THROW(parse_form("x1 - dx1", 2), DegreeMixError);
}

TEST(Parse, SyntaxErrorsCarryOffsets) {
  struct Case {
    const char* text;
    std::size_t offset;
  };
  for (const Case& c : {Case{"dx1 ^", 5}, Case{"dx1 ^^ dx2", 5}, Case{"(x1", 3}, Case{"x1 $", 3},
                        Case{"dx1*dx2", 3}, Case{"dx1 / dx2", 4}, Case{"dx", 2},
                        Case{"e1", 0}, Case{"x1**", 4}, Case{"(x1 + x2)**2", 9}}) {
    try {
      parse_form(c.text, 3);
      ADD_FAILURE() << "accepted " << c.text;
    } catch (const SyntaxError& e) {
      EXPECT_EQ(e.offset(), c.offset) << c.text << ": " << e.what();
    }
  }
}

TEST(Parse, KindMixingRejected) {
  EXPECT_THROW(parse_multivector("e1 + dx1", 2), SyntaxError);
  EXPECT_THROW(parse_multivector("d(x1)", 2), SyntaxError);
  EXPECT_EQ(parse_multivector("x2*e1^e2", 2), Multivector::basis(2, {0, 1}, fn("x2", 2)));
}

TEST(Parse, IndexOutOfChart) {
  EXPECT_THROW(parse_form("dx4", 3), IndexError);
  EXPECT_THROW(parse_form("x0*dx1", 3), IndexError);
}

TEST(Parse, DivisionAndDerivative) {
  EXPECT_EQ(parse_form("dx1/(1 + x2)", 2), Form::basis(2, {0}, fn("1/(1 + x2)", 2)));
  EXPECT_THROW(parse_form("dx1/(x1 - x1)", 2), DivisionByZero);
  EXPECT_EQ(parse_form("d(x1*x2)", 2), exterior_derivative(Form::function(fn("x1*x2", 2))));
  EXPECT_TRUE(parse_form("d(d(x1**3*dx2))", 3).is_zero());
}

TEST(Parse, CancellingSumKeepsDegree) {
  const Form f = parse_form("dx1^dx2 - dx1^dx2", 2);
  EXPECT_TRUE(f.is_zero());
  EXPECT_EQ(f.degree(), 2);
}

TEST(Render, Examples) {
  EXPECT_EQ(render_form(Form(3, 2)), "0");
  EXPECT_EQ(render_form(Form::basis(2, {0, 1})), "dx1^dx2");
  EXPECT_EQ(render_form(exterior_derivative(parse_form("x1*dx2", 2))), "dx1^dx2");
  EXPECT_EQ(render_form(parse_form("3/2*x1**2*dx2^dx3", 3)), "3/2*x1**2*dx2^dx3");
  EXPECT_EQ(render_form(parse_form("dx2 - dx1", 2)), "-dx1 + dx2");
  EXPECT_EQ(render_form(parse_form("(x1 + x2)*dx1 - 2*x2*dx2", 2)), "(x1 + x2)*dx1 - 2*x2*dx2");
  EXPECT_EQ(render_form(parse_form("dx1/(2*x2 + 2)", 2)), "(1/2)/(x2 + 1)*dx1");
  EXPECT_EQ(render_form(parse_form("1 - x1", 2)), "-x1 + 1");
  EXPECT_EQ(render_form(parse_form("-3*x1", 2)), "-3*x1");
  EXPECT_EQ(render_multivector(parse_multivector("e2^e1", 2)), "-e1^e2");
}

TEST(Render, RoundTripOnRandomForms) {
  Rng rng(2024);
  int rational = 0;
  for (int t = 0; t < 500; ++t) {
    const std::size_t dim = static_cast<std::size_t>(rng.uniform(1, 6));
    const int k = rng.uniform(0, static_cast<int>(dim));
    Form f = random_form(rng, dim, k, 3, 4);
    if (rng.chance(1, 4)) {
      const Poly den = Poly::constant(dim, Rational(1)) + random_poly(rng, dim, 2, 2);
      if (!den.is_zero()) {
        f = f.scaled(RationalFn(den).inverse());
        ++rational;
      }
    }
    const std::string text = render_form(f);
    EXPECT_EQ(parse_form(text, dim), f) << text;
    EXPECT_EQ(render_form(parse_form(text, dim)), text);

    const Multivector v = random_multivector(rng, dim, k, 2, 3);
    EXPECT_EQ(parse_multivector(render_multivector(v), dim), v);
  }
  EXPECT_GT(rational, 50);
}

TEST(Rng, StandardEngineAndStableStream) {
  Rng a(5489);
  for (int i = 0; i < 9999; ++i) a.bits();
  EXPECT_EQ(a.bits(), 9981545732273789042ull);
  Rng b(7, 1, 2), c(7, 1, 2), d(7, 2, 1);
  EXPECT_EQ(b.bits(), c.bits());
  EXPECT_NE(Rng(7, 1, 2).bits(), d.bits());
}

TEST(Rng, UniformStaysInRange) {
  Rng r(1);
  for (int i = 0; i < 1000; ++i) {
    const int v = r.uniform(-2, 3);
    EXPECT_GE(v, -2);
    EXPECT_LE(v, 3);
  }
}

TEST(Sampler, ProducesCertifiedNontrivialFields) {
  const PlecticStructure p = make_multiphase(2, 3);
  const HamiltonianSampler sampler(p, 2);
  Rng rng(3);
  int nonzero = 0;
  for (int t = 0; t < 40; ++t) {
    const HamiltonianForm h = sampler.sample(rng);
    nonzero += !h.vf().is_zero();
    const HamiltonianResult solved = hamiltonian_vf(p, h.alpha());
    ASSERT_TRUE(std::holds_alternative<HamiltonianForm>(solved));
    EXPECT_EQ(std::get<HamiltonianForm>(solved).vf(), h.vf());
    for (const auto& [idx, c] : h.alpha().terms()) {
      EXPECT_TRUE(c.is_polynomial());
      EXPECT_LE(c.num().total_degree(), 2);
    }
  }
  EXPECT_GT(nonzero, 25);
}

TEST(Suite, DeterministicReport) {
  const PlecticStructure p = make_volume(3);
  SuiteOptions options;
  options.trials = 5;
  options.seed = 99;
  const std::string a = report_json(run_suite("volume:3", p, options));
  const std::string b = report_json(run_suite("volume:3", p, options));
  EXPECT_EQ(a, b);
  options.seed = 100;
  EXPECT_NE(a, report_json(run_suite("volume:3", p, options)));
}

TEST(Suite, ReportSchema) {
  const PlecticStructure p = make_symplectic(1);
  SuiteOptions options;
  options.trials = 3;
  options.seed = 1;
  options.only = {"hamiltonian_laws"};
  const VerificationReport r = run_suite("symplectic:1", p, options);
  EXPECT_TRUE(r.passed());
  const auto j = nlohmann::json::parse(report_json(r));
  EXPECT_EQ(j["structure"], "symplectic:1");
  EXPECT_EQ(j["suite"], "hamiltonian_laws");
  EXPECT_EQ(j["trials"], 3);
  EXPECT_EQ(j["seed"], 1);
  EXPECT_TRUE(j["failures"].empty());
  EXPECT_EQ(j["passed"], true);
  EXPECT_FALSE(j.contains("elapsed_ms"));
  EXPECT_EQ(j["checks"]["poisson_bracket"], 3);
  EXPECT_TRUE(nlohmann::json::parse(report_json(r, true)).contains("elapsed_ms"));
  options.only = {"no_such_identity"};
  EXPECT_THROW(run_suite("symplectic:1", p, options), InvalidInput);
}

TEST(Suite, FailuresAreReported) {
  VerificationReport r;
  r.structure = "x";
  r.failures.push_back({"d_squared", "a = dx1", "dx1^dx2"});
  const auto j = nlohmann::json::parse(report_json(r));
  EXPECT_EQ(j["passed"], false);
  EXPECT_EQ(j["failures"][0]["identity"], "d_squared");
  EXPECT_EQ(j["failures"][0]["residual"], "dx1^dx2");
}
