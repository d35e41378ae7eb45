#include <gtest/gtest.h>

#include <array>

#include "plectic/cartan.hpp"
#include "plectic/catalog.hpp"
#include "support.hpp"

using namespace plectic;

namespace {

Form form(const std::string& text, std::size_t dim) { return parse_form(text, dim); }

using Vec3 = std::array<Rational, 3>;

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Rational dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 unit(int i) {
  Vec3 e{Rational(0), Rational(0), Rational(0)};
  e[static_cast<std::size_t>(i)] = 1;
  return e;
}

// Killing form of (R^3, x) via tr(ad_x ad_y) = sum_k e_k . (x x (y x e_k)).
Rational killing(const Vec3& x, const Vec3& y) {
  Rational t = 0;
  for (int k = 0; k < 3; ++k) t += dot(unit(k), cross(x, cross(y, unit(k))));
  return t;
}

Rational nu(int a, int b, int c) { return killing(unit(a), cross(unit(b), unit(c))); }

}  // namespace

TEST(Symplectic, Examples) {
  EXPECT_EQ(make_symplectic(1).omega(), form("dx1^dx2", 2));
  const PlecticStructure p2 = make_symplectic(2);
  EXPECT_EQ(p2.omega(), form("dx1^dx3 + dx2^dx4", 4));
  EXPECT_EQ(row_reduce(p2.flat_matrix()).rank(), 4u);
  const PlecticStructure p3 = make_symplectic(3);
  EXPECT_EQ(p3.chart_dim(), 6u);
  EXPECT_EQ(row_reduce(p3.flat_matrix()).rank(), 6u);
  EXPECT_THROW(make_symplectic(0), InvalidInput);
}

TEST(Volume, Examples) {
  EXPECT_EQ(make_volume(2).omega(), form("dx1^dx2^dx3", 3));
  EXPECT_EQ(make_volume(1).omega(), form("dx1^dx2", 2));
  const PlecticStructure p = make_volume(4);
  EXPECT_EQ(p.n(), 4);
  EXPECT_EQ(row_reduce(p.flat_matrix()).rank(), 5u);
}

TEST(Multiphase, CotangentOfLineIsSymplectic) {
  EXPECT_EQ(make_multiphase(1, 1).omega(), form("dx1^dx2", 2));
}

TEST(Multiphase, DegreeOneMatchesSymplectic) {
  for (int k = 1; k <= 3; ++k) EXPECT_EQ(make_multiphase(1, k).omega(), make_symplectic(k).omega());
}

TEST(Multiphase, BosonicStringChart) {
  const PlecticStructure p = make_multiphase(2, 3);
  EXPECT_EQ(p.n(), 2);
  EXPECT_EQ(p.chart_dim(), 6u);
  EXPECT_EQ(multiphase_momentum_index(3, {0, 1}), 3);
  EXPECT_EQ(multiphase_momentum_index(3, {0, 2}), 4);
  EXPECT_EQ(multiphase_momentum_index(3, {1, 2}), 5);
  // theta = p12 dx1^dx2 + p13 dx1^dx3 + p23 dx2^dx3 and omega = -d theta.
  const Form theta = form("x4*dx1^dx2 + x5*dx1^dx3 + x6*dx2^dx3", 6);
  EXPECT_EQ(p.omega(), -exterior_derivative(theta));
  EXPECT_EQ(p.omega(), form("-dx1^dx2^dx4 - dx1^dx3^dx5 - dx2^dx3^dx6", 6));
  EXPECT_TRUE(exterior_derivative(p.omega()).is_zero());
}

TEST(Multiphase, ChartDimension) {
  EXPECT_EQ(make_multiphase(2, 4).chart_dim(), 4u + 6u);
  EXPECT_EQ(make_multiphase(3, 4).chart_dim(), 4u + 4u);
  EXPECT_THROW(make_multiphase(3, 2), InvalidInput);
  EXPECT_THROW(make_multiphase(0, 2), InvalidInput);
}

TEST(Cartan3, CoefficientFromStructureConstants) {
  EXPECT_EQ(cartan3_coefficient(), nu(0, 1, 2));
  EXPECT_EQ(cartan3_coefficient(), -2);
  EXPECT_EQ(make_cartan3().omega(), form("-2*dx1^dx2^dx3", 3));
}

TEST(Cartan3, FullAntisymmetry) {
  const PlecticStructure p = make_cartan3();
  const std::array<std::array<int, 3>, 6> perms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                                 {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  for (const auto& s : perms) {
    const int sign = (s == perms[0] || s == perms[3] || s == perms[4]) ? 1 : -1;
    EXPECT_EQ(nu(s[0], s[1], s[2]), sign * nu(0, 1, 2));
    // omega(e_a, e_b, e_c) = iota_{e_c} iota_{e_b} iota_{e_a} omega
    const Multivector v = wedge(wedge(Multivector::basis(3, {s[0]}), Multivector::basis(3, {s[1]})),
                                Multivector::basis(3, {s[2]}));
    EXPECT_EQ(interior_product(v, p.omega()), form(nu(s[0], s[1], s[2]).get_str(), 3));
  }
}

TEST(Cartan3, Closed) { EXPECT_TRUE(exterior_derivative(make_cartan3().omega()).is_zero()); }

TEST(Hyperkahler, KahlerFormRelations) {
  const auto theta = hyperkahler_kahler_forms();
  ASSERT_EQ(theta.size(), 3u);
  const Form vol = form("dx1^dx2^dx3^dx4", 4);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(wedge(theta[i], theta[i]), vol.scaled(Rational(2)));
    for (std::size_t j = 0; j < 3; ++j) {
      if (i != j) {
        EXPECT_TRUE(wedge(theta[i], theta[j]).is_zero());
      }
    }
  }
  EXPECT_EQ(make_hyperkahler_flat().omega(), vol.scaled(Rational(6)));
  EXPECT_EQ(make_hyperkahler_flat().n(), 3);
}

TEST(Lookup, KeysAndErrors) {
  EXPECT_EQ(catalog_lookup("symplectic:2").omega(), make_symplectic(2).omega());
  EXPECT_EQ(catalog_lookup("multiphase:2:3").chart_dim(), 6u);
  EXPECT_EQ(catalog_lookup("cartan3").n(), 2);
  EXPECT_EQ(catalog_lookup("hyperkahler").n(), 3);
  for (const char* bad : {"", "symplectic", "symplectic:x", "volume:2:3", "nope", "cartan3:1",
                          "multiphase:3:2", "volume:-1", "volume:2x"}) {
    EXPECT_THROW(catalog_lookup(bad), InvalidInput) << bad;
  }
}

TEST(Lookup, EverySampleValidatesWithoutWarnings) {
  for (const std::string& key : catalog_sample_keys()) {
    const PlecticStructure p = catalog_lookup(key);
    EXPECT_TRUE(p.warnings().empty()) << key;
    EXPECT_EQ(row_reduce(p.flat_matrix()).rank(), p.chart_dim()) << key;
    for (const auto& [idx, c] : p.omega().terms()) EXPECT_TRUE(c.is_constant()) << key;
  }
}
