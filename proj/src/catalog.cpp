#include "plectic/catalog.hpp"

#include <algorithm>
#include <array>
#include <charconv>

#include "plectic/cartan.hpp"

namespace plectic {

namespace {

Form one_form(std::size_t dim, int i) { return Form::basis(dim, {i}); }

}  // namespace

PlecticStructure make_symplectic(int k) {
  if (k < 1) throw InvalidInput("symplectic:k needs k >= 1");
  const auto dim = static_cast<std::size_t>(2 * k);
  Form omega(dim, 2);
  for (int i = 0; i < k; ++i) omega += Form::basis(dim, {i, k + i});
  return validate_plectic(omega, 1);
}

PlecticStructure make_volume(int n) {
  if (n < 1) throw InvalidInput("volume:n needs n >= 1");
  const auto dim = static_cast<std::size_t>(n + 1);
  MultiIndex all(dim);
  for (std::size_t i = 0; i < dim; ++i) all[i] = static_cast<int>(i);
  return validate_plectic(Form::basis(dim, all), n);
}

int multiphase_momentum_index(int k, const MultiIndex& subset) {
  const auto subsets = multi_indices(static_cast<std::size_t>(k), static_cast<int>(subset.size()));
  const auto it = std::find(subsets.begin(), subsets.end(), subset);
  if (it == subsets.end()) throw IndexError("not an increasing subset of the base coordinates");
  return k + static_cast<int>(it - subsets.begin());
}

PlecticStructure make_multiphase(int n, int k) {
  if (n < 1 || n > k) throw InvalidInput("multiphase:n:k needs 1 <= n <= k");
  const auto subsets = multi_indices(static_cast<std::size_t>(k), n);
  const std::size_t dim = static_cast<std::size_t>(k) + subsets.size();
  Form theta(dim, n);
  for (std::size_t s = 0; s < subsets.size(); ++s) {
    const int p = k + static_cast<int>(s);
    theta.add_term(subsets[s], RationalFn::variable(dim, static_cast<std::size_t>(p)));
  }
  return validate_plectic(-exterior_derivative(theta), n);
}

Rational cartan3_coefficient() {
  auto eps = [](int i, int j, int k) -> int {
    if (i == j || j == k || i == k) return 0;
    // Even permutations of (0,1,2) are the cyclic ones.
    return ((j - i + 3) % 3 == 1) ? 1 : -1;
  };
  // ad(e_i) has matrix entries (ad e_i)_{kj} = eps_ijk.
  auto ad = [&](int i) {
    std::array<std::array<Rational, 3>, 3> m;
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) m[r][c] = eps(i, c, r);
    }
    return m;
  };
  auto killing = [&](const std::array<Rational, 3>& a, const std::array<Rational, 3>& b) {
    std::array<std::array<Rational, 3>, 3> ada{}, adb{};
    for (int i = 0; i < 3; ++i) {
      const auto m = ad(i);
      for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
          ada[r][c] += a[i] * m[r][c];
          adb[r][c] += b[i] * m[r][c];
        }
      }
    }
    Rational trace = 0;
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) trace += ada[r][c] * adb[c][r];
    }
    return trace;
  };
  auto bracket = [&](int i, int j) {
    std::array<Rational, 3> out{};
    for (int k = 0; k < 3; ++k) out[k] = eps(i, j, k);
    return out;
  };
  const std::array<Rational, 3> e1{1, 0, 0};
  return killing(e1, bracket(1, 2));
}

PlecticStructure make_cartan3() {
  return validate_plectic(
      Form::basis(3, {0, 1, 2}, RationalFn::constant(3, cartan3_coefficient())), 2);
}

std::vector<Form> hyperkahler_kahler_forms() {
  auto w = [](int i, int j) { return wedge(one_form(4, i), one_form(4, j)); };
  return {w(0, 1) + w(2, 3), w(0, 2) - w(1, 3), w(0, 3) + w(1, 2)};
}

PlecticStructure make_hyperkahler_flat() {
  Form omega(4, 4);
  for (const Form& theta : hyperkahler_kahler_forms()) omega += wedge(theta, theta);
  return validate_plectic(omega, 3);
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

int parse_parameter(const std::string& text, const std::string& key) {
  int value = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw InvalidInput("bad parameter '" + text + "' in catalog key '" + key + "'");
  }
  return value;
}

}  // namespace

PlecticStructure catalog_lookup(const std::string& key) {
  const auto parts = split(key, ':');
  const std::string& family = parts.front();
  if (family == "symplectic" && parts.size() == 2) {
    return make_symplectic(parse_parameter(parts[1], key));
  }
  if (family == "volume" && parts.size() == 2) return make_volume(parse_parameter(parts[1], key));
  if (family == "multiphase" && parts.size() == 3) {
    return make_multiphase(parse_parameter(parts[1], key), parse_parameter(parts[2], key));
  }
  if (family == "cartan3" && parts.size() == 1) return make_cartan3();
  if (family == "hyperkahler" && parts.size() == 1) return make_hyperkahler_flat();
  throw InvalidInput("unknown catalog key '" + key +
                     "' (expected symplectic:k, volume:n, multiphase:n:k, cartan3 or hyperkahler)");
}

std::vector<std::string> catalog_sample_keys() {
  return {"symplectic:1", "symplectic:2", "volume:2",  "volume:3",
          "volume:4",     "multiphase:2:3", "cartan3", "hyperkahler"};
}

}  // namespace plectic
