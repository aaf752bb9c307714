#include <doctest.h>

#include <map>
#include <random>

#include "arrspec/errors.hpp"
#include "arrspec/spectrum.hpp"
#include "arrspec/verify.hpp"
#include "helpers.hpp"

using namespace arrspec;
using arrspec::testing::fixture_arrangement;
using arrspec::testing::hyperplane;
using arrspec::testing::q;

namespace {

std::map<Rational, Integer> as_map(const std::vector<SpectralPoint>& points) {
  std::map<Rational, Integer> m;
  for (const auto& pt : points) m[pt.alpha] += pt.mult;
  return m;
}

const std::map<Rational, Integer> kExampleB = {
    {q(3, 4), 1}, {q(1), 3}, {q(3, 2), 1}, {q(2), -3}, {q(9, 4), 1}};

}  // namespace

TEST_CASE("three concurrent lines") {
  SpectrumEngine engine(fixture_arrangement("example-a"));
  auto result = engine.run();
  CHECK(as_map(result.points) == std::map<Rational, Integer>{{q(2, 3), 1}, {q(1), 2}, {q(4, 3), 1}});
  CHECK(result.warnings.empty());
  CHECK(engine.multiplicity(1, 0) == 0);  // α = 1/3
  CHECK(engine.multiplicity(2, 1) == 0);  // α = 5/3
  CHECK(format_spectrum(result.points) == "t^(2/3) + 2t + t^(4/3)");
}

TEST_CASE("R classes of three concurrent lines") {
  SpectrumEngine engine(fixture_arrangement("example-a"));
  const auto& ideal = engine.ideal();
  const Ring& r = ideal.ring();
  auto c0 = r.var(0);
  auto expect = [&](long k, int p, const Polynomial& value) {
    auto got = r_alpha(beta(k, engine.arrangement()), p, engine.classes(), engine.building());
    CAPTURE(k);
    CAPTURE(p);
    CHECK(ideal.contains(got - value));
  };
  expect(1, 0, r.one() + c0);
  expect(2, 0, r.one() + c0 * q(2));
  expect(3, 0, r.one() + c0 * q(3));
  expect(1, 1, r.one());
  expect(2, 1, r.one() + c0);
}

TEST_CASE("degree-4 arrangements in C^3") {
  for (const char* name : {"example-b1", "example-b2"}) {
    CAPTURE(name);
    SpectrumEngine engine(fixture_arrangement(name));
    auto result = engine.run();
    CHECK(as_map(result.points) == kExampleB);
    CHECK(format_spectrum(result.points) == "t^(3/4) + 3t + t^(3/2) - 3t^2 + t^(9/4)");

    const auto& ideal = engine.ideal();
    const Ring& r = ideal.ring();
    auto c0 = r.var(0);
    auto c0sq = c0 * c0;
    Polynomial bsum = r.zero();
    for (std::size_t i = 1; i <= 6; ++i) bsum += r.var(i);
    auto rr = [&](long k, int p) { return r_alpha(beta(k, engine.arrangement()), p, engine.classes(), engine.building()); };
    CHECK(ideal.contains(rr(1, 0) - (c0sq * q(1, 2) + c0 + r.one())));
    CHECK(ideal.contains(rr(3, 0) - (c0sq * q(3, 2) + bsum + c0 * q(3) + r.one())));
    CHECK(ideal.contains(rr(4, 0) - (c0sq * q(5) + bsum + c0 * q(4) + r.one())));
    CHECK(ideal.contains(rr(3, 1) - (c0sq * q(-1, 2) + bsum * q(2) + c0 * q(5) + r.constant(2))));
    CHECK(ideal.contains(rr(4, 1) - (c0sq * q(11, 2) + bsum * q(2) + c0 * q(7) + r.constant(2))));
    CHECK(ideal.contains(rr(1, 2) - r.one()));
    CHECK(ideal.contains(rr(3, 2) - (-c0sq + bsum + c0 * q(2) + r.one())));
  }
}

TEST_CASE("eigenvalue data") {
  Arrangement arr(2, {hyperplane({1, 0}, 2), hyperplane({0, 1}), hyperplane({1, 1})});
  auto e = beta(1, arr);
  CHECK(e.beta == std::vector<Rational>{q(1, 2), q(3, 4), q(3, 4)});
  CHECK(e.sum_beta == 2);
  CHECK(beta(4, arr).sum_beta == 0);
  CHECK_THROWS_AS(beta(0, arr), ArgumentError);
  CHECK_THROWS_AS(beta(5, arr), ArgumentError);

  SpectrumEngine engine(arr);
  const auto& g = engine.building();
  CHECK(s_value(0, e, g) == 2);
  CHECK(s_value(1, e, g) == q(1, 2));
  CHECK(a_coeff(0, e, g) == 2 - 2 - 1 + 1);
  CHECK(a_coeff(1, e, g) == 1 - 0 - 1);
  CHECK_THROWS_AS(engine.multiplicity(4, 1), ArgumentError);
  CHECK_THROWS_AS(engine.multiplicity(1, 2), ArgumentError);
}

TEST_CASE("n = 2 oracle and symmetry") {
  for (long d = 1; d <= 8; ++d) {
    CAPTURE(d);
    auto result = spectrum(fixture_arrangement("lines:" + std::to_string(d)));
    CHECK(as_map(result.points) == as_map(reduced_lines_spectrum(d)));
    for (const auto& pt : result.points) CHECK(as_map(result.points)[Rational(2) - pt.alpha] == pt.mult);
  }
  CHECK(spectrum(fixture_arrangement("lines:1")).warnings.size() == 1);
}

TEST_CASE("weighted lines") {
  auto result = spectrum(fixture_arrangement("example-a-weighted"));
  CHECK(as_map(result.points) == std::map<Rational, Integer>{{q(1, 2), 1}, {q(3, 4), 1}, {q(1), 2}, {q(5, 4), 1}});
}

TEST_CASE("per-eigenvalue Euler identity and full verification on random arrangements") {
  std::mt19937 rng(271828);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = trial < 8 ? 3 : 2;
    auto arr = arrspec::testing::random_arrangement(rng, n, n + 1 + trial % 2, trial % 3 == 0 ? 2 : 1);
    CAPTURE(trial);
    SpectrumEngine engine(arr);
    auto result = engine.run(2);
    const Integer chi = euler_projective_complement(engine.lattice());
    const Integer expected = (n - 1) % 2 == 0 ? chi : Integer(-chi);
    for (const auto& s : eigenvalue_sums(result)) CHECK(s == expected);
    for (const auto& pt : result.points) {
      CHECK(pt.alpha > 0);
      CHECK(pt.alpha < n);
    }
    auto report = verify(engine, result, 2);
    for (const auto& c : report.checks) {
      CAPTURE(c.name);
      CAPTURE(c.detail);
      CHECK(c.passed);
    }
  }
}

TEST_CASE("invariance under relabeling and thread count") {
  auto arr = fixture_arrangement("generic3d:5");
  auto base = spectrum(arr);
  SpectrumOptions eight;
  eight.jobs = 8;
  CHECK(spectrum(arr, eight).points == base.points);

  std::mt19937 rng(11);
  std::vector<std::size_t> order{0, 1, 2, 3, 4};
  for (int trial = 0; trial < 3; ++trial) {
    std::shuffle(order.begin(), order.end(), rng);
    CHECK(spectrum(arr.permuted(order)).points == base.points);
  }
}

TEST_CASE("explicit maximal building set matches the default") {
  auto arr = fixture_arrangement("example-b2");
  SpectrumOptions opts;
  opts.building_set = std::vector<Closure>{{0}, {1}, {2}, {3}, {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  auto result = spectrum(arr, opts);
  CHECK(as_map(result.points) == kExampleB);
  CHECK(result.warnings.empty());
}

TEST_CASE("non-essential arrangement warns") {
  auto result = spectrum(Arrangement(3, {hyperplane({1, 0, 0}), hyperplane({0, 1, 0}), hyperplane({1, 1, 0})}));
  REQUIRE(result.warnings.size() == 1);
  CHECK(result.warnings[0].find("not essential") != std::string::npos);
}
