#include <doctest.h>

#include <random>

#include "arrspec/chern.hpp"
#include "arrspec/errors.hpp"
#include "helpers.hpp"

using namespace arrspec;
using arrspec::testing::fixture_arrangement;
using arrspec::testing::hyperplane;
using arrspec::testing::q;

namespace {

BuildingSet building(const std::string& name) { return maximal_building(build_lattice(fixture_arrangement(name))); }

Polynomial sum_vars(const Ring& r, std::size_t lo, std::size_t hi) {
  Polynomial s = r.zero();
  for (std::size_t i = lo; i <= hi; ++i) s += r.var(i);
  return s;
}

Monomial mono(std::vector<std::uint16_t> e) { return Monomial(std::move(e)); }

}  // namespace

TEST_CASE("Todd series coefficients") {
  auto qs = q_series(6);
  CHECK(qs[0] == 1);
  CHECK(qs[1] == q(1, 2));
  CHECK(qs[2] == q(1, 12));
  CHECK(qs[3] == 0);
  CHECK(qs[4] == q(-1, 720));
  CHECK(qs[5] == 0);

  // Q(x) · (1 − e^{−x}) = x
  auto x = Polynomial::variable(1, 6, 0);
  auto one_minus = Polynomial::constant(1, 6, 1) - exp(-x);
  CHECK(compose(qs, x) * one_minus == x);
  CHECK_THROWS_AS(q_series(-1), ArgumentError);
}

TEST_CASE("rewriting in elementary symmetric polynomials") {
  const int m = 3;
  auto x = [&](std::size_t i) { return Polynomial::variable(m, 4, i); };
  auto p2 = x(0) * x(0) + x(1) * x(1) + x(2) * x(2);
  auto e = to_elementary(p2);
  CHECK(e.coefficient(mono({2, 0, 0})) == 1);
  CHECK(e.coefficient(mono({0, 1, 0})) == -2);
  CHECK(e.term_count() == 2);

  CHECK_THROWS_AS(to_elementary(x(0)), InternalError);
}

TEST_CASE("Chern classes of the second exterior power of a rank-3 bundle") {
  auto k = exterior_power_universal(3, 2);
  REQUIRE(k.size() == 4);
  CHECK(k[0].constant_term() == 1);
  // c1 = 2e1
  CHECK(k[1].term_count() == 1);
  CHECK(k[1].coefficient(mono({1, 0, 0})) == 2);
  // c2 = e1² + e2
  CHECK(k[2].term_count() == 2);
  CHECK(k[2].coefficient(mono({2, 0, 0})) == 1);
  CHECK(k[2].coefficient(mono({0, 1, 0})) == 1);
  // c3 = e1 e2 − e3
  CHECK(k[3].term_count() == 2);
  CHECK(k[3].coefficient(mono({1, 1, 0})) == 1);
  CHECK(k[3].coefficient(mono({0, 0, 1})) == -1);

  // Λ^rank is the determinant line bundle.
  auto det = exterior_power_universal(3, 3);
  CHECK(det[1].coefficient(mono({0, 0, 1})) == 0);
  CHECK(det[1].coefficient(mono({1, 0, 0})) == 1);
  CHECK(det[2].is_zero());
}

TEST_CASE("classes of three concurrent lines") {
  auto g = building("example-a");
  auto ideal = ideal_generators(g);
  const Ring& r = ideal.ring();
  auto cls = characteristic_classes(g);
  auto sigma = r.var(0, 2) + sum_vars(r, 1, 3);

  CHECK(ideal.contains(cls.F - (r.one() - r.var(0, 2))));
  CHECK(ideal.contains(cls.G - (r.one() - r.var(0))));
  CHECK(ideal.contains(cls.H - (r.one() + sigma)));
  CHECK(ideal.contains(cls.K[1][1] - sigma));
  CHECK(cls.K[0][0] == r.one());
  CHECK(cls.K[1][0] == r.one());
  CHECK(cls.P[0] == r.one());
  CHECK(ideal.contains(cls.P[1] - (r.one() - sigma)));
}

TEST_CASE("classes of the degree-4 arrangements in C^3") {
  for (const char* name : {"example-b1", "example-b2"}) {
    CAPTURE(name);
    auto g = building(name);
    auto ideal = ideal_generators(g);
    const Ring& r = ideal.ring();
    auto cls = characteristic_classes(g);
    auto c0 = r.var(0);
    auto c0sq = c0 * c0;
    auto bsum = sum_vars(r, 1, 6);

    CHECK(ideal.contains(cls.F - (c0sq * q(9) - bsum - c0 * q(3) + r.one())));
    CHECK(ideal.contains(cls.G - (c0sq - bsum * q(1, 2) - c0 * q(3, 2) + r.one())));
    CHECK(ideal.contains(cls.H - (c0sq - c0 + r.one())));
    CHECK(cls.P[0] == r.one());
    CHECK(ideal.contains(cls.P[1] - (c0sq * q(-1, 2) + c0 + r.constant(2))));
    CHECK(ideal.contains(cls.P[2] - (c0sq * q(1, 2) + c0 + r.one())));
    CHECK(reduce_top(cls.G, ideal) == 1);
    CHECK(reduce_top(cls.F, ideal) == 9);
  }
}

TEST_CASE("single hyperplane in C^3 recovers the projective plane") {
  auto g = maximal_building(build_lattice(Arrangement(3, {hyperplane({1, 0, 0})})));
  auto ideal = ideal_generators(g);
  const Ring& r = ideal.ring();
  auto cls = characteristic_classes(g);
  CHECK(ideal.contains(cls.F - pow(r.one() - r.var(0), 3)));
  CHECK(reduce_top(cls.F, ideal) == 3);
  CHECK(reduce_top(cls.G, ideal) == 1);
}

TEST_CASE("class identities on random arrangements") {
  std::mt19937 rng(314159);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = trial < 6 ? 3 : 4;
    auto arr = arrspec::testing::random_arrangement(rng, n, n + 1 + trial % 2, 1);
    auto g = maximal_building(build_lattice(arr));
    auto ideal = ideal_generators(g);
    auto cls = characteristic_classes(g);
    auto h_parts = positive_parts(cls.H);
    CAPTURE(trial);

    // Todd genus of a rational variety; Euler number equals the top Chern class.
    CHECK(reduce_top(cls.G, ideal) == 1);

    for (int p = 0; p < n; ++p) {
      CHECK(cls.P[p] == ch_dual_exterior_direct(p, h_parts));
      CHECK(cls.P[p].constant_term() == binomial(n - 1, p));
      CHECK(cls.K[p][0] == ideal.ring().one());
    }
    // Ω^{n−1}(log E) is a line bundle.
    CHECK(cls.P[n - 1] == exp(-cls.K[n - 1][1]));
    // K_{1,i} = H_i.
    for (int i = 1; i < n; ++i) CHECK(cls.K[1][i] == h_parts[i - 1]);
  }
}
