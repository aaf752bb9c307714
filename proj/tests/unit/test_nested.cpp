#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "arrspec/errors.hpp"
#include "arrspec/nested.hpp"
#include "helpers.hpp"

using namespace arrspec;
using arrspec::testing::fixture_arrangement;
using arrspec::testing::hyperplane;

namespace {

BuildingSet building(const std::string& name) { return maximal_building(build_lattice(fixture_arrangement(name))); }

bool is_chain(const BuildingSet& g, const std::vector<std::size_t>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.below_or_equal(s[i], s[j]) && !g.below_or_equal(s[j], s[i])) return false;
  return true;
}

std::vector<std::vector<std::size_t>> all_subsets(std::size_t universe_lo, std::size_t universe_hi,
                                                  std::size_t max_size) {
  std::vector<std::vector<std::size_t>> out{{}};
  for (std::size_t v = universe_lo; v < universe_hi; ++v) {
    const std::size_t existing = out.size();
    for (std::size_t i = 0; i < existing; ++i)
      if (out[i].size() < max_size) {
        auto s = out[i];
        s.push_back(v);
        out.push_back(std::move(s));
      }
  }
  return out;
}

// Index of the building-set element with the given closure.
std::size_t element(const BuildingSet& g, const Closure& c) {
  for (std::size_t e = 1; e < g.size(); ++e)
    if (g[e].closure == c) return e;
  FAIL("no such element");
  return 0;
}

}  // namespace

TEST_CASE("maximal building set of three concurrent lines") {
  auto g = building("example-a");
  REQUIRE(g.size() == 4);
  CHECK(g[0].formal_zero);
  CHECK(g[0].dim == 0);
  CHECK(g[0].codim == 2);
  CHECK(g[0].flat.has_value());  // essential: the origin is absorbed
  for (std::size_t e = 1; e < 4; ++e) CHECK(g[e].dim == 1);
  CHECK(g[1].closure == Closure{0});
  CHECK(g[3].closure == Closure{2});
  CHECK(g.is_maximal());
}

TEST_CASE("maximal building set of the degree-4 arrangement in C^3") {
  auto g = building("example-b2");
  REQUIRE(g.size() == 11);
  for (std::size_t e = 1; e <= 6; ++e) CHECK(g[e].dim == 1);
  for (std::size_t e = 7; e <= 10; ++e) CHECK(g[e].dim == 2);
  // ascending dimension, ties lexicographic
  CHECK(g[1].closure == Closure{0, 1});
  CHECK(g[6].closure == Closure{2, 3});
  CHECK(g[7].closure == Closure{0});
}

TEST_CASE("single hyperplane building set") {
  auto g = maximal_building(build_lattice(Arrangement(2, {hyperplane({1, 0})})));
  REQUIRE(g.size() == 2);
  CHECK_FALSE(g[0].flat.has_value());
  CHECK(g.strictly_below(0, 1));
  CHECK_FALSE(g.strictly_below(1, 0));
}

TEST_CASE("nestedness examples") {
  auto g = building("example-b2");
  // B_1 = A_1 ∩ A_3 = closure {0,2}; A_1 = {0}, A_2 = {1}.
  const auto b1 = element(g, {0, 2});
  const auto a1 = element(g, {0});
  const auto a2 = element(g, {1});
  CHECK(is_nested(g, std::vector<std::size_t>{b1, a1}));
  CHECK_FALSE(is_nested(g, std::vector<std::size_t>{a1, a2}));
  CHECK(is_nested(g, std::vector<std::size_t>{}));
  CHECK(is_nested(g, std::vector<std::size_t>{0, b1, a1}));  // the formal zero element never obstructs
  CHECK_THROWS_AS(is_nested(g, std::vector<std::size_t>{99}), ArgumentError);
}

TEST_CASE("for maximal building sets nested means chain") {
  for (const char* name : {"example-a", "example-b1", "example-b2", "generic3d:4"}) {
    auto g = building(name);
    CAPTURE(name);
    for (const auto& s : all_subsets(1, g.size(), 4)) CHECK(is_nested(g, s) == is_chain(g, s));
  }
}

TEST_CASE("enumerate_nested agrees with brute force and is downward closed") {
  for (const char* name : {"example-a", "example-b2", "generic3d:5"}) {
    auto g = building(name);
    const std::size_t cap = static_cast<std::size_t>(g.ambient_dim() - 1);
    auto listed = enumerate_nested(g, cap);
    std::set<std::vector<std::size_t>> listed_set(listed.begin(), listed.end());
    CHECK(listed_set.size() == listed.size());

    std::set<std::vector<std::size_t>> brute;
    for (const auto& s : all_subsets(1, g.size(), cap))
      if (is_nested(g, s)) brute.insert(s);
    CHECK(listed_set == brute);

    for (const auto& s : listed)
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        auto t = s;
        t.erase(t.begin() + static_cast<long>(drop));
        CHECK(listed_set.count(t) == 1);
      }
  }

  auto a = enumerate_nested(building("example-a"), 1);
  CHECK(a == std::vector<std::vector<std::size_t>>{{}, {1}, {2}, {3}});

  auto b = enumerate_nested(building("example-b2"), 2);
  CHECK(b.size() == 1 + 10 + 12);
}

TEST_CASE("d_value") {
  auto a = building("example-a");
  CHECK(d_value(a, std::vector<std::size_t>{}, 0) == 2);
  CHECK(d_value(a, std::vector<std::size_t>{}, 1) == 1);
  CHECK(d_value(a, std::vector<std::size_t>{1}, 0) == 1);
  CHECK_THROWS_AS(d_value(a, std::vector<std::size_t>{1}, 2), ArgumentError);
  CHECK_THROWS_AS(d_value(a, std::vector<std::size_t>{1}, 1), ArgumentError);

  auto b = building("example-b2");
  const auto b1 = element(b, {0, 2});
  const auto a1 = element(b, {0});
  CHECK(d_value(b, std::vector<std::size_t>{a1}, b1) == 1);
  CHECK(d_value(b, std::vector<std::size_t>{b1, a1}, 0) == 1);
}

TEST_CASE("explicit building sets") {
  auto lat = build_lattice(fixture_arrangement("example-b2"));
  // Only the hyperplanes: every pair of planes becomes nested unless they meet in G.
  auto g = building_from_closures(lat, {{0}, {1}, {2}, {3}});
  CHECK(g.size() == 5);
  CHECK_FALSE(g.is_maximal());
  CHECK(is_nested(g, std::vector<std::size_t>{1, 2}));
  CHECK_THROWS_AS(building_from_closures(lat, {{0}, {1}, {2}}), ValidationError);
  CHECK_THROWS_AS(building_from_closures(lat, {{0}, {1}, {2}, {3}, {0, 1, 2}}), ValidationError);

  auto full = building_from_closures(lat, {{0}, {1}, {2}, {3}, {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(full.is_maximal());
}
