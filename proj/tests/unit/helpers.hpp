#pragma once

#include <random>
#include <string>

#include "arrspec/document.hpp"
#include "arrspec/errors.hpp"
#include "arrspec/spectrum.hpp"

namespace arrspec::testing {

inline Arrangement fixture_arrangement(const std::string& name) { return to_arrangement(*fixture(name)); }

inline Hyperplane hyperplane(std::initializer_list<long> coeffs, long mult = 1) {
  Hyperplane h;
  for (long c : coeffs) h.normal.emplace_back(c);
  h.mult = mult;
  return h;
}

inline Rational q(long num, long den = 1) {
  Rational r{Integer(num), Integer(den)};
  r.canonicalize();
  return r;
}

/// Random essential arrangement in C^n with small integer normals.
inline Arrangement random_arrangement(std::mt19937& rng, int n, int count, long max_mult) {
  std::uniform_int_distribution<long> coeff(-2, 2);
  std::uniform_int_distribution<long> mult(1, max_mult);
  for (;;) {
    std::vector<Hyperplane> hs;
    for (int i = 0; i < count; ++i) {
      Hyperplane h;
      for (int c = 0; c < n; ++c) h.normal.emplace_back(coeff(rng));
      h.mult = mult(rng);
      hs.push_back(std::move(h));
    }
    try {
      Arrangement arr(n, std::move(hs));
      if (arr.is_essential()) return arr;
    } catch (const ValidationError&) {
    }
  }
}

}  // namespace arrspec::testing
