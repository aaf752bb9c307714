#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "arrspec/rational.hpp"

namespace arrspec {

struct Hyperplane {
  std::vector<Rational> normal;
  long mult = 1;

  bool operator==(const Hyperplane&) const = default;
};

/// Central arrangement in C^n, each hyperplane carrying a positive multiplicity.
///
/// The constructor rejects malformed input: n < 2, empty lists, normals of the wrong
/// length, zero normals, non-positive multiplicities, and pairs of proportional
/// normals (which must be merged into one hyperplane with summed multiplicity).
class Arrangement {
 public:
  Arrangement(int ambient_dim, std::vector<Hyperplane> hyperplanes);

  int ambient_dim() const { return ambient_dim_; }
  std::size_t size() const { return hyperplanes_.size(); }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  const Hyperplane& operator[](std::size_t i) const { return hyperplanes_[i]; }

  /// Total degree d = sum of multiplicities.
  long degree() const;

  /// Rank of the span of all normals.
  int rank() const;
  bool is_essential() const { return rank() == ambient_dim_; }

  /// The arrangement with hyperplane i of the result equal to hyperplane order[i] of this one.
  Arrangement permuted(std::span<const std::size_t> order) const;

 private:
  int ambient_dim_;
  std::vector<Hyperplane> hyperplanes_;
};

/// Sorted indices of the hyperplanes containing a subspace.
using Closure = std::vector<std::size_t>;

struct Flat {
  Closure closure;
  int dim = 0;
  int codim = 0;
};

/// Intersection lattice L(A), flats identified by their closure sets.
///
/// Flats are ordered by ascending codimension, ties broken lexicographically on
/// closures; index 0 is always the ambient space.
class IntersectionLattice {
 public:
  IntersectionLattice(int ambient_dim, std::size_t num_hyperplanes, std::vector<Flat> flats);

  int ambient_dim() const { return ambient_dim_; }
  std::size_t num_hyperplanes() const { return num_hyperplanes_; }
  std::size_t size() const { return flats_.size(); }
  const std::vector<Flat>& flats() const { return flats_; }
  const Flat& operator[](std::size_t i) const { return flats_[i]; }

  /// Subspace inclusion flat(v) ⊆ flat(w).
  bool subspace_of(std::size_t v, std::size_t w) const { return contained_[v * flats_.size() + w]; }

  /// Möbius value μ(C^n, V).
  const Integer& mobius(std::size_t v) const { return mobius_[v]; }

  std::optional<std::size_t> find(const Closure& closure) const;

  /// Index of the intersection of two flats.
  std::size_t meet(std::size_t v, std::size_t w) const;

  /// The smallest flat (common intersection of all hyperplanes).
  std::size_t center() const { return flats_.size() - 1; }
  bool is_essential() const { return flats_.back().dim == 0; }

  /// Index of the flat of hyperplane i.
  std::size_t hyperplane_flat(std::size_t i) const;

 private:
  int ambient_dim_;
  std::size_t num_hyperplanes_;
  std::vector<Flat> flats_;
  std::vector<bool> contained_;
  std::vector<Integer> mobius_;
};

IntersectionLattice build_lattice(const Arrangement& arrangement);

/// Euler characteristic of the complement of the projectivized arrangement in P^{n-1}.
Integer euler_projective_complement(const IntersectionLattice& lattice);

/// Coefficients of the Poincaré polynomial π(t) = Σ μ(V)(−t)^{r(V)}, lowest degree first.
std::vector<Integer> poincare_polynomial(const IntersectionLattice& lattice);

}  // namespace arrspec
