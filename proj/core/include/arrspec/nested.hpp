#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "arrspec/arrangement.hpp"

namespace arrspec {

/// One element of a building set G. Element 0 of every building set is the formal
/// zero element: dimension 0, codimension n, strictly below every flat.
struct BuildingElement {
  Closure closure;                  ///< all hyperplanes for the formal zero element
  int dim = 0;
  int codim = 0;
  bool formal_zero = false;
  std::optional<std::size_t> flat;  ///< lattice index; the formal zero maps to the origin when essential
};

/// Indexed building set G = {0} ∪ G'.
///
/// Order: the formal zero element first, then flats by ascending dimension, ties broken
/// lexicographically on closure sets. The ambient space never appears.
class BuildingSet {
 public:
  /// Takes lattice indices of the flats of G'. Every hyperplane flat must be present.
  /// The origin of an essential arrangement is absorbed into the formal zero element.
  BuildingSet(IntersectionLattice lattice, std::vector<std::size_t> flat_indices);

  std::size_t size() const { return elements_.size(); }
  const BuildingElement& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<BuildingElement>& elements() const { return elements_; }
  const IntersectionLattice& lattice() const { return lattice_; }
  int ambient_dim() const { return lattice_.ambient_dim(); }

  /// W ⊊ V.
  bool strictly_below(std::size_t w, std::size_t v) const;
  /// W ⊆ V.
  bool below_or_equal(std::size_t w, std::size_t v) const { return w == v || strictly_below(w, v); }

  /// Building-set index of a lattice flat, if it belongs to G (the origin maps to 0 when essential).
  std::optional<std::size_t> index_of_flat(std::size_t flat) const;

  /// Lattice index of the subspace intersection of the given elements (all ≥ 1, nonempty).
  std::size_t meet_flat(std::span<const std::size_t> elements) const;

  bool is_maximal() const { return maximal_; }

 private:
  IntersectionLattice lattice_;
  std::vector<BuildingElement> elements_;
  std::vector<std::optional<std::size_t>> flat_to_element_;
  bool maximal_ = false;
};

/// G = {0} ∪ (L(A) − {C^n}).
BuildingSet maximal_building(const IntersectionLattice& lattice);

/// Expert mode: G' given by closure sets, each of which must name a flat of the lattice.
BuildingSet building_from_closures(const IntersectionLattice& lattice, const std::vector<Closure>& closures);

/// A subset H ⊆ G − {0} is nested iff no pairwise-incomparable subset of at least two
/// elements has its intersection in G. Occurrences of the formal zero element are ignored.
bool is_nested(const BuildingSet& g, std::span<const std::size_t> subset);

/// All nested subsets of G − {0} with at most max_size elements, including ∅.
/// Each subset is sorted ascending; the list is in depth-first order.
std::vector<std::vector<std::size_t>> enumerate_nested(const BuildingSet& g, std::size_t max_size);

/// d_{H,W} = δ(∩_{V∈H} V) − δ(W), with the empty intersection of dimension n.
/// Requires W ⊊ V for every V ∈ H.
int d_value(const BuildingSet& g, std::span<const std::size_t> nested, std::size_t w);

}  // namespace arrspec
