#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "arrspec/arrangement.hpp"
#include "arrspec/chern.hpp"
#include "arrspec/ideal.hpp"
#include "arrspec/nested.hpp"

namespace arrspec {

/// Eigenvalue data for the k-th monodromy eigenvalue: β_V = {−k·m_V/d} per hyperplane.
struct EigenData {
  long k = 0;
  std::vector<Rational> beta;
  Integer sum_beta;
};

EigenData beta(long k, const Arrangement& arrangement);

/// s_V(β): sum of β_W over hyperplanes W ⊇ V (all hyperplanes for the formal zero element).
Rational s_value(std::size_t v, const EigenData& eigen, const BuildingSet& g);

/// a_{k,V} = r(V) − ⌊s_V⌋ − 1 + δ_{V,0}.
Integer a_coeff(std::size_t v, const EigenData& eigen, const BuildingSet& g);

/// R_α = P_{n−p−1} · exp(Σ_V a_{k,V} c_V), for α = k/d + p.
Polynomial r_alpha(const EigenData& eigen, int p, const CharClassBundle& classes, const BuildingSet& g);

struct SpectralPoint {
  Rational alpha;
  long k = 0;
  int p = 0;
  Integer mult;

  bool operator==(const SpectralPoint&) const = default;
};

struct SpectrumResult {
  int n = 0;
  long degree = 0;
  std::vector<SpectralPoint> points;  ///< nonzero multiplicities, strictly increasing α
  std::vector<std::string> warnings;
};

struct SpectrumOptions {
  unsigned jobs = 1;
  /// Expert: explicit G' as closure sets; std::nullopt selects the maximal building set.
  std::optional<std::vector<Closure>> building_set;
};

/// Everything the multiplicity formula needs, computed once and then read-only.
class SpectrumEngine {
 public:
  explicit SpectrumEngine(Arrangement arrangement, const SpectrumOptions& options = {});

  const Arrangement& arrangement() const { return arrangement_; }
  const IntersectionLattice& lattice() const { return lattice_; }
  const BuildingSet& building() const { return building_; }
  const IdealPresentation& ideal() const { return ideal_; }
  const CharClassBundle& classes() const { return classes_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  /// n_α for α = k/d + p; (k, p) must satisfy 1 ≤ k ≤ d, 0 ≤ p ≤ n−1, α < n.
  Integer multiplicity(long k, int p) const;

  /// All (k, p) cells, evaluated on `jobs` threads; output is independent of `jobs`.
  SpectrumResult run(unsigned jobs = 1) const;

 private:
  Arrangement arrangement_;
  IntersectionLattice lattice_;
  BuildingSet building_;
  IdealPresentation ideal_;
  CharClassBundle classes_;
  std::vector<std::string> warnings_;
};

Integer multiplicity(long k, int p, const SpectrumEngine& engine);

SpectrumResult spectrum(const Arrangement& arrangement, const SpectrumOptions& options = {});

}  // namespace arrspec
