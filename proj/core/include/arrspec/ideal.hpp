#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "arrspec/nested.hpp"
#include "arrspec/polynomial.hpp"

namespace arrspec {

/// Free truncated ring Q[c_V : V ∈ G] / (degree ≥ n) in which all characteristic classes live.
/// Variable i is c_V for building-set element i; c_0 is the formal zero element.
struct Ring {
  std::size_t nvars = 0;
  int top_degree = 0;  ///< n − 1

  Polynomial zero() const { return Polynomial(nvars, top_degree); }
  Polynomial one() const { return Polynomial::constant(nvars, top_degree, 1); }
  Polynomial constant(const Rational& c) const { return Polynomial::constant(nvars, top_degree, c); }
  Polynomial var(std::size_t i, const Rational& coeff = 1) const {
    return Polynomial::variable(nvars, top_degree, i, coeff);
  }
};

Ring ring_of(const BuildingSet& g);

struct IdealGenerator {
  enum class Kind { NonNested, Nested };
  Kind kind;
  std::vector<std::size_t> subset;  ///< T (non-nested antichain) or H (nested set)
  std::optional<std::size_t> w;     ///< W, nested kind only
  int d = 0;                        ///< d_{H,W}, nested kind only
  Polynomial poly;                  ///< homogeneous, truncated at degree n
};

/// Homogeneous ideal I of the cohomology presentation, with one exact echelon basis per degree.
///
/// Generators:
///  - ∏_{V∈T} c_V for every pairwise-incomparable T ⊆ G − {0}, |T| ≥ 2, whose
///    intersection lies in G;
///  - ∏_{V∈H} c_V · (Σ_{W'⊆W} c_{W'})^{d_{H,W}} for every nested H (∅ included) and
///    every W ∈ G strictly below all of H.
/// Only generators of degree ≤ n are listed; degrees ≤ n − 1 enter the spans.
class IdealPresentation {
 public:
  explicit IdealPresentation(const BuildingSet& g);

  const Ring& ring() const { return ring_; }
  const std::vector<IdealGenerator>& generators() const { return generators_; }

  /// Dimension of the quotient in each degree 0..n−1.
  const std::vector<std::size_t>& quotient_ranks() const { return ranks_; }
  /// Dimension of I in degree j.
  std::size_t span_dimension(int j) const { return spans_.at(static_cast<std::size_t>(j)).pivots.size(); }

  /// Canonical representative of p modulo I (degree-wise reduction against the echelon bases).
  Polynomial normal_form(const Polynomial& p) const;
  bool contains(const Polynomial& p) const;

  /// The λ with (p)_{n−1} ≡ λ·(−c_0)^{n−1} mod I.
  Rational top_coefficient(const Polynomial& p) const;

 private:
  using Row = std::map<std::size_t, Rational>;
  struct DegreeSpan {
    std::vector<Monomial> monomials;
    std::map<Monomial, std::size_t> column;
    std::map<std::size_t, Row> pivots;  // each row normalized to 1 at its pivot, zero before it
  };

  Row to_row(const DegreeSpan& span, const Polynomial& homogeneous_part) const;
  void reduce(const DegreeSpan& span, Row& row) const;
  void insert(DegreeSpan& span, Row row) const;

  Ring ring_;
  std::vector<IdealGenerator> generators_;
  std::vector<DegreeSpan> spans_;
  std::vector<std::size_t> ranks_;
  Row top_class_;  // normal form of (−c_0)^{n−1}
  std::size_t top_column_ = 0;
};

IdealPresentation ideal_generators(const BuildingSet& g);

/// Evaluates the degree-(n−1) part of p as a number via (−c_0)^{n−1} ↦ 1.
Rational reduce_top(const Polynomial& p, const IdealPresentation& ideal);

bool ideal_membership(const Polynomial& p, const IdealPresentation& ideal);

}  // namespace arrspec
