#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "arrspec/ideal.hpp"
#include "arrspec/nested.hpp"
#include "arrspec/polynomial.hpp"

namespace arrspec {

/// Taylor coefficients q_0..q_deg of Q(x) = x / (1 − e^{−x}).
std::vector<Rational> q_series(int deg);

/// F = ∏_{V∈G} F_V, the total Chern class of the wonderful model.
Polynomial chern_total_Y(const BuildingSet& g);

/// G = ∏_{V∈G} G_V, the Todd class of the wonderful model.
Polynomial todd_Y(const BuildingSet& g);

/// H = (Σ (−1)^i F_i) · ∏_{V≠0} 1/(1 − c_V), the total Chern class of Ω¹(log E).
Polynomial chern_omega_log(const Polynomial& chern_total, const BuildingSet& g);

// Symmetric-function helpers over m formal Chern roots x_1..x_m.
// An "elementary polynomial" is a polynomial in m variables where variable i stands for e_{i+1}.

/// Rewrites a symmetric polynomial in the roots in the elementary basis by leading-term elimination.
/// Throws InternalError if the input is not symmetric.
Polynomial to_elementary(const Polynomial& symmetric);

/// Evaluates an elementary polynomial at e_{i+1} = values[i].
Polynomial substitute_elementary(const Polynomial& elementary, std::span<const Polynomial> values);

/// Universal K'_{p,i}(e_1..e_m), i = 0..m: Chern classes of Λ^p of a rank-m bundle.
std::vector<Polynomial> exterior_power_universal(int rank, int p);

/// K_{p,0..n−1}: Chern classes of Ω^p(log E), from H_1..H_{n−1}.
std::vector<Polynomial> exterior_chern(int p, std::span<const Polynomial> h_parts);

/// P_p: Chern character of the dual of Ω^p(log E), from the row K_{p,0..n−1} via Newton's identities.
Polynomial ch_dual_exterior(int p, std::span<const Polynomial> k_row);

/// Same class by the λ-operation route: Σ_{|S|=p} exp(−Σ_{i∈S} x_i) rewritten in e_j ← H_j.
Polynomial ch_dual_exterior_direct(int p, std::span<const Polynomial> h_parts);

/// Homogeneous parts H_1..H_{n−1}.
std::vector<Polynomial> positive_parts(const Polynomial& h);

struct CharClassBundle {
  Polynomial F;
  Polynomial G;
  Polynomial H;
  std::vector<std::vector<Polynomial>> K;  ///< K[p][i], 0 ≤ p, i ≤ n−1
  std::vector<Polynomial> P;               ///< P[p], 0 ≤ p ≤ n−1
};

CharClassBundle characteristic_classes(const BuildingSet& g);

}  // namespace arrspec
