#pragma once

#include <vector>

#include "arrspec/document.hpp"
#include "arrspec/spectrum.hpp"

namespace arrspec {

struct VerificationReport {
  std::vector<CheckRecord> checks;

  bool all_passed() const;
};

/// Per-eigenvalue Euler identity: Σ_p n_{k/d+p} for each k = 1..d−1, in order.
std::vector<Integer> eigenvalue_sums(const SpectrumResult& result);

/// The classical spectrum of d reduced concurrent lines in C²: {(i+j)/d : 1 ≤ i, j ≤ d−1}.
std::vector<SpectralPoint> reduced_lines_spectrum(long d);

/// Runs every independent consistency check against an engine and its result:
/// ring ranks (top rank one, Poincaré duality), spectral range, per-eigenvalue Euler
/// identity against the Möbius-function Euler characteristic, Chern-character cross
/// route, line-bundle exponential, rank totals, permutation invariance and, for
/// reduced arrangements in C², the classical line-arrangement spectrum and its symmetry.
VerificationReport verify(const SpectrumEngine& engine, const SpectrumResult& result, unsigned jobs = 1);

}  // namespace arrspec
