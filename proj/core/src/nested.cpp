#include "arrspec/nested.hpp"

#include <algorithm>
#include <string>

#include "arrspec/errors.hpp"

namespace arrspec {

BuildingSet::BuildingSet(IntersectionLattice lattice, std::vector<std::size_t> flat_indices)
    : lattice_(std::move(lattice)) {
  const int n = lattice_.ambient_dim();
  const bool essential = lattice_.is_essential();
  std::sort(flat_indices.begin(), flat_indices.end());
  flat_indices.erase(std::unique(flat_indices.begin(), flat_indices.end()), flat_indices.end());

  Closure everything(lattice_.num_hyperplanes());
  for (std::size_t i = 0; i < everything.size(); ++i) everything[i] = i;
  BuildingElement zero{everything, 0, n, true, std::nullopt};
  if (essential) zero.flat = lattice_.center();

  std::vector<BuildingElement> flats;
  for (auto f : flat_indices) {
    if (f >= lattice_.size()) throw ValidationError("building set names a flat outside the lattice");
    if (f == 0) throw ValidationError("the ambient space cannot belong to a building set");
    if (essential && f == lattice_.center()) continue;
    const auto& flat = lattice_[f];
    flats.push_back(BuildingElement{flat.closure, flat.dim, flat.codim, false, f});
  }
  for (std::size_t i = 0; i < lattice_.num_hyperplanes(); ++i) {
    auto h = lattice_.hyperplane_flat(i);
    if (!std::binary_search(flat_indices.begin(), flat_indices.end(), h))
      throw ValidationError("building set must contain every hyperplane; hyperplane " + std::to_string(i) +
                            " is missing");
  }
  std::sort(flats.begin(), flats.end(), [](const BuildingElement& a, const BuildingElement& b) {
    return a.dim != b.dim ? a.dim < b.dim : a.closure < b.closure;
  });

  elements_.push_back(std::move(zero));
  for (auto& e : flats) elements_.push_back(std::move(e));

  flat_to_element_.assign(lattice_.size(), std::nullopt);
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i].flat) flat_to_element_[*elements_[i].flat] = i;

  std::size_t expected = lattice_.size() - 1 - (essential ? 1 : 0);
  maximal_ = elements_.size() - 1 == expected;
}

bool BuildingSet::strictly_below(std::size_t w, std::size_t v) const {
  if (w == v) return false;
  if (elements_[w].formal_zero) return true;
  if (elements_[v].formal_zero) return false;
  return lattice_.subspace_of(*elements_[w].flat, *elements_[v].flat);
}

std::optional<std::size_t> BuildingSet::index_of_flat(std::size_t flat) const {
  if (flat >= flat_to_element_.size()) return std::nullopt;
  return flat_to_element_[flat];
}

std::size_t BuildingSet::meet_flat(std::span<const std::size_t> elems) const {
  if (elems.empty()) throw InternalError("meet of an empty family");
  std::size_t acc = 0;
  for (auto e : elems) {
    if (e >= elements_.size() || !elements_[e].flat) throw InternalError("meet over a non-flat element");
    acc = lattice_.meet(acc, *elements_[e].flat);
  }
  return acc;
}

BuildingSet maximal_building(const IntersectionLattice& lattice) {
  std::vector<std::size_t> all;
  for (std::size_t i = 1; i < lattice.size(); ++i) all.push_back(i);
  return BuildingSet(lattice, std::move(all));
}

BuildingSet building_from_closures(const IntersectionLattice& lattice, const std::vector<Closure>& closures) {
  std::vector<std::size_t> indices;
  for (auto c : closures) {
    std::sort(c.begin(), c.end());
    auto idx = lattice.find(c);
    if (!idx) {
      std::string s;
      for (auto i : c) s += (s.empty() ? "" : ",") + std::to_string(i);
      throw ValidationError("building set entry {" + s + "} is not a flat of the arrangement");
    }
    indices.push_back(*idx);
  }
  return BuildingSet(lattice, std::move(indices));
}

namespace {

void check_elements(const BuildingSet& g, std::span<const std::size_t> subset) {
  for (auto v : subset)
    if (v >= g.size()) throw ArgumentError("element " + std::to_string(v) + " is not in the building set");
}

bool antichain(const BuildingSet& g, const std::vector<std::size_t>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.below_or_equal(s[i], s[j]) || g.below_or_equal(s[j], s[i])) return false;
  return true;
}

}  // namespace

bool is_nested(const BuildingSet& g, std::span<const std::size_t> subset) {
  check_elements(g, subset);
  std::vector<std::size_t> flats;
  for (auto v : subset)
    if (!g[v].formal_zero) flats.push_back(v);
  std::sort(flats.begin(), flats.end());
  flats.erase(std::unique(flats.begin(), flats.end()), flats.end());
  if (flats.size() < 2) return true;
  if (flats.size() > 20) throw ArgumentError("subset too large for nestedness test");

  const std::size_t m = flats.size();
  std::vector<std::size_t> pick;
  for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
    if (__builtin_popcountll(mask) < 2) continue;
    pick.clear();
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) pick.push_back(flats[i]);
    if (!antichain(g, pick)) continue;
    if (g.index_of_flat(g.meet_flat(pick))) return false;
  }
  return true;
}

namespace {

void extend_nested(const BuildingSet& g, std::size_t max_size, std::vector<std::size_t>& current,
                   std::vector<std::vector<std::size_t>>& out) {
  out.push_back(current);
  if (current.size() == max_size) return;
  std::size_t start = current.empty() ? 1 : current.back() + 1;
  for (std::size_t v = start; v < g.size(); ++v) {
    current.push_back(v);
    if (is_nested(g, current)) extend_nested(g, max_size, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> enumerate_nested(const BuildingSet& g, std::size_t max_size) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  extend_nested(g, max_size, current, out);
  return out;
}

int d_value(const BuildingSet& g, std::span<const std::size_t> nested, std::size_t w) {
  check_elements(g, nested);
  if (w >= g.size()) throw ArgumentError("element " + std::to_string(w) + " is not in the building set");
  for (auto v : nested)
    if (!g.strictly_below(w, v))
      throw ArgumentError("d_value requires W to be strictly contained in every element of H");
  int top = nested.empty() ? g.ambient_dim() : g.lattice()[g.meet_flat(nested)].dim;
  int diff = top - g[w].dim;
  if (diff < 0) throw InternalError("negative d value");
  return diff;
}

}  // namespace arrspec
