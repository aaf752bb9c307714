#include "arrspec/ideal.hpp"

#include <algorithm>
#include <string>

#include "arrspec/errors.hpp"

namespace arrspec {

Ring ring_of(const BuildingSet& g) { return Ring{g.size(), g.ambient_dim() - 1}; }

namespace {

bool comparable(const BuildingSet& g, std::size_t a, std::size_t b) {
  return g.below_or_equal(a, b) || g.below_or_equal(b, a);
}

// Antichains T ⊆ G − {0}, 2 ≤ |T| ≤ max_size, whose intersection lies in G.
void non_nested_antichains(const BuildingSet& g, std::size_t max_size, std::vector<std::size_t>& cur,
                           std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() >= 2 && g.index_of_flat(g.meet_flat(cur))) out.push_back(cur);
  if (cur.size() == max_size) return;
  std::size_t start = cur.empty() ? 1 : cur.back() + 1;
  for (std::size_t v = start; v < g.size(); ++v) {
    if (std::any_of(cur.begin(), cur.end(), [&](std::size_t u) { return comparable(g, u, v); })) continue;
    cur.push_back(v);
    non_nested_antichains(g, max_size, cur, out);
    cur.pop_back();
  }
}

}  // namespace

IdealPresentation::IdealPresentation(const BuildingSet& g) : ring_(ring_of(g)) {
  const int n = g.ambient_dim();
  const std::size_t nvars = g.size();

  std::vector<std::vector<std::size_t>> antichains;
  std::vector<std::size_t> scratch;
  non_nested_antichains(g, static_cast<std::size_t>(n), scratch, antichains);
  for (auto& t : antichains) {
    Monomial m(nvars);
    for (auto v : t) m = m * Monomial::variable(nvars, v);
    generators_.push_back({IdealGenerator::Kind::NonNested, t, std::nullopt, 0, Polynomial::monomial(n, m)});
  }

  for (const auto& h : enumerate_nested(g, static_cast<std::size_t>(n))) {
    for (std::size_t w = 0; w < nvars; ++w) {
      if (!std::all_of(h.begin(), h.end(), [&](std::size_t v) { return g.strictly_below(w, v); })) continue;
      int d = d_value(g, h, w);
      if (static_cast<int>(h.size()) + d > n) continue;
      Polynomial inner(nvars, n);
      for (std::size_t w2 = 0; w2 < nvars; ++w2)
        if (g.below_or_equal(w2, w)) inner.add_term(Monomial::variable(nvars, w2), 1);
      Polynomial poly = pow(inner, d);
      Monomial prefix(nvars);
      for (auto v : h) prefix = prefix * Monomial::variable(nvars, v);
      poly = Polynomial::monomial(n, prefix) * poly;
      generators_.push_back({IdealGenerator::Kind::Nested, h, w, d, std::move(poly)});
    }
  }

  const int top = ring_.top_degree;
  spans_.resize(static_cast<std::size_t>(top) + 1);
  for (int j = 0; j <= top; ++j) {
    auto& span = spans_[static_cast<std::size_t>(j)];
    span.monomials = monomials_of_degree(nvars, j);
    for (std::size_t c = 0; c < span.monomials.size(); ++c) span.column.emplace(span.monomials[c], c);
  }
  std::vector<std::vector<Monomial>> multipliers;
  for (int j = 0; j <= top; ++j) multipliers.push_back(monomials_of_degree(nvars, j));
  for (const auto& gen : generators_) {
    if (!gen.poly.is_homogeneous()) throw InternalError("ideal generator is not homogeneous");
    const int e = gen.poly.degree();
    if (e < 0 || e > top) continue;
    for (int j = e; j <= top; ++j) {
      auto& span = spans_[static_cast<std::size_t>(j)];
      for (const auto& m : multipliers[static_cast<std::size_t>(j - e)]) {
        Polynomial shifted = Polynomial::monomial(top, m) * gen.poly.truncated(top);
        insert(span, to_row(span, shifted));
      }
    }
  }

  for (const auto& span : spans_) ranks_.push_back(span.monomials.size() - span.pivots.size());
  if (ranks_.back() != 1)
    throw StructuralError("top cohomology not rank 1 (quotient rank " + std::to_string(ranks_.back()) +
                          " in degree " + std::to_string(top) + ")");

  const auto& top_span = spans_.back();
  Polynomial minus_c0 = pow(ring_.var(0, -1), top);
  top_class_ = to_row(top_span, minus_c0);
  reduce(top_span, top_class_);
  if (top_class_.empty()) throw StructuralError("(−c_0)^{n−1} lies in the ideal; top degree cannot be normalized");
  top_column_ = top_class_.begin()->first;
}

IdealPresentation::Row IdealPresentation::to_row(const DegreeSpan& span, const Polynomial& homogeneous_part) const {
  Row row;
  for (const auto& [m, c] : homogeneous_part.terms()) row.emplace(span.column.at(m), c);
  return row;
}

void IdealPresentation::reduce(const DegreeSpan& span, Row& row) const {
  auto it = row.begin();
  while (it != row.end()) {
    auto piv = span.pivots.find(it->first);
    if (piv == span.pivots.end()) {
      ++it;
      continue;
    }
    const std::size_t col = it->first;
    const Rational factor = it->second;
    for (const auto& [c, v] : piv->second) {
      auto [slot, inserted] = row.try_emplace(c, 0);
      slot->second -= factor * v;
      if (slot->second == 0) row.erase(slot);
    }
    it = row.upper_bound(col);
  }
}

void IdealPresentation::insert(DegreeSpan& span, Row row) const {
  reduce(span, row);
  if (row.empty()) return;
  const std::size_t pivot = row.begin()->first;
  const Rational lead = row.begin()->second;
  for (auto& [c, v] : row) v /= lead;
  span.pivots.emplace(pivot, std::move(row));
}

Polynomial IdealPresentation::normal_form(const Polynomial& p) const {
  Polynomial out(ring_.nvars, ring_.top_degree);
  for (int j = 0; j <= std::min(p.degree(), ring_.top_degree); ++j) {
    const auto& span = spans_[static_cast<std::size_t>(j)];
    Row row = to_row(span, p.homogeneous(j));
    reduce(span, row);
    for (const auto& [c, v] : row) out.add_term(span.monomials[c], v);
  }
  return out;
}

bool IdealPresentation::contains(const Polynomial& p) const { return normal_form(p).is_zero(); }

Rational IdealPresentation::top_coefficient(const Polynomial& p) const {
  const auto& span = spans_.back();
  Row row = to_row(span, p.homogeneous(ring_.top_degree));
  reduce(span, row);
  if (row.empty()) return 0;
  if (row.size() != 1 || row.begin()->first != top_column_)
    throw InternalError("top-degree normal form is not a multiple of (−c_0)^{n−1}");
  return row.begin()->second / top_class_.at(top_column_);
}

IdealPresentation ideal_generators(const BuildingSet& g) { return IdealPresentation(g); }

Rational reduce_top(const Polynomial& p, const IdealPresentation& ideal) { return ideal.top_coefficient(p); }

bool ideal_membership(const Polynomial& p, const IdealPresentation& ideal) { return ideal.contains(p); }

}  // namespace arrspec
