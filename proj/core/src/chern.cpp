#include "arrspec/chern.hpp"

#include <algorithm>

#include "arrspec/errors.hpp"

namespace arrspec {

std::vector<Rational> q_series(int deg) {
  if (deg < 0) throw ArgumentError("q_series: negative degree");
  // (1 − e^{−x}) / x = Σ_k (−1)^k x^k / (k+1)!, then invert the unit series.
  std::vector<Rational> denom(static_cast<std::size_t>(deg) + 1);
  for (int k = 0; k <= deg; ++k) denom[k] = Rational(k % 2 == 0 ? 1 : -1) / factorial(k + 1);
  std::vector<Rational> q(static_cast<std::size_t>(deg) + 1, Rational(0));
  q[0] = 1;
  for (int k = 1; k <= deg; ++k) {
    Rational acc = 0;
    for (int i = 1; i <= k; ++i) acc += denom[i] * q[k - i];
    q[k] = -acc;
  }
  return q;
}

namespace {

struct FlatSums {
  Polynomial strict;     // Σ_{W ⊊ V} c_W
  Polynomial inclusive;  // Σ_{W ⊆ V} c_W
};

FlatSums sums_below(const BuildingSet& g, const Ring& ring, std::size_t v) {
  FlatSums s{ring.zero(), ring.zero()};
  for (std::size_t w = 0; w < g.size(); ++w)
    if (g.strictly_below(w, v)) s.strict += ring.var(w);
  s.inclusive = s.strict + ring.var(v);
  return s;
}

}  // namespace

Polynomial chern_total_Y(const BuildingSet& g) {
  const Ring ring = ring_of(g);
  const int n = g.ambient_dim();
  Polynomial f = pow(ring.one() - ring.var(0), n);
  for (std::size_t v = 1; v < g.size(); ++v) {
    const int r = g[v].codim;
    auto s = sums_below(g, ring, v);
    f = f * pow(ring.one() - s.strict, -r) * (ring.one() + ring.var(v)) * pow(ring.one() - s.inclusive, r);
  }
  return f;
}

Polynomial todd_Y(const BuildingSet& g) {
  const Ring ring = ring_of(g);
  const int n = g.ambient_dim();
  const auto q = q_series(ring.top_degree);
  Polynomial t = pow(compose(q, ring.var(0, -1)), n);
  for (std::size_t v = 1; v < g.size(); ++v) {
    const int r = g[v].codim;
    auto s = sums_below(g, ring, v);
    t = t * pow(compose(q, -s.strict), -r) * compose(q, ring.var(v)) * pow(compose(q, -s.inclusive), r);
  }
  return t;
}

Polynomial chern_omega_log(const Polynomial& chern_total, const BuildingSet& g) {
  const Ring ring = ring_of(g);
  Polynomial h = chern_total.alternating();
  for (std::size_t v = 1; v < g.size(); ++v) h = h * geom_inv(ring.one() - ring.var(v));
  return h;
}

namespace {

std::vector<Polynomial> elementary_in_roots(std::size_t m) {
  std::vector<Polynomial> e;
  Polynomial prod = Polynomial::constant(m, static_cast<int>(m), 1);
  for (std::size_t i = 0; i < m; ++i)
    prod = prod * (Polynomial::constant(m, static_cast<int>(m), 1) + Polynomial::variable(m, static_cast<int>(m), i));
  for (std::size_t j = 1; j <= m; ++j) e.push_back(prod.homogeneous(static_cast<int>(j)));
  return e;
}

void subsets_of_size(std::size_t m, std::size_t p, std::size_t start, std::vector<std::size_t>& cur,
                     std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == p) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < m; ++i) {
    cur.push_back(i);
    subsets_of_size(m, p, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t m, std::size_t p) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  subsets_of_size(m, p, 0, cur, out);
  return out;
}

Polynomial root_sum(std::size_t m, const std::vector<std::size_t>& subset) {
  Polynomial s(m, static_cast<int>(m));
  for (auto i : subset) s += Polynomial::variable(m, static_cast<int>(m), i);
  return s;
}

}  // namespace

Polynomial to_elementary(const Polynomial& symmetric) {
  const std::size_t m = symmetric.nvars();
  const auto e = elementary_in_roots(m);
  Polynomial rest = symmetric.truncated(static_cast<int>(m));
  Polynomial out(m, static_cast<int>(m));
  while (!rest.is_zero()) {
    auto lead = std::max_element(rest.terms().begin(), rest.terms().end(), [](const auto& a, const auto& b) {
      return a.first.exponents() < b.first.exponents();
    });
    const auto& a = lead->first.exponents();
    const Rational c = lead->second;
    std::vector<std::uint16_t> b(m, 0);
    Polynomial product = Polynomial::constant(m, static_cast<int>(m), 1);
    for (std::size_t i = 0; i < m; ++i) {
      int next = i + 1 < m ? a[i + 1] : 0;
      if (a[i] < next) throw InternalError("to_elementary: input is not symmetric");
      b[i] = static_cast<std::uint16_t>(a[i] - next);
      if (b[i] > 0) product = product * pow(e[i], b[i]);
    }
    rest -= product * c;
    out.add_term(Monomial(std::move(b)), c);
  }
  return out;
}

Polynomial substitute_elementary(const Polynomial& elementary, std::span<const Polynomial> values) {
  if (values.empty()) throw ArgumentError("substitute_elementary: no values");
  if (elementary.nvars() != values.size()) throw ArgumentError("substitute_elementary: arity mismatch");
  Polynomial out(values[0].nvars(), values[0].max_degree());
  for (const auto& [mono, c] : elementary.terms()) {
    Polynomial term = Polynomial::constant(out.nvars(), out.max_degree(), c);
    for (std::size_t i = 0; i < mono.nvars(); ++i)
      if (mono[i] > 0) term = term * pow(values[i], mono[i]);
    out += term;
  }
  return out;
}

std::vector<Polynomial> exterior_power_universal(int rank, int p) {
  if (rank < 1 || p < 0 || p > rank) throw ArgumentError("exterior_power_universal: need 0 ≤ p ≤ rank, rank ≥ 1");
  const auto m = static_cast<std::size_t>(rank);
  Polynomial prod = Polynomial::constant(m, rank, 1);
  for (const auto& s : subsets_of_size(m, static_cast<std::size_t>(p)))
    prod = prod * (Polynomial::constant(m, rank, 1) + root_sum(m, s));
  std::vector<Polynomial> out;
  for (int i = 0; i <= rank; ++i) out.push_back(to_elementary(prod.homogeneous(i)));
  return out;
}

std::vector<Polynomial> exterior_chern(int p, std::span<const Polynomial> h_parts) {
  const int rank = static_cast<int>(h_parts.size());
  if (p < 0 || p > rank) throw ArgumentError("exterior_chern: p out of range");
  auto universal = exterior_power_universal(rank, p);
  std::vector<Polynomial> row;
  for (int i = 0; i < rank + 1; ++i) row.push_back(substitute_elementary(universal[i], h_parts));
  return row;
}

Polynomial ch_dual_exterior(int p, std::span<const Polynomial> k_row) {
  if (k_row.empty()) throw ArgumentError("ch_dual_exterior: empty row");
  const int m = static_cast<int>(k_row.size()) - 1;
  if (p < 0 || p > m) throw ArgumentError("ch_dual_exterior: p out of range");
  const Polynomial& proto = k_row[0];
  Polynomial result = Polynomial::constant(proto.nvars(), proto.max_degree(), binomial(m, p));
  if (p == 0) return result;

  // Chern classes of the dual: c_i ↦ (−1)^i c_i.
  std::vector<Polynomial> e{Polynomial(proto.nvars(), proto.max_degree())};
  for (int i = 1; i <= m; ++i) e.push_back(k_row[i] * Rational(i % 2 == 0 ? 1 : -1));

  std::vector<Polynomial> power_sum{Polynomial(proto.nvars(), proto.max_degree())};
  for (int j = 1; j <= m; ++j) {
    Polynomial pj = e[j] * Rational(j % 2 == 1 ? j : -j);
    for (int i = 1; i < j; ++i) pj += (e[i] * power_sum[j - i]) * Rational(i % 2 == 1 ? 1 : -1);
    power_sum.push_back(pj);
    result += pj * Rational(1 / factorial(j));
  }
  return result;
}

Polynomial ch_dual_exterior_direct(int p, std::span<const Polynomial> h_parts) {
  const int rank = static_cast<int>(h_parts.size());
  if (p < 0 || p > rank) throw ArgumentError("ch_dual_exterior_direct: p out of range");
  const auto m = static_cast<std::size_t>(rank);
  Polynomial sum(m, rank);
  for (const auto& s : subsets_of_size(m, static_cast<std::size_t>(p))) sum += exp(-root_sum(m, s));
  return substitute_elementary(to_elementary(sum), h_parts);
}

std::vector<Polynomial> positive_parts(const Polynomial& h) {
  std::vector<Polynomial> parts;
  for (int j = 1; j <= h.max_degree(); ++j) parts.push_back(h.homogeneous(j));
  return parts;
}

CharClassBundle characteristic_classes(const BuildingSet& g) {
  const int n = g.ambient_dim();
  CharClassBundle b{chern_total_Y(g), todd_Y(g), Polynomial(g.size(), n - 1), {}, {}};
  b.H = chern_omega_log(b.F, g);
  const auto h_parts = positive_parts(b.H);
  for (int p = 0; p <= n - 1; ++p) {
    b.K.push_back(exterior_chern(p, h_parts));
    b.P.push_back(ch_dual_exterior(p, b.K.back()));
  }
  return b;
}

}  // namespace arrspec
