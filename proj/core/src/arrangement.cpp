#include "arrspec/arrangement.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "arrspec/errors.hpp"

namespace arrspec {

namespace {

// Incremental row-echelon basis of a subspace of Q^n.
class SpanBasis {
 public:
  explicit SpanBasis(int dim) : dim_(dim) {}

  std::vector<Rational> reduce(std::vector<Rational> v) const {
    for (const auto& [pivot, row] : rows_) {
      if (v[pivot] == 0) continue;
      Rational factor = v[pivot];
      for (int c = pivot; c < dim_; ++c) v[c] -= factor * row[c];
    }
    return v;
  }

  bool contains(const std::vector<Rational>& v) const {
    auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
  }

  // Returns true when v enlarged the span.
  bool insert(const std::vector<Rational>& v) {
    auto r = reduce(v);
    auto it = std::find_if(r.begin(), r.end(), [](const Rational& x) { return x != 0; });
    if (it == r.end()) return false;
    int pivot = static_cast<int>(it - r.begin());
    Rational lead = r[pivot];
    for (auto& x : r) x /= lead;
    rows_.emplace_back(pivot, std::move(r));
    std::sort(rows_.begin(), rows_.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return true;
  }

  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  int dim_;
  std::vector<std::pair<int, std::vector<Rational>>> rows_;
};

SpanBasis span_of(const Arrangement& arr, const Closure& indices) {
  SpanBasis basis(arr.ambient_dim());
  for (auto i : indices) basis.insert(arr[i].normal);
  return basis;
}

Closure closure_of(const Arrangement& arr, const SpanBasis& basis) {
  Closure out;
  for (std::size_t j = 0; j < arr.size(); ++j)
    if (basis.contains(arr[j].normal)) out.push_back(j);
  return out;
}

bool proportional(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  // a, b nonzero; proportional iff all 2x2 minors vanish.
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

}  // namespace

Arrangement::Arrangement(int ambient_dim, std::vector<Hyperplane> hyperplanes)
    : ambient_dim_(ambient_dim), hyperplanes_(std::move(hyperplanes)) {
  if (ambient_dim_ < 2) throw ValidationError("ambient dimension must be at least 2, got " + std::to_string(ambient_dim_));
  if (hyperplanes_.empty()) throw ValidationError("arrangement has no hyperplanes");
  for (std::size_t i = 0; i < hyperplanes_.size(); ++i) {
    const auto& h = hyperplanes_[i];
    const std::string where = "hyperplane " + std::to_string(i);
    if (h.normal.size() != static_cast<std::size_t>(ambient_dim_))
      throw ValidationError(where + ": expected " + std::to_string(ambient_dim_) + " coefficients, got " +
                            std::to_string(h.normal.size()));
    if (std::all_of(h.normal.begin(), h.normal.end(), [](const Rational& x) { return x == 0; }))
      throw ValidationError(where + ": normal vector is zero");
    if (h.mult < 1) throw ValidationError(where + ": multiplicity must be a positive integer");
  }
  for (std::size_t i = 0; i < hyperplanes_.size(); ++i)
    for (std::size_t j = i + 1; j < hyperplanes_.size(); ++j)
      if (proportional(hyperplanes_[i].normal, hyperplanes_[j].normal))
        throw ValidationError("hyperplanes " + std::to_string(i) + " and " + std::to_string(j) +
                              " have proportional normals; merge them into a single hyperplane whose "
                              "multiplicity is the sum of both");
}

long Arrangement::degree() const {
  long d = 0;
  for (const auto& h : hyperplanes_) d += h.mult;
  return d;
}

int Arrangement::rank() const {
  SpanBasis basis(ambient_dim_);
  for (const auto& h : hyperplanes_) basis.insert(h.normal);
  return basis.rank();
}

Arrangement Arrangement::permuted(std::span<const std::size_t> order) const {
  if (order.size() != hyperplanes_.size()) throw ValidationError("permutation has wrong length");
  std::vector<Hyperplane> out;
  out.reserve(order.size());
  std::vector<bool> seen(order.size(), false);
  for (auto i : order) {
    if (i >= hyperplanes_.size() || seen[i]) throw ValidationError("not a permutation");
    seen[i] = true;
    out.push_back(hyperplanes_[i]);
  }
  return Arrangement(ambient_dim_, std::move(out));
}

IntersectionLattice::IntersectionLattice(int ambient_dim, std::size_t num_hyperplanes, std::vector<Flat> flats)
    : ambient_dim_(ambient_dim), num_hyperplanes_(num_hyperplanes), flats_(std::move(flats)) {
  std::sort(flats_.begin(), flats_.end(), [](const Flat& a, const Flat& b) {
    return a.codim != b.codim ? a.codim < b.codim : a.closure < b.closure;
  });
  if (flats_.empty() || !flats_.front().closure.empty())
    throw InternalError("lattice must contain the ambient space");
  const std::size_t m = flats_.size();
  contained_.assign(m * m, false);
  for (std::size_t v = 0; v < m; ++v)
    for (std::size_t w = 0; w < m; ++w)
      contained_[v * m + w] = std::includes(flats_[v].closure.begin(), flats_[v].closure.end(),
                                            flats_[w].closure.begin(), flats_[w].closure.end());
  mobius_.assign(m, Integer(0));
  mobius_[0] = 1;
  for (std::size_t v = 1; v < m; ++v) {
    Integer sum = 0;
    for (std::size_t w = 0; w < v; ++w)
      if (subspace_of(v, w)) sum += mobius_[w];
    mobius_[v] = -sum;
  }
}

std::optional<std::size_t> IntersectionLattice::find(const Closure& closure) const {
  for (std::size_t i = 0; i < flats_.size(); ++i)
    if (flats_[i].closure == closure) return i;
  return std::nullopt;
}

std::size_t IntersectionLattice::meet(std::size_t v, std::size_t w) const {
  // The intersection is the flat of smallest codimension lying inside both.
  for (std::size_t u = 0; u < flats_.size(); ++u)
    if (subspace_of(u, v) && subspace_of(u, w)) return u;
  throw InternalError("lattice has no common lower bound");
}

std::size_t IntersectionLattice::hyperplane_flat(std::size_t i) const {
  auto idx = find(Closure{i});
  if (!idx) throw InternalError("hyperplane " + std::to_string(i) + " has no flat");
  return *idx;
}

IntersectionLattice build_lattice(const Arrangement& arrangement) {
  const int n = arrangement.ambient_dim();
  std::vector<Flat> flats{Flat{{}, n, 0}};
  std::set<Closure> seen{Closure{}};
  std::vector<Closure> frontier{Closure{}};
  for (int codim = 1; !frontier.empty(); ++codim) {
    std::vector<Closure> next;
    for (const auto& closure : frontier) {
      for (std::size_t i = 0; i < arrangement.size(); ++i) {
        if (std::binary_search(closure.begin(), closure.end(), i)) continue;
        Closure generators = closure;
        generators.push_back(i);
        auto basis = span_of(arrangement, generators);
        if (basis.rank() != codim) throw InternalError("rank did not increase by one");
        Closure c = closure_of(arrangement, basis);
        if (seen.insert(c).second) {
          flats.push_back(Flat{c, n - codim, codim});
          next.push_back(std::move(c));
        }
      }
    }
    frontier = std::move(next);
  }
  return IntersectionLattice(n, arrangement.size(), std::move(flats));
}

std::vector<Integer> poincare_polynomial(const IntersectionLattice& lattice) {
  std::vector<Integer> coeffs(static_cast<std::size_t>(lattice.ambient_dim()) + 1, Integer(0));
  for (std::size_t v = 0; v < lattice.size(); ++v) {
    int r = lattice[v].codim;
    coeffs[r] += (r % 2 == 0 ? 1 : -1) * lattice.mobius(v);
  }
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

Integer euler_projective_complement(const IntersectionLattice& lattice) {
  auto pi = poincare_polynomial(lattice);
  // Synthetic division by (1 + t), from the top coefficient down.
  const std::size_t deg = pi.size() - 1;
  if (deg == 0) throw InternalError("Poincaré polynomial is constant; (1+t) does not divide it");
  std::vector<Integer> quotient(deg, Integer(0));
  Integer carry = 0;
  for (std::size_t i = deg; i >= 1; --i) {
    quotient[i - 1] = pi[i] - carry;
    carry = quotient[i - 1];
  }
  if (pi[0] != carry) throw InternalError("(1+t) does not divide the Poincaré polynomial; Möbius values are wrong");
  Integer value = 0;
  for (std::size_t i = 0; i < quotient.size(); ++i) value += (i % 2 == 0 ? 1 : -1) * quotient[i];
  return value;
}

}  // namespace arrspec
