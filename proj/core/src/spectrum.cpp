#include "arrspec/spectrum.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <string>
#include <thread>

#include "arrspec/errors.hpp"

namespace arrspec {

EigenData beta(long k, const Arrangement& arrangement) {
  const long d = arrangement.degree();
  if (k < 1 || k > d) throw ArgumentError("beta: k must lie in [1, d]");
  EigenData out{k, {}, 0};
  Rational sum = 0;
  for (const auto& h : arrangement.hyperplanes()) {
    Rational q(Integer(-k * h.mult), Integer(d));
    q.canonicalize();
    out.beta.push_back(fractional_part(q));
    sum += out.beta.back();
  }
  if (!is_integer(sum)) throw InternalError("sum of β is not an integer: " + to_string(sum));
  out.sum_beta = sum.get_num();
  return out;
}

Rational s_value(std::size_t v, const EigenData& eigen, const BuildingSet& g) {
  if (v >= g.size()) throw ArgumentError("s_value: element not in the building set");
  Rational s = 0;
  for (auto i : g[v].closure) s += eigen.beta.at(i);
  return s;
}

Integer a_coeff(std::size_t v, const EigenData& eigen, const BuildingSet& g) {
  Integer a = g[v].codim - floor(s_value(v, eigen, g)) - 1;
  if (g[v].formal_zero) a += 1;
  return a;
}

Polynomial r_alpha(const EigenData& eigen, int p, const CharClassBundle& classes, const BuildingSet& g) {
  const Ring ring = ring_of(g);
  const int n = g.ambient_dim();
  if (p < 0 || p > n - 1) throw ArgumentError("r_alpha: p out of range");
  Polynomial twist = ring.zero();
  for (std::size_t v = 0; v < g.size(); ++v) twist += ring.var(v, Rational(a_coeff(v, eigen, g)));
  return classes.P.at(static_cast<std::size_t>(n - p - 1)) * exp(twist);
}

namespace {

BuildingSet choose_building(const IntersectionLattice& lattice, const SpectrumOptions& options) {
  if (options.building_set) return building_from_closures(lattice, *options.building_set);
  return maximal_building(lattice);
}

}  // namespace

SpectrumEngine::SpectrumEngine(Arrangement arrangement, const SpectrumOptions& options)
    : arrangement_(std::move(arrangement)),
      lattice_(build_lattice(arrangement_)),
      building_(choose_building(lattice_, options)),
      ideal_(building_),
      classes_(characteristic_classes(building_)) {
  if (!lattice_.is_essential())
    warnings_.push_back("arrangement is not essential (rank " + std::to_string(arrangement_.rank()) + " < n = " +
                        std::to_string(arrangement_.ambient_dim()) + "); result is unvalidated");
  if (!building_.is_maximal()) warnings_.push_back("non-maximal building set (experimental)");
}

Integer SpectrumEngine::multiplicity(long k, int p) const {
  const int n = arrangement_.ambient_dim();
  const long d = arrangement_.degree();
  if (k < 1 || k > d || p < 0 || p > n - 1 || (k == d && p == n - 1))
    throw ArgumentError("multiplicity: (k, p) outside the spectral range");
  const auto eigen = beta(k, arrangement_);
  Polynomial integrand = r_alpha(eigen, p, classes_, building_) * classes_.G;
  Rational value = reduce_top(integrand, ideal_);
  if ((n - p - 1) % 2 == 1) value = -value;
  if (!is_integer(value))
    throw StructuralError("non-integral multiplicity " + to_string(value) + " at k=" + std::to_string(k) +
                          ", p=" + std::to_string(p));
  return value.get_num();
}

SpectrumResult SpectrumEngine::run(unsigned jobs) const {
  const int n = arrangement_.ambient_dim();
  const long d = arrangement_.degree();
  struct Cell {
    long k;
    int p;
    Integer mult;
    std::exception_ptr error;
  };
  std::vector<Cell> cells;
  for (long k = 1; k <= d; ++k)
    for (int p = 0; p <= n - 1; ++p)
      if (!(k == d && p == n - 1)) cells.push_back({k, p, 0, nullptr});

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        cells[i].mult = multiplicity(cells[i].k, cells[i].p);
      } catch (...) {
        cells[i].error = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(cells.size())));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  SpectrumResult result{n, d, {}, warnings_};
  for (const auto& c : cells) {
    if (c.error) std::rethrow_exception(c.error);
    if (c.mult != 0) result.points.push_back({Rational(Integer(c.k), Integer(d)) + c.p, c.k, c.p, c.mult});
  }
  for (auto& pt : result.points) pt.alpha.canonicalize();
  std::sort(result.points.begin(), result.points.end(),
            [](const SpectralPoint& a, const SpectralPoint& b) { return a.alpha < b.alpha; });
  return result;
}

Integer multiplicity(long k, int p, const SpectrumEngine& engine) { return engine.multiplicity(k, p); }

SpectrumResult spectrum(const Arrangement& arrangement, const SpectrumOptions& options) {
  return SpectrumEngine(arrangement, options).run(options.jobs);
}

}  // namespace arrspec
