#include "arrspec/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace arrspec {

namespace {

template <typename T, typename F>
std::string join(const std::vector<T>& items, F render) {
  std::string out;
  for (const auto& x : items) out += (out.empty() ? "" : ", ") + render(x);
  return "[" + out + "]";
}

bool same_alphas_and_mults(const std::vector<SpectralPoint>& a, const std::vector<SpectralPoint>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].alpha != b[i].alpha || a[i].mult != b[i].mult) return false;
  return true;
}

CheckRecord ring_ranks(const SpectrumEngine& engine) {
  const auto& ranks = engine.ideal().quotient_ranks();
  bool dual = true;
  for (std::size_t j = 0; j < ranks.size(); ++j) dual = dual && ranks[j] == ranks[ranks.size() - 1 - j];
  bool ends = ranks.front() == 1 && ranks.back() == 1;
  return {"poincare-duality", dual && ends,
          "quotient ranks " + join(ranks, [](std::size_t r) { return std::to_string(r); })};
}

CheckRecord spectral_range(const SpectrumResult& result) {
  bool ok = true;
  for (std::size_t i = 0; i < result.points.size(); ++i) {
    const auto& pt = result.points[i];
    ok = ok && pt.alpha > 0 && pt.alpha < result.n && pt.mult != 0;
    if (i > 0) ok = ok && result.points[i - 1].alpha < pt.alpha;
  }
  return {"spectral-range", ok,
          std::to_string(result.points.size()) + " nonzero exponents, all in (0, " + std::to_string(result.n) + ")"};
}

CheckRecord euler_identity(const SpectrumEngine& engine, const SpectrumResult& result) {
  const Integer chi = euler_projective_complement(engine.lattice());
  const Integer expected = (result.n - 1) % 2 == 0 ? chi : Integer(-chi);
  const auto sums = eigenvalue_sums(result);
  bool ok = std::all_of(sums.begin(), sums.end(), [&](const Integer& s) { return s == expected; });
  return {"euler-identity", ok,
          "chi(U) = " + chi.get_str() + ", expected per-k sum " + expected.get_str() + ", sums for k=1..d-1 " +
              join(sums, [](const Integer& s) { return s.get_str(); })};
}

CheckRecord chern_cross_route(const SpectrumEngine& engine) {
  const auto& classes = engine.classes();
  const auto h_parts = positive_parts(classes.H);
  std::vector<std::string> bad;
  for (std::size_t p = 0; p < classes.P.size(); ++p)
    if (!(classes.P[p] == ch_dual_exterior_direct(static_cast<int>(p), h_parts))) bad.push_back(std::to_string(p));
  return {"chern-cross-route", bad.empty(),
          bad.empty() ? "Newton route equals formal-root route for p = 0.." + std::to_string(classes.P.size() - 1)
                      : "mismatch for p in " + join(bad, [](const std::string& s) { return s; })};
}

CheckRecord line_bundle(const SpectrumEngine& engine) {
  const auto& classes = engine.classes();
  const auto top = classes.P.size() - 1;
  bool ok = classes.P[top] == exp(-classes.K[top][1]);
  return {"line-bundle", ok, "P_{n-1} equals exp(-K_{n-1,1})"};
}

CheckRecord rank_totals(const SpectrumEngine& engine) {
  Rational total = 0;
  for (const auto& p : engine.classes().P) total += p.constant_term();
  Rational expected = Rational(Integer(1) << (engine.arrangement().ambient_dim() - 1));
  return {"rank-totals", total == expected, "sum of ranks " + to_string(total) + ", expected " + to_string(expected)};
}

CheckRecord integrality(const SpectrumResult& result) {
  const long cells = result.degree * result.n - 1;
  return {"integrality", true, "all " + std::to_string(cells) + " multiplicities integral"};
}

CheckRecord permutation_invariance(const SpectrumEngine& engine, const SpectrumResult& result, unsigned jobs) {
  const auto& arr = engine.arrangement();
  std::vector<std::size_t> order(arr.size());
  std::iota(order.rbegin(), order.rend(), std::size_t{0});
  SpectrumOptions options;
  options.jobs = jobs;
  if (!engine.building().is_maximal()) {
    // Relabel the explicit building set along with the hyperplanes.
    std::vector<std::size_t> inverse(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) inverse[order[i]] = i;
    std::vector<Closure> relabeled;
    for (std::size_t e = 1; e < engine.building().size(); ++e) {
      Closure c;
      for (auto i : engine.building()[e].closure) c.push_back(inverse[i]);
      relabeled.push_back(std::move(c));
    }
    options.building_set = std::move(relabeled);
  }
  auto other = spectrum(arr.permuted(order), options);
  bool ok = other.points == result.points;
  return {"permutation-invariance", ok, "reversed hyperplane order gives " + std::string(ok ? "identical" : "different") +
                                            " spectrum"};
}

}  // namespace

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.passed; });
}

std::vector<Integer> eigenvalue_sums(const SpectrumResult& result) {
  std::vector<Integer> sums(static_cast<std::size_t>(std::max(0L, result.degree - 1)), Integer(0));
  for (const auto& pt : result.points)
    if (pt.k < result.degree) sums[static_cast<std::size_t>(pt.k - 1)] += pt.mult;
  return sums;
}

std::vector<SpectralPoint> reduced_lines_spectrum(long d) {
  std::map<long, Integer> counts;  // keyed by i + j
  for (long i = 1; i < d; ++i)
    for (long j = 1; j < d; ++j) counts[i + j] += 1;
  std::vector<SpectralPoint> out;
  for (const auto& [num, mult] : counts) {
    Rational alpha{Integer(num), Integer(d)};
    alpha.canonicalize();
    long p = (num - 1) / d;
    out.push_back({alpha, num - p * d, static_cast<int>(p), mult});
  }
  return out;
}

VerificationReport verify(const SpectrumEngine& engine, const SpectrumResult& result, unsigned jobs) {
  VerificationReport report;
  const auto& ranks = engine.ideal().quotient_ranks();
  report.checks.push_back({"top-rank-one", ranks.back() == 1,
                           "quotient rank in degree " + std::to_string(ranks.size() - 1) + " is " +
                               std::to_string(ranks.back())});
  report.checks.push_back(ring_ranks(engine));
  report.checks.push_back(integrality(result));
  report.checks.push_back(spectral_range(result));
  report.checks.push_back(euler_identity(engine, result));
  report.checks.push_back(chern_cross_route(engine));
  report.checks.push_back(line_bundle(engine));
  report.checks.push_back(rank_totals(engine));
  report.checks.push_back(permutation_invariance(engine, result, jobs));

  const auto& arr = engine.arrangement();
  const bool reduced = std::all_of(arr.hyperplanes().begin(), arr.hyperplanes().end(),
                                   [](const Hyperplane& h) { return h.mult == 1; });
  if (arr.ambient_dim() == 2 && reduced) {
    auto oracle = reduced_lines_spectrum(arr.degree());
    report.checks.push_back({"n2-oracle", same_alphas_and_mults(oracle, result.points),
                             "expected {(i+j)/d : 1 <= i,j <= d-1} with d = " + std::to_string(arr.degree())});
    bool symmetric = true;
    for (const auto& pt : result.points) {
      Rational mirror = Rational(2) - pt.alpha;
      auto it = std::find_if(result.points.begin(), result.points.end(),
                             [&](const SpectralPoint& q) { return q.alpha == mirror; });
      symmetric = symmetric && it != result.points.end() && it->mult == pt.mult;
    }
    report.checks.push_back({"n2-symmetry", symmetric, "n_alpha = n_{2-alpha}"});
  }
  return report;
}

}  // namespace arrspec
