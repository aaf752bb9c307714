#include <charconv>

#include "arrspec/document.hpp"
#include "arrspec/errors.hpp"

namespace arrspec {

namespace {

InputDocument from_integers(int n, std::initializer_list<std::initializer_list<long>> normals,
                            std::vector<long> mults = {}) {
  InputDocument doc;
  doc.n = n;
  std::size_t i = 0;
  for (const auto& normal : normals) {
    HyperplaneSpec h;
    for (long c : normal) h.coeffs.emplace_back(c);
    h.mult = i < mults.size() ? mults[i] : 1;
    doc.hyperplanes.push_back(std::move(h));
    ++i;
  }
  return doc;
}

std::optional<long> parameter(std::string_view name, std::string_view prefix) {
  if (name.substr(0, prefix.size()) != prefix) return std::nullopt;
  auto digits = name.substr(prefix.size());
  long value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || value < 1)
    throw ValidationError("fixture \"" + std::string(name) + "\" needs a positive integer parameter");
  return value;
}

}  // namespace

std::optional<InputDocument> fixture(std::string_view name) {
  // xy(x+y)
  if (name == "example-a") return from_integers(2, {{1, 0}, {0, 1}, {1, 1}});
  // x²y(x+y)
  if (name == "example-a-weighted") return from_integers(2, {{1, 0}, {0, 1}, {1, 1}}, {2, 1, 1});
  // (x²−y²)(x+z)(x+2z)
  if (name == "example-b1") return from_integers(3, {{1, -1, 0}, {1, 1, 0}, {1, 0, 1}, {1, 0, 2}});
  // (x²−y²)(x²−z²)
  if (name == "example-b2") return from_integers(3, {{1, -1, 0}, {1, 1, 0}, {1, 0, -1}, {1, 0, 1}});

  if (auto d = parameter(name, "lines:")) {
    InputDocument doc{2, {}, std::nullopt};
    for (long t = 0; t < *d; ++t) doc.hyperplanes.push_back({{Rational(1), Rational(t)}, 1});
    return doc;
  }
  if (auto m = parameter(name, "generic3d:")) {
    InputDocument doc{3, {}, std::nullopt};
    for (long t = 0; t < *m; ++t) doc.hyperplanes.push_back({{Rational(1), Rational(t), Rational(t * t)}, 1});
    return doc;
  }
  return std::nullopt;
}

std::vector<std::string> fixture_names() {
  return {"example-a", "example-a-weighted", "example-b1", "example-b2", "lines:<d>", "generic3d:<m>"};
}

}  // namespace arrspec
