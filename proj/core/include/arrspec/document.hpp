#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arrspec/arrangement.hpp"
#include "arrspec/spectrum.hpp"

namespace arrspec {

struct HyperplaneSpec {
  std::vector<Rational> coeffs;
  long mult = 1;

  bool operator==(const HyperplaneSpec&) const = default;
};

/// Input JSON:
///   {"n": 3, "hyperplanes": [{"coeffs": [1, "-1/2", 0], "mult": 1}, ...],
///    "building_set": "maximal" | [[0, 1], [2, 3], ...]}
struct InputDocument {
  int n = 0;
  std::vector<HyperplaneSpec> hyperplanes;
  std::optional<std::vector<Closure>> building_set;  ///< nullopt = "maximal"

  bool operator==(const InputDocument&) const = default;
};

struct CheckRecord {
  std::string name;
  bool passed = false;
  std::string detail;

  bool operator==(const CheckRecord&) const = default;
};

/// Output JSON:
///   {"n": 2, "degree": 3, "spectrum": [{"alpha": "2/3", "mult": 1, "k": 2, "p": 0}, ...],
///    "warnings": [...], "checks": [{"name": ..., "passed": true, "detail": ...}]}
struct OutputDocument {
  int n = 0;
  long degree = 0;
  std::vector<SpectralPoint> spectrum;
  std::vector<std::string> warnings;
  std::optional<std::vector<CheckRecord>> checks;

  bool operator==(const OutputDocument&) const = default;
};

/// Throws ValidationError naming the offending line/column or field path.
InputDocument parse_input(std::string_view text);
std::string print_input(const InputDocument& doc);

/// Parses a building-set file: a JSON array of closure arrays (or an object with a
/// "building_set" member).
std::vector<Closure> parse_building_set(std::string_view text);

Arrangement to_arrangement(const InputDocument& doc);
SpectrumOptions to_options(const InputDocument& doc);

OutputDocument parse_output(std::string_view text);
std::string print_output(const OutputDocument& doc);

OutputDocument make_output(const SpectrumResult& result);

/// Sp(f) rendered as "t^(2/3) + 2t + t^(4/3)"; "0" when empty.
std::string format_spectrum(const std::vector<SpectralPoint>& points);

/// Named fixtures: example-a, example-a-weighted, example-b1, example-b2, lines:<d>, generic3d:<m>.
std::optional<InputDocument> fixture(std::string_view name);
std::vector<std::string> fixture_names();

}  // namespace arrspec
