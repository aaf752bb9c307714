#include "arrspec/document.hpp"

#include <json.hpp>

#include "arrspec/errors.hpp"

namespace arrspec {

using Json = nlohmann::ordered_json;

namespace {

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

[[noreturn]] void field_error(const std::string& path, const std::string& what) {
  throw ValidationError(path + ": " + what);
}

Rational read_rational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ValidationError& e) {
      field_error(path, e.what());
    }
  }
  field_error(path, "expected an integer or a rational string \"a/b\"");
}

long read_long(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) field_error(path, "expected an integer");
  return j.get<long>();
}

Json write_integer(const Integer& z, const std::string& what) {
  if (!z.fits_slong_p()) throw InternalError(what + " does not fit in a 64-bit integer");
  return z.get_si();
}

Closure read_closure(const Json& j, const std::string& path) {
  if (!j.is_array()) field_error(path, "expected an array of hyperplane indices");
  Closure c;
  for (std::size_t i = 0; i < j.size(); ++i) {
    long v = read_long(j[i], path + "[" + std::to_string(i) + "]");
    if (v < 0) field_error(path + "[" + std::to_string(i) + "]", "hyperplane index must be non-negative");
    c.push_back(static_cast<std::size_t>(v));
  }
  return c;
}

std::vector<Closure> read_closure_list(const Json& j, const std::string& path) {
  if (!j.is_array()) field_error(path, "expected \"maximal\" or an array of closure sets");
  std::vector<Closure> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(read_closure(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

const Json& require(const Json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) field_error(path, std::string("missing field \"") + key + "\"");
  return *it;
}

}  // namespace

InputDocument parse_input(std::string_view text) {
  Json j = parse_json(text);
  if (!j.is_object()) field_error("document", "expected a JSON object");
  InputDocument doc;
  long n = read_long(require(j, "n", "document"), "n");
  if (n < 2) field_error("n", "ambient dimension must be at least 2");
  doc.n = static_cast<int>(n);

  const Json& hs = require(j, "hyperplanes", "document");
  if (!hs.is_array() || hs.empty()) field_error("hyperplanes", "expected a nonempty array");
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const std::string path = "hyperplanes[" + std::to_string(i) + "]";
    const Json& h = hs[i];
    HyperplaneSpec spec;
    const Json* coeffs = &h;
    if (h.is_object()) {
      coeffs = &require(h, "coeffs", path);
      if (auto m = h.find("mult"); m != h.end()) spec.mult = read_long(*m, path + ".mult");
    }
    if (!coeffs->is_array()) field_error(path + ".coeffs", "expected an array");
    for (std::size_t c = 0; c < coeffs->size(); ++c)
      spec.coeffs.push_back(read_rational((*coeffs)[c], path + ".coeffs[" + std::to_string(c) + "]"));
    if (spec.coeffs.size() != static_cast<std::size_t>(n))
      field_error(path + ".coeffs", "expected " + std::to_string(n) + " coefficients");
    if (spec.mult < 1) field_error(path + ".mult", "multiplicity must be a positive integer");
    doc.hyperplanes.push_back(std::move(spec));
  }

  if (auto b = j.find("building_set"); b != j.end()) {
    if (b->is_string()) {
      if (b->get<std::string>() != "maximal") field_error("building_set", "expected \"maximal\" or a list");
    } else {
      doc.building_set = read_closure_list(*b, "building_set");
    }
  }
  return doc;
}

std::string print_input(const InputDocument& doc) {
  Json j;
  j["n"] = doc.n;
  Json hs = Json::array();
  for (const auto& h : doc.hyperplanes) {
    Json coeffs = Json::array();
    for (const auto& c : h.coeffs) {
      if (is_integer(c) && c.get_num().fits_slong_p())
        coeffs.push_back(c.get_num().get_si());
      else
        coeffs.push_back(to_string(c));
    }
    hs.push_back(Json{{"coeffs", coeffs}, {"mult", h.mult}});
  }
  j["hyperplanes"] = hs;
  if (doc.building_set)
    j["building_set"] = *doc.building_set;
  else
    j["building_set"] = "maximal";
  return j.dump(2) + "\n";
}

std::vector<Closure> parse_building_set(std::string_view text) {
  Json j = parse_json(text);
  if (j.is_object()) return read_closure_list(require(j, "building_set", "document"), "building_set");
  return read_closure_list(j, "building_set");
}

Arrangement to_arrangement(const InputDocument& doc) {
  std::vector<Hyperplane> hs;
  for (const auto& h : doc.hyperplanes) hs.push_back(Hyperplane{h.coeffs, h.mult});
  return Arrangement(doc.n, std::move(hs));
}

SpectrumOptions to_options(const InputDocument& doc) {
  SpectrumOptions options;
  options.building_set = doc.building_set;
  return options;
}

OutputDocument make_output(const SpectrumResult& result) {
  return OutputDocument{result.n, result.degree, result.points, result.warnings, std::nullopt};
}

std::string print_output(const OutputDocument& doc) {
  Json j;
  j["n"] = doc.n;
  j["degree"] = doc.degree;
  Json sp = Json::array();
  for (const auto& pt : doc.spectrum)
    sp.push_back(Json{{"alpha", to_fraction_string(pt.alpha)},
                      {"mult", write_integer(pt.mult, "multiplicity")},
                      {"k", pt.k},
                      {"p", pt.p}});
  j["spectrum"] = sp;
  j["warnings"] = doc.warnings;
  if (doc.checks) {
    Json cs = Json::array();
    for (const auto& c : *doc.checks) cs.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    j["checks"] = cs;
  }
  return j.dump(2) + "\n";
}

OutputDocument parse_output(std::string_view text) {
  Json j = parse_json(text);
  if (!j.is_object()) field_error("document", "expected a JSON object");
  OutputDocument doc;
  doc.n = static_cast<int>(read_long(require(j, "n", "document"), "n"));
  doc.degree = read_long(require(j, "degree", "document"), "degree");
  const Json& sp = require(j, "spectrum", "document");
  if (!sp.is_array()) field_error("spectrum", "expected an array");
  for (std::size_t i = 0; i < sp.size(); ++i) {
    const std::string path = "spectrum[" + std::to_string(i) + "]";
    SpectralPoint pt;
    pt.alpha = read_rational(require(sp[i], "alpha", path), path + ".alpha");
    pt.mult = Integer(read_long(require(sp[i], "mult", path), path + ".mult"));
    pt.k = read_long(require(sp[i], "k", path), path + ".k");
    pt.p = static_cast<int>(read_long(require(sp[i], "p", path), path + ".p"));
    if (i > 0 && !(doc.spectrum.back().alpha < pt.alpha)) field_error(path + ".alpha", "alphas must strictly increase");
    doc.spectrum.push_back(std::move(pt));
  }
  if (auto w = j.find("warnings"); w != j.end()) doc.warnings = w->get<std::vector<std::string>>();
  if (auto c = j.find("checks"); c != j.end()) {
    std::vector<CheckRecord> checks;
    for (const auto& item : *c)
      checks.push_back({item.at("name").get<std::string>(), item.at("passed").get<bool>(),
                        item.at("detail").get<std::string>()});
    doc.checks = std::move(checks);
  }
  return doc;
}

std::string format_spectrum(const std::vector<SpectralPoint>& points) {
  if (points.empty()) return "0";
  std::string out;
  for (const auto& pt : points) {
    Integer mag = abs(pt.mult);
    if (out.empty())
      out += pt.mult < 0 ? "-" : "";
    else
      out += pt.mult < 0 ? " - " : " + ";
    if (mag != 1) out += mag.get_str();
    if (pt.alpha == 1)
      out += "t";
    else if (is_integer(pt.alpha))
      out += "t^" + pt.alpha.get_str();
    else
      out += "t^(" + pt.alpha.get_str() + ")";
  }
  return out;
}

}  // namespace arrspec
