#include "arrspec/commands.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "arrspec/errors.hpp"
#include "arrspec/verify.hpp"

namespace arrspec {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read \"" + path + "\" (not a file or a known fixture)");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

InputDocument prepare(const std::string& source, const CommandOptions& options) {
  InputDocument doc = load_input(source);
  if (options.building_set && *options.building_set != "maximal")
    doc.building_set = parse_building_set(read_file(*options.building_set));
  else if (options.building_set)
    doc.building_set.reset();
  return doc;
}

SpectrumOptions engine_options(const InputDocument& doc, const CommandOptions& options) {
  SpectrumOptions o = to_options(doc);
  o.jobs = options.jobs;
  return o;
}

template <typename Body>
CommandResult guarded(Body body) {
  try {
    return body();
  } catch (const ValidationError& e) {
    return {kExitValidation, "", std::string("error: ") + e.what() + "\n"};
  } catch (const ArgumentError& e) {
    return {kExitValidation, "", std::string("error: ") + e.what() + "\n"};
  } catch (const nlohmann::json::exception& e) {
    return {kExitValidation, "", std::string("error: ") + e.what() + "\n"};
  } catch (const StructuralError& e) {
    return {kExitStructural, "", std::string("structural error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {kExitStructural, "", std::string("internal error: ") + e.what() + "\n"};
  }
}

std::string closure_text(const Closure& c) {
  std::string s;
  for (auto i : c) s += (s.empty() ? "" : ",") + std::to_string(i);
  return "{" + s + "}";
}

std::string report_text(const VerificationReport& report) {
  std::string out;
  for (const auto& c : report.checks) out += std::string(c.passed ? "PASS " : "FAIL ") + c.name + ": " + c.detail + "\n";
  out += report.all_passed() ? "all checks passed\n" : "some checks FAILED\n";
  return out;
}

}  // namespace

InputDocument load_input(const std::string& source) {
  if (auto f = fixture(source)) return *f;
  return parse_input(read_file(source));
}

CommandResult cmd_compute(const std::string& source, const CommandOptions& options) {
  return guarded([&]() -> CommandResult {
    InputDocument doc = prepare(source, options);
    SpectrumEngine engine(to_arrangement(doc), engine_options(doc, options));
    SpectrumResult result = engine.run(options.jobs);
    OutputDocument out = make_output(result);
    int code = kExitOk;
    if (options.checks) {
      auto report = verify(engine, result, options.jobs);
      out.checks = report.checks;
      if (!report.all_passed()) code = kExitCheckFailed;
    }
    if (options.json) return {code, print_output(out), ""};
    std::string text = "Sp(f) = " + format_spectrum(result.points) + "\n";
    for (const auto& w : result.warnings) text += "warning: " + w + "\n";
    if (out.checks)
      for (const auto& c : *out.checks)
        if (!c.passed) text += "FAIL " + c.name + ": " + c.detail + "\n";
    return {code, text, ""};
  });
}

CommandResult cmd_lattice(const std::string& source, const CommandOptions& options) {
  return guarded([&]() -> CommandResult {
    InputDocument doc = prepare(source, options);
    Arrangement arr = to_arrangement(doc);
    IntersectionLattice lat = build_lattice(arr);
    BuildingSet g = doc.building_set ? building_from_closures(lat, *doc.building_set) : maximal_building(lat);
    Integer chi = euler_projective_complement(lat);

    if (options.json) {
      nlohmann::ordered_json j;
      j["n"] = arr.ambient_dim();
      j["degree"] = arr.degree();
      j["essential"] = lat.is_essential();
      j["euler_characteristic"] = chi.get_si();
      auto flats = nlohmann::ordered_json::array();
      for (std::size_t v = 0; v < lat.size(); ++v) {
        std::vector<std::size_t> above;
        for (std::size_t w = 0; w < lat.size(); ++w)
          if (w != v && lat.subspace_of(v, w)) above.push_back(w);
        flats.push_back({{"index", v},
                         {"closure", lat[v].closure},
                         {"dim", lat[v].dim},
                         {"codim", lat[v].codim},
                         {"mobius", lat.mobius(v).get_si()},
                         {"contained_in", above}});
      }
      j["flats"] = flats;
      auto elems = nlohmann::ordered_json::array();
      for (std::size_t e = 0; e < g.size(); ++e) {
        nlohmann::ordered_json item{{"index", e}, {"formal_zero", g[e].formal_zero}, {"closure", g[e].closure},
                                    {"dim", g[e].dim}, {"codim", g[e].codim}};
        item["flat"] = g[e].flat ? nlohmann::ordered_json(*g[e].flat) : nlohmann::ordered_json(nullptr);
        elems.push_back(item);
      }
      j["building_set"] = elems;
      j["building_set_maximal"] = g.is_maximal();
      return {kExitOk, j.dump(2) + "\n", ""};
    }

    std::ostringstream os;
    os << "arrangement: n=" << arr.ambient_dim() << ", d=" << arr.degree() << ", " << arr.size() << " hyperplanes, "
       << (lat.is_essential() ? "essential" : "not essential") << "\n";
    os << "euler characteristic of the complement: " << chi.get_str() << "\n";
    os << "flats (" << lat.size() << "):\n";
    for (std::size_t v = 0; v < lat.size(); ++v) {
      os << "  [" << v << "] dim " << lat[v].dim << " codim " << lat[v].codim << " mu " << lat.mobius(v).get_str()
         << " closure " << closure_text(lat[v].closure);
      std::string above;
      for (std::size_t w = 0; w < lat.size(); ++w)
        if (w != v && lat.subspace_of(v, w)) above += (above.empty() ? "" : ",") + std::to_string(w);
      os << " inside {" << above << "}\n";
    }
    os << "building set (" << g.size() << (g.is_maximal() ? ", maximal" : ", explicit") << "):\n";
    for (std::size_t e = 0; e < g.size(); ++e) {
      os << "  c" << e << "  ";
      if (g[e].formal_zero)
        os << "formal zero" << (g[e].flat ? " (origin, flat " + std::to_string(*g[e].flat) + ")" : "");
      else
        os << "flat " << *g[e].flat << " dim " << g[e].dim << " closure " << closure_text(g[e].closure);
      os << "\n";
    }
    return {kExitOk, os.str(), ""};
  });
}

CommandResult cmd_verify(const std::string& source, const CommandOptions& options) {
  return guarded([&]() -> CommandResult {
    InputDocument doc = prepare(source, options);
    SpectrumEngine engine(to_arrangement(doc), engine_options(doc, options));
    SpectrumResult result = engine.run(options.jobs);
    auto report = verify(engine, result, options.jobs);
    const int code = report.all_passed() ? kExitOk : kExitCheckFailed;
    if (options.json) {
      OutputDocument out = make_output(result);
      out.checks = report.checks;
      return {code, print_output(out), ""};
    }
    std::string text = "Sp(f) = " + format_spectrum(result.points) + "\n";
    for (const auto& w : result.warnings) text += "warning: " + w + "\n";
    return {code, text + report_text(report), ""};
  });
}

}  // namespace arrspec
