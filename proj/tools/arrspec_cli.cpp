// arrspec: Hodge spectrum of a central hyperplane arrangement from its intersection lattice.

#include <CLI11.hpp>

#include <iostream>

#include "arrspec/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Hodge spectrum of central hyperplane arrangements"};
  app.require_subcommand(1);

  std::string source;
  arrspec::CommandOptions options;
  bool text = false;
  bool no_checks = false;
  std::string building_set;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", source, "JSON input file or fixture (example-a, example-b1, lines:<d>, ...)")
        ->required();
    sub->add_flag("--json", options.json, "structured JSON output");
    sub->add_option("--jobs", options.jobs, "worker threads for the per-(k,p) evaluations")
        ->check(CLI::Range(1u, 1024u));
    sub->add_option("--building-set", building_set, "maximal, or a JSON file listing closure sets (expert)");
  };

  auto* compute = app.add_subcommand("compute", "compute Sp(f)");
  add_common(compute);
  compute->add_flag("--text", text, "print Sp(f) as a polynomial instead of JSON");
  compute->add_flag("--no-checks", no_checks, "omit the verification report");

  auto* lattice = app.add_subcommand("lattice", "dump the intersection lattice and building set");
  add_common(lattice);

  auto* verify = app.add_subcommand("verify", "run every consistency check");
  add_common(verify);

  CLI11_PARSE(app, argc, argv);

  if (!building_set.empty()) options.building_set = building_set;
  arrspec::CommandResult result;
  if (compute->parsed()) {
    options.json = !text;
    options.checks = !no_checks;
    result = arrspec::cmd_compute(source, options);
  } else if (lattice->parsed()) {
    result = arrspec::cmd_lattice(source, options);
  } else {
    result = arrspec::cmd_verify(source, options);
  }
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
