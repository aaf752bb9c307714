#pragma once

#include <optional>
#include <string>

#include "arrspec/document.hpp"

namespace arrspec {

enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 1,
  kExitStructural = 2,
  kExitCheckFailed = 3,
};

struct CommandOptions {
  bool json = false;
  unsigned jobs = 1;
  std::optional<std::string> building_set;  ///< "maximal" or a path to a closure-list file
  bool checks = true;
};

struct CommandResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

/// Resolves a fixture name or reads a JSON input file.
InputDocument load_input(const std::string& source);

/// `compute`: JSON output document unless options.json is false, in which case Sp(f) as text.
CommandResult cmd_compute(const std::string& source, const CommandOptions& options);
/// `lattice`: flats, dimensions, Möbius values, incidences and the building set.
CommandResult cmd_lattice(const std::string& source, const CommandOptions& options);
/// `verify`: every consistency check with the compared quantities; exit 3 on any failure.
CommandResult cmd_verify(const std::string& source, const CommandOptions& options);

}  // namespace arrspec
