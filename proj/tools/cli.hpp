#pragma once

// Command-line front end: table1, profile, simulate, rcrit, sync, wavefunction.

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace abkm::cli {

enum ExitCode : int {
  kOk = 0,
  kValidation = 1,
  kIo = 2,
  kNumerical = 3,
  kSearch = 4,
};

/// Runs one command. `args` excludes the program name. Data goes to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Flat `key = value` pairs, `#` starts a comment. Throws std::invalid_argument
/// on a malformed line.
std::vector<std::pair<std::string, std::string>> parse_config(std::istream& in);

}  // namespace abkm::cli
