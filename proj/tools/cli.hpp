#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace abfactor::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitResourceCap = 3;

/// Fully resolved command line. Echoed into every JSON report.
struct RunConfig {
  std::string command;  // decide | construct | spectral | bound | verify | batch
  std::string subject;  // family, theorem id, target id or suite name
  std::string graph6;
  std::optional<std::pair<int, int>> parts;
  std::map<std::string, int> params;
  std::vector<int> ps;
  std::vector<int> qs;
  double tol = 1e-12;
  std::string format = "json";
  std::string output;  // empty: standard output
};

/// Parses args (without the program name), runs the command and writes the
/// result to out or to the --output file. Diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Executes an already parsed configuration.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace abfactor::cli
