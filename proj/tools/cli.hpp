#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lynperm::cli {

struct SubcommandInfo {
  std::string name;
  std::string summary;
  // Library operations reachable through this subcommand; each operation
  // appears under exactly one subcommand (asserted by the coverage test).
  std::vector<std::string> covered_ops;
};

const std::vector<SubcommandInfo>& dispatch_table();

/// Full CLI entry point; args exclude the program name. Returns the process
/// exit code: 0 success, 1 domain error or failed verification, 2 usage.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace lynperm::cli
