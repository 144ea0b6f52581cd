#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ocvar/layout.hpp"
#include "ocvar/variants.hpp"

namespace ocvar::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 2,
  kConfigError = 3,
  kInternalError = 4,
};

struct RunConfig {
  std::string command;
  std::string input;  // "-" reads stdin
  std::string strategy = "components";
  std::optional<std::string> leading_type;
  std::string attribute = "ocel:activity";
  MiningMode mode = MiningMode::Exact;
  std::size_t wl_iterations = kDefaultWlIterations;
  std::optional<std::string> output;
  std::size_t top = 1;
  std::optional<std::size_t> rank;
  ChevronGeometry geometry;
  unsigned threads = 1;
  bool quiet = false;
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ocvar::cli
