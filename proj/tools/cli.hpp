#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dyer/graph.hpp"

namespace dyer::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,
  kMismatch = 2,
  kUnsupported = 3,
};

/// Runs one command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CheckLine {
  std::string name;
  std::string status;  // "ok", "FAIL" or "skipped"
  std::string detail;
};

struct CheckReport {
  std::vector<CheckLine> lines;
  bool passed() const;
};

/// The full consistency battery for one graph: both growth recursions, the
/// graph-product formula when every label is 2, the B_empty identity, the
/// B_X inversion, both Euler characteristics and an oracle census of the
/// given radius when a model exists.
CheckReport run_checks(const DyerGraph& graph, std::size_t oracle_radius = 5);

}  // namespace dyer::cli
