#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace parkfn::cli {

enum ExitCode : int {
  kOk = 0,
  kMalformedInput = 1,
  kDisagreement = 2,
  kSearchCapExceeded = 3,
};

/// Runs one command. args excludes the program name. Machine output goes to
/// out, diagnostics and human-readable tables to err.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace parkfn::cli
