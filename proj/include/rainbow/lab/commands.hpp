#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rainbow::lab {

enum ExitCode : int {
  kOk = 0,
  kViolation = 1,  // a checked inequality failed or a certificate did not verify
  kBadInput = 2,   // malformed input, or exact records that could not be obtained
};

// Runs one `lab` invocation. `args` excludes the program name. Records go to
// the cache at Cache::default_root() unless --cache is given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rainbow::lab
