#pragma once

// Command-line front end. `run` parses argv-style arguments (without the
// program name), writes the document to `out` (or the --output file) and
// diagnostics to `err`.

#include <ostream>
#include <string>
#include <vector>

namespace bergfan::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitBadInput = 2;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bergfan::cli
