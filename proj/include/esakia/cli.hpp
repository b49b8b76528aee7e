#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "esakia/io.hpp"

namespace esakia::cli {

/// Outcome of one command: `data` is the machine rendering (always starts
/// with "status"), `text` the human one.
struct Report {
  bool ok = true;
  io::Json data;
  std::string text;
};

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFail = 1;
inline constexpr int kInputError = 2;

/// Runs one command line (without the program name). Reports go to `out`
/// (or --out PATH), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace esakia::cli
