#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gconvex::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFalse = 1;
inline constexpr int kUsage = 2;
inline constexpr int kCapacity = 3;

/// Runs one command line. args excludes the program name. Reports go to out,
/// diagnostics to err; stdin is read for the input "-".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace gconvex::cli
