#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "symdeg/degreelp.hpp"
#include "symdeg/properties.hpp"
#include "symdeg/rational.hpp"

namespace symdeg::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kBudget = 3,
  kInternal = 4,
};

/// Runs the tool with argv[0] being the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "a..b" or "a" into an inclusive range. Throws std::invalid_argument
/// on malformed text or an empty range.
std::pair<int, int> parse_range(const std::string& text);

/// Sweep rows as CSV with header "m,degree,query_lower_bound,eps_min"; the
/// last column joins eps_min(0), eps_min(1), ... with ';'.
std::string sweep_csv(const std::vector<DegreeCertificate>& rows);

}  // namespace symdeg::cli
