#pragma once

#include "rado/search.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace rado::cli {

/// Exit codes: a verdict or answer was produced, the result is inconclusive
/// (or nothing was found within bounds), or the input was rejected.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInconclusive = 1;
inline constexpr int kExitInputError = 2;

/// Rules: residue:M, lnd:Q, digits:Q:K, explicit:C1,C2,..., and the
/// pullbacks square(RULE), cube(RULE), omega(RULE).
/// Throws std::invalid_argument on malformed rules.
Coloring parse_coloring_rule(const std::string& rule);

/// Polynomial in a single variable (any of the accepted names), e.g. "y^2 + y".
MonovariatePoly parse_univariate(const std::string& text);

/// key = value lines; '#' starts a comment. Throws std::invalid_argument on
/// malformed lines.
std::map<std::string, std::string> parse_config(std::istream& in);

/// Runs the rado-lab command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rado::cli
