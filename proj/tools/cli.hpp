#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "thuemorse/digitseq.hpp"

namespace thuemorse::cli {

/// "2^a..2^b[:step]" (powers of two, step in the exponent), "a..b[:step]",
/// "2^a" or a plain integer. Throws std::invalid_argument on bad syntax.
std::vector<Natural> parse_ladder(std::string_view text);

/// Plain decimal or "2^k".
Natural parse_natural(std::string_view text);

/// Runs one invocation; args exclude the program name. Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thuemorse::cli
