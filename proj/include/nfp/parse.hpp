#pragma once

// Text forms accepted on the command line.

#include <string>
#include <vector>

#include "nfp/numerics.hpp"

namespace nfp::parse {

/// "a", "a+bi", "bi", "-i", or "@t" for exp(i t).  Throws std::invalid_argument.
CNum complex_number(const std::string& text);

/// Comma-separated list of complex_number() entries.
std::vector<CNum> complex_list(const std::string& text);

/// Comma-separated integers, e.g. "2,1,0".
std::vector<long> integer_list(const std::string& text);

}  // namespace nfp::parse
