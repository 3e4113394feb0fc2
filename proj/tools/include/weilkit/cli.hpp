#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "weilkit/density.hpp"
#include "weilkit/error.hpp"
#include "weilkit/hyperoct.hpp"

namespace weilkit::cli {

enum ExitCode : int { kOk = 0, kMalformed = 1, kValidationFailure = 2, kSearchFailure = 3 };

/// Exit code reported for a library error.
int exit_code_for(ErrorCode code);

/// Runs one subcommand (args exclude the program name) and writes JSON to out.
/// `--coeffs -` reads the coefficient list from in.
int run(const std::vector<std::string>& args, std::ostream& out, std::istream& in);

/// Comma- or whitespace-separated integers.
std::vector<Integer> parse_integer_list(const std::string& text);

/// "j:H" with H one of the transitive shadow names for n, e.g. "1:S5".
GaloisShape parse_galois(int n, const std::string& text);

/// "C<n>" (n-cycle), "S<n>" (n-cycle and a transposition), another shadow name for
/// n in {3, 5, 7}, or explicit 0-based images "1,2,0;1,0,2" separated by ';'.
PermGens parse_h(int n, const std::string& text);

}  // namespace weilkit::cli
