#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latcuts {

// Command dispatch for the latcuts tool. args excludes the program
// name. Exit codes: 0 success (and oracle match), 1 usage or parse
// error, 2 family not closed, 3 oracle mismatch or internal invariant
// violation, 4 cap exceeded. The environment variable LATTICE_CUTS_CAPS
// ("<lattice_cap>,<oracle_cap>") overrides the default caps.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace latcuts
