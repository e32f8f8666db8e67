#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace sdlattice::cli {

/// Runs one command line (without the program name). JSON results go to
/// `out` (or the --out file), diagnostics to `err`. Returns 0 on success
/// (a failed order check included), 1 on domain errors, 2 on usage, parse and
/// contract errors.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace sdlattice::cli
