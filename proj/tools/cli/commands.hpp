#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace intpts::cli {

/// Runs the command line `args` (args[0] is the program name). Records go to
/// `out` unless --out names a file; summaries and errors go to `err`.
/// Returns 0 on success, 1 when a demo assertion fails, 2 on usage or
/// precondition errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Text of `arg` if it names a readable file, else `arg` itself.
std::string load_text(const std::string& arg);

}  // namespace intpts::cli
