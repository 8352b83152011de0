#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pbnf::cli {

// Version tag carried by every JSON document the CLI emits.
inline constexpr const char* kSchema = "pbnf/1";

enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2 };

// Runs one command. `args` excludes the program name. Results go to `out`,
// diagnostics to `err`. Returns 0 on success, 1 on a logical negative (not
// equivalent, not a tautology, unreachable target...), 2 on usage or parse
// errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Full report: the four-family table, the Klein table, the value table, the
// mod-4 table and the singular-on-binary diff. Byte-stable.
std::string emit_tables(bool json);

}  // namespace pbnf::cli
