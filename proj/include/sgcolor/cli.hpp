#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sgcolor {

/// Exit codes of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;  // negative loop, unbalanced input to koenig, invalid colouring
inline constexpr int kExitUsage = 2;   // bad arguments, unreadable or malformed files

/// Runs one subcommand. `args` excludes the program name.
///
///     color <graph> [--method shannon|koenig|auto] [--dot <path>] [--seed <n>]
///     verify <graph> <coloring.json>
///     chi <graph> [--max-edges <n>] [--max-vertices <n>]
///     layers <graph> [--json]
///     balance <graph>
///     equiv <graph1> <graph2>
///     resign <graph> --at v1,v2,... [-o <path>]
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sgcolor
