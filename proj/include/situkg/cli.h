#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace situkg {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainFailure = 1;  // validation errors, bad events
inline constexpr int kExitUsage = 2;          // usage, I/O and parse failures

/// Runs the `situkg` command line. `args` includes the program name. Normal
/// output goes to `out`, diagnostics to `err`. The SITUKG_PREFIX environment
/// variable, when set, replaces the default base namespace.
///
///   situkg validate FILE... [--format text|json] [--strict] [--no-inference]
///   situkg query FILE... (--cq N | --query FILE) [--param NAME=VALUE]...
///                        [--format table|tsv|text] [--output PATH] [--no-inference]
///   situkg explain FILE... --entity ID --label LABEL [--output PATH] [--no-inference]
///   situkg build EVENTS.jsonl [--output PATH]
///   situkg stats FILE...
///   situkg infer FILE... [--output PATH]
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace situkg
