#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "uncert/frames.hpp"

namespace uncert::cli {

inline constexpr const char* kVersion = "0.1.0";

enum class Command { verify, garling, counterexample, construct, search, sweep, minors };
enum class OutputFormat { json, csv, human };

Command command_from_name(const std::string& name);
const char* command_name(Command c);
OutputFormat format_from_name(const std::string& name);
const char* format_name(OutputFormat f);

/// One resolved invocation.  params hold command-specific key/values as
/// strings; identical config + seed always produces byte-identical JSON.
struct RunConfig {
    Command command = Command::verify;
    std::map<std::string, std::string> params;
    unsigned long long seed = 0;
    OutputFormat output_format = OutputFormat::json;
};

/// Executes the command, streaming the report to `out` and diagnostics to
/// `diag`.  Exit codes: 0 all checked inequalities hold, 1 some check
/// failed (a reportable event), 2 usage or input errors.
int run(const RunConfig& config, std::ostream& out, std::ostream& diag);

/// Builtin pair specifiers: "identity:d", "dft:n", "random:d:seed",
/// "file:path" (pair CSV).
FramePair pair_from_spec(const std::string& spec);

/// Vector specifiers: "comb:n:spacing[:offset]", "spike:n[:index]",
/// "ones:n", "random:n:seed", "file:path" (vector CSV).
CVec vector_from_spec(const std::string& spec);

/// Search parallelism cap from UNCERT_FRAMES_THREADS (0 = hardware).
unsigned thread_cap_from_env();

} // namespace uncert::cli
