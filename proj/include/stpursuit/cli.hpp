#ifndef STPURSUIT_CLI_HPP
#define STPURSUIT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "stpursuit/simulator.hpp"

namespace stpursuit::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kOk = 0, kViolation = 1, kUsage = 2 };

/// Environment variable overriding the configured output directory.
inline constexpr const char* kOutputDirEnv = "STPURSUIT_OUTPUT_DIR";

/// Entry point behind the `stpursuit` binary; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// %.17g formatting used for every emitted number.
std::string format_number(double value);

/// CSV bodies emitted by the commands, exposed for golden tests.
std::string trace_csv(const EventLog& log);
std::string table1_csv(const EventLog& memoryless, const EventLog& memory);
std::string summary_json(const EventLog& log, const Verification& verification);

}  // namespace stpursuit::cli

#endif  // STPURSUIT_CLI_HPP
