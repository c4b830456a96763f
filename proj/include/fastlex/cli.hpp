#pragma once

#include <map>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace fastlex::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

// Parses `key = value` lines; '#' starts a comment. Throws ConfigError on malformed lines.
std::map<std::string, std::string> parse_config_text(const std::string& text);

// Expands a `--config <file>` argument into flags for every key the command
// line does not already set, so explicit flags win over the file.
std::vector<std::string> expand_config(std::span<const std::string> args);

// Entry point behind the fastlex executable. `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace fastlex::cli
