#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace qdyson::cli {

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kEngineVersion = "qdyson-engine-1";

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Comma-separated integers; the empty string is the empty vector. Throws
/// UsageError naming `flag` on malformed input.
std::vector<int> parse_int_list(const std::string& text, const std::string& flag);

/// 64-bit FNV-1a, rendered as 16 hex digits.
std::string content_hash(std::string_view data);

}  // namespace qdyson::cli
