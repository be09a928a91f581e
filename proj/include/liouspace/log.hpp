#pragma once
#include <string>

namespace liouspace {

// Diagnostics go to stderr only, gated by the LIOUSPACE_LOG environment
// variable: "error" (default), "info" or "debug".
enum class LogLevel { error = 0, info = 1, debug = 2 };

LogLevel log_level();
bool log_enabled(LogLevel lvl);
void log_line(LogLevel lvl, const std::string& msg);

} // namespace liouspace
