#include "liouspace/log.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

namespace liouspace {

LogLevel log_level() {
    static const LogLevel lvl = [] {
        const char* env = std::getenv("LIOUSPACE_LOG");
        if (env == nullptr || *env == '\0') return LogLevel::error;
        const std::string s(env);
        if (s == "error") return LogLevel::error;
        if (s == "info") return LogLevel::info;
        if (s == "debug") return LogLevel::debug;
        std::cerr << "[liouspace:error] unknown LIOUSPACE_LOG value '" << s
                  << "', expected error|info|debug\n";
        return LogLevel::error;
    }();
    return lvl;
}

bool log_enabled(LogLevel lvl) {
    return static_cast<int>(lvl) <= static_cast<int>(log_level());
}

void log_line(LogLevel lvl, const std::string& msg) {
    if (!log_enabled(lvl)) return;
    const char* tag = lvl == LogLevel::debug ? "debug" : lvl == LogLevel::info ? "info" : "error";
    std::cerr << "[liouspace:" << tag << "] " << msg << '\n';
}

} // namespace liouspace
