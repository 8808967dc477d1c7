#pragma once

#include <cstdlib>
#include <iostream>
#include <string>

namespace segtag {

// Verbosity is controlled by the SEGTAG_LOG environment variable:
// quiet | warn (default) | info | debug.
enum class LogLevel : int { Quiet = 0, Warn = 1, Info = 2, Debug = 3 };

inline LogLevel log_level() {
    static LogLevel level = [] {
        const char* env = std::getenv("SEGTAG_LOG");
        if (!env) return LogLevel::Warn;
        std::string v(env);
        if (v == "quiet" || v == "0") return LogLevel::Quiet;
        if (v == "warn" || v == "1") return LogLevel::Warn;
        if (v == "info" || v == "2") return LogLevel::Info;
        if (v == "debug" || v == "3") return LogLevel::Debug;
        return LogLevel::Warn;
    }();
    return level;
}

inline void log_at(LogLevel lvl, const std::string& msg) {
    if (static_cast<int>(log_level()) >= static_cast<int>(lvl)) std::cerr << "segtag: " << msg << "\n";
}

inline void log_warn(const std::string& msg) { log_at(LogLevel::Warn, msg); }
inline void log_info(const std::string& msg) { log_at(LogLevel::Info, msg); }
inline void log_debug(const std::string& msg) { log_at(LogLevel::Debug, msg); }

}  // namespace segtag
