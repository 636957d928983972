#pragma once

#include <cctype>
#include <cstdlib>
#include <string>

namespace factfeel {

// Stderr verbosity, controlled by the FACTFEEL_LOG environment variable:
// debug | info (default) | warn | error (or "quiet").
enum class LogLevel { Debug = 0, Info = 1, Warn = 2, Error = 3 };

inline LogLevel log_level() {
  static const LogLevel level = [] {
    const char* raw = std::getenv("FACTFEEL_LOG");
    std::string s = raw ? raw : "info";
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "debug") return LogLevel::Debug;
    if (s == "warn" || s == "warning") return LogLevel::Warn;
    if (s == "error" || s == "quiet") return LogLevel::Error;
    return LogLevel::Info;
  }();
  return level;
}

inline bool log_enabled(LogLevel wanted) {
  return static_cast<int>(wanted) >= static_cast<int>(log_level());
}

}  // namespace factfeel
