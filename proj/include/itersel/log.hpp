#pragma once

#include <cstdio>
#include <fstream>
#include <mutex>
#include <string>

namespace itersel {

enum class LogLevel { debug = 0, info = 1, warn = 2, error = 3 };

// Process-wide logger: timestamped lines to stderr and, when attached,
// to a run log file. Thread-safe.
class Logger {
  public:
    static Logger & instance();

    void set_level(LogLevel level) { level_ = level; }
    static LogLevel parse_level(const std::string & name);

    // Mirror all subsequent records into `path` (append).
    void attach_file(const std::string & path);
    void detach_file();

    void log(LogLevel level, const std::string & msg);

  private:
    Logger() = default;
    std::mutex mu_;
    std::ofstream file_;
    LogLevel level_ = LogLevel::info;
};

void log_debug(const std::string & msg);
void log_info(const std::string & msg);
void log_warn(const std::string & msg);
void log_error(const std::string & msg);

} // namespace itersel
