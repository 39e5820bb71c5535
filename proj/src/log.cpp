#include "itersel/log.hpp"

#include "itersel/errors.hpp"

#include <chrono>
#include <ctime>

namespace itersel {

namespace {

const char * level_name(LogLevel level) {
    switch (level) {
        case LogLevel::debug: return "DEBUG";
        case LogLevel::info:  return "INFO";
        case LogLevel::warn:  return "WARN";
        case LogLevel::error: return "ERROR";
    }
    return "?";
}

std::string timestamp_utc() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace

Logger & Logger::instance() {
    static Logger logger;
    return logger;
}

LogLevel Logger::parse_level(const std::string & name) {
    if (name == "debug") return LogLevel::debug;
    if (name == "info")  return LogLevel::info;
    if (name == "warn")  return LogLevel::warn;
    if (name == "error") return LogLevel::error;
    throw config_error("unknown log level: " + name);
}

void Logger::attach_file(const std::string & path) {
    std::lock_guard<std::mutex> lock(mu_);
    file_.close();
    file_.clear();
    file_.open(path, std::ios::app);
}

void Logger::detach_file() {
    std::lock_guard<std::mutex> lock(mu_);
    file_.close();
}

void Logger::log(LogLevel level, const std::string & msg) {
    if (level < level_) {
        return;
    }
    const std::string line = timestamp_utc() + " " + level_name(level) + " " + msg;
    std::lock_guard<std::mutex> lock(mu_);
    std::fprintf(stderr, "%s\n", line.c_str());
    if (file_.is_open()) {
        file_ << line << '\n';
        file_.flush();
    }
}

void log_debug(const std::string & msg) { Logger::instance().log(LogLevel::debug, msg); }
void log_info(const std::string & msg)  { Logger::instance().log(LogLevel::info, msg); }
void log_warn(const std::string & msg)  { Logger::instance().log(LogLevel::warn, msg); }
void log_error(const std::string & msg) { Logger::instance().log(LogLevel::error, msg); }

} // namespace itersel
