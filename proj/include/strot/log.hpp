#pragma once

#include <cstdlib>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>

namespace strot::log {

enum class Level : int { error = 0, warn = 1, info = 2, debug = 3 };

inline Level& threshold() {
    static Level lvl = [] {
        const char* env = std::getenv("STROT_LOG");
        if (!env) return Level::warn;
        std::string s(env);
        if (s == "error") return Level::error;
        if (s == "warn") return Level::warn;
        if (s == "info") return Level::info;
        if (s == "debug") return Level::debug;
        return Level::warn;
    }();
    return lvl;
}

inline void set_threshold(Level lvl) { threshold() = lvl; }

inline void emit(Level lvl, const std::string& msg) {
    if (static_cast<int>(lvl) > static_cast<int>(threshold())) return;
    static std::mutex mtx;
    static const char* names[] = {"error", "warn", "info", "debug"};
    std::lock_guard<std::mutex> lock(mtx);
    std::cerr << "[strot][" << names[static_cast<int>(lvl)] << "] " << msg << "\n";
}

template <typename... Args>
void write(Level lvl, Args&&... args) {
    if (static_cast<int>(lvl) > static_cast<int>(threshold())) return;
    std::ostringstream oss;
    (oss << ... << args);
    emit(lvl, oss.str());
}

template <typename... Args> void error(Args&&... a) { write(Level::error, std::forward<Args>(a)...); }
template <typename... Args> void warn(Args&&... a) { write(Level::warn, std::forward<Args>(a)...); }
template <typename... Args> void info(Args&&... a) { write(Level::info, std::forward<Args>(a)...); }
template <typename... Args> void debug(Args&&... a) { write(Level::debug, std::forward<Args>(a)...); }

}  // namespace strot::log
