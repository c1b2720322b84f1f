#pragma once

#include <fmt/core.h>

#include <string>
#include <string_view>

namespace mctsgen::logging {

enum class level { debug = 0, info = 1, warn = 2, error = 3, off = 4 };

void set_level(level lvl);
level get_level();
level parse_level(std::string_view name); // throws errc::config on unknown name

/// Writes one "[lvl] message" line to stderr; serialized across threads.
void write(level lvl, std::string_view message);

template <typename... Args>
void debug(fmt::format_string<Args...> f, Args&&... args) {
    if (get_level() <= level::debug) write(level::debug, fmt::format(f, std::forward<Args>(args)...));
}

template <typename... Args>
void info(fmt::format_string<Args...> f, Args&&... args) {
    if (get_level() <= level::info) write(level::info, fmt::format(f, std::forward<Args>(args)...));
}

template <typename... Args>
void warn(fmt::format_string<Args...> f, Args&&... args) {
    if (get_level() <= level::warn) write(level::warn, fmt::format(f, std::forward<Args>(args)...));
}

template <typename... Args>
void error(fmt::format_string<Args...> f, Args&&... args) {
    if (get_level() <= level::error) write(level::error, fmt::format(f, std::forward<Args>(args)...));
}

/// Number of warn-or-worse lines emitted since process start (tests use this
/// to assert that fallback paths actually warn).
unsigned long warning_count();

} // namespace mctsgen::logging
