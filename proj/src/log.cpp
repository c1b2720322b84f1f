#include "mctsgen/log.hpp"

#include "mctsgen/errors.hpp"

#include <atomic>
#include <cstdio>
#include <mutex>

namespace mctsgen::logging {

namespace {

std::atomic<int> g_level{static_cast<int>(level::info)};
std::atomic<unsigned long> g_warnings{0};
std::mutex g_write_mutex;

const char* level_tag(level lvl) {
    switch (lvl) {
    case level::debug: return "debug";
    case level::info: return "info";
    case level::warn: return "warn";
    case level::error: return "error";
    case level::off: return "off";
    }
    return "?";
}

} // namespace

void set_level(level lvl) { g_level.store(static_cast<int>(lvl)); }

level get_level() { return static_cast<level>(g_level.load()); }

level parse_level(std::string_view name) {
    if (name == "debug") return level::debug;
    if (name == "info") return level::info;
    if (name == "warn") return level::warn;
    if (name == "error") return level::error;
    if (name == "off") return level::off;
    raise(errc::config, fmt::format("unknown log level '{}'", name));
}

void write(level lvl, std::string_view message) {
    if (lvl >= level::warn && lvl != level::off) g_warnings.fetch_add(1);
    std::lock_guard<std::mutex> lock(g_write_mutex);
    std::fprintf(stderr, "[%s] %.*s\n", level_tag(lvl), static_cast<int>(message.size()),
                 message.data());
}

unsigned long warning_count() { return g_warnings.load(); }

} // namespace mctsgen::logging
