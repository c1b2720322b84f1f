#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace mctsgen {

enum class errc {
    ok = 0,
    config,
    invalid_args,
    malformed_tree,
    empty_tree,
    duplicate_exhausted,
    backend_unavailable,
    empty_completion,
    search_failed,
    checkpoint_corrupt,
    empty_dataset,
    missing_difficulty,
    sandbox_unavailable,
    io,
    internal,
};

const char* errc_name(errc code);

/// All library failures surface as this exception; the C API maps code()
/// onto mcg_status values at the boundary.
class error : public std::runtime_error {
public:
    error(errc code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& message) {
    throw error(code, message);
}

} // namespace mctsgen
