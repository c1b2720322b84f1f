#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace mctsgen::text {

std::string trim(std::string_view s);
std::string to_lower(std::string_view s);
bool contains_ci(std::string_view haystack, std::string_view needle);

/// Canonical form used for sibling-step duplicate detection: lowercase,
/// whitespace runs collapsed to single spaces, trailing punctuation stripped.
std::string normalize_step(std::string_view step);

/// Removes every triple-backtick fenced block (any language tag). A dangling
/// opening fence swallows the rest of the text. Blank-line runs left behind
/// are collapsed to one and leading/trailing blank lines dropped. Idempotent;
/// the result never contains a ``` marker.
std::string strip_code_fences(std::string_view s);

std::string collapse_blank_lines(std::string_view s);

struct FencedBlock {
    bool found = false;
    std::string body;
    std::string lang;
};

/// First ```-fenced block of `s`; an unclosed fence extends to the end.
FencedBlock first_fenced_block(std::string_view s);

/// Lowercased words with ASCII punctuation characters removed; empty tokens
/// dropped. The token stream n-gram similarity is computed over.
std::vector<std::string> word_tokens(std::string_view s);

/// Whitespace-separated token count (length statistics).
std::size_t token_count(std::string_view s);

} // namespace mctsgen::text
