#include "mctsgen/text.hpp"

#include <algorithm>
#include <cctype>

namespace mctsgen::text {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool is_ascii_punct(char c) {
    unsigned char u = static_cast<unsigned char>(c);
    return u < 128 && std::ispunct(u) != 0;
}

char lower(char c) {
    return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

} // namespace

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && is_space(s[b])) ++b;
    while (e > b && is_space(s[e - 1])) --e;
    return std::string(s.substr(b, e - b));
}

std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), lower);
    return out;
}

bool contains_ci(std::string_view haystack, std::string_view needle) {
    if (needle.empty()) return true;
    return to_lower(haystack).find(to_lower(needle)) != std::string::npos;
}

std::string normalize_step(std::string_view step) {
    std::string out;
    out.reserve(step.size());
    bool pending_space = false;
    for (char c : step) {
        if (is_space(c)) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        out.push_back(lower(c));
    }
    while (!out.empty() && (is_ascii_punct(out.back()) || out.back() == ' ')) out.pop_back();
    return out;
}

std::string collapse_blank_lines(std::string_view s) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == '\n') {
            lines.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    auto is_blank = [](std::string_view line) {
        return std::all_of(line.begin(), line.end(), is_space);
    };

    std::string out;
    bool emitted_content = false;
    int pending_blanks = 0;
    for (std::string_view line : lines) {
        if (is_blank(line)) {
            ++pending_blanks;
            continue;
        }
        if (emitted_content) {
            out.push_back('\n');
            if (pending_blanks > 0) out.push_back('\n');
        }
        pending_blanks = 0;
        out.append(line);
        emitted_content = true;
    }
    return out;
}

std::string strip_code_fences(std::string_view s) {
    std::string out(s);
    for (;;) {
        std::size_t open = out.find("```");
        if (open == std::string::npos) break;
        std::size_t close = out.find("```", open + 3);
        if (close == std::string::npos) {
            out.erase(open);
            break;
        }
        out.erase(open, close + 3 - open);
    }
    return collapse_blank_lines(out);
}

FencedBlock first_fenced_block(std::string_view s) {
    FencedBlock block;
    std::size_t open = s.find("```");
    if (open == std::string::npos) return block;

    std::size_t line_end = s.find('\n', open + 3);
    std::string lang;
    std::size_t body_begin;
    if (line_end == std::string::npos) {
        // ``` at the very end of the text: no body.
        block.found = true;
        return block;
    }
    lang = trim(s.substr(open + 3, line_end - (open + 3)));
    body_begin = line_end + 1;

    std::size_t close = s.find("```", body_begin);
    std::string_view body = (close == std::string::npos)
                                ? s.substr(body_begin)
                                : s.substr(body_begin, close - body_begin);
    while (!body.empty() && (body.back() == '\n' || body.back() == '\r')) body.remove_suffix(1);

    block.found = true;
    block.body = std::string(body);
    block.lang = lang;
    return block;
}

std::vector<std::string> word_tokens(std::string_view s) {
    std::vector<std::string> tokens;
    std::string current;
    for (char c : s) {
        if (is_space(c)) {
            if (!current.empty()) {
                tokens.push_back(current);
                current.clear();
            }
            continue;
        }
        if (is_ascii_punct(c)) continue;
        current.push_back(lower(c));
    }
    if (!current.empty()) tokens.push_back(current);
    return tokens;
}

std::size_t token_count(std::string_view s) {
    std::size_t count = 0;
    bool in_token = false;
    for (char c : s) {
        if (is_space(c)) {
            in_token = false;
        } else if (!in_token) {
            in_token = true;
            ++count;
        }
    }
    return count;
}

} // namespace mctsgen::text
