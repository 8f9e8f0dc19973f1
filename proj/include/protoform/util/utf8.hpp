#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace protoform::utf8 {

// Decodes a UTF-8 string into codepoints. Invalid bytes decode as U+FFFD.
std::vector<char32_t> decode(std::string_view s);

// Encodes one codepoint / a codepoint sequence back to UTF-8.
std::string encode(char32_t cp);
std::string encode(const std::vector<char32_t>& cps);

// Number of codepoints in s.
std::size_t length(std::string_view s);

bool is_superscript_digit(char32_t cp);
// Combining marks (attach to the preceding base character).
bool is_combining_mark(char32_t cp);
// Spacing modifier letters and phonetic superscripts (ʰ ʷ ʲ ː ˞ ...).
bool is_modifier_letter(char32_t cp);
bool is_whitespace(char32_t cp);

}  // namespace protoform::utf8
