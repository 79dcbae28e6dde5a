#pragma once

#include <string>
#include <string_view>

namespace texttiger::unicode {

/// Decodes UTF-8; each invalid byte becomes U+FFFD.
std::u32string decode_utf8(std::string_view text);
void append_utf8(std::string& out, char32_t codepoint);
std::string encode_utf8(std::u32string_view text);

bool is_letter(char32_t c) noexcept;  // \p{L}
bool is_number(char32_t c) noexcept;  // \p{N}
bool is_regex_space(char32_t c) noexcept;  // \s as used by the pre-tokenizer
bool is_split_space(char32_t c) noexcept;  // str.isspace()

/// Full lowercase mapping, including the contextual final-sigma rule.
std::string to_lower(std::string_view text);

}  // namespace texttiger::unicode
