#include "texttiger/tokenizer/unicode.hpp"

#include <algorithm>

#include "unicode_tables.hpp"

namespace texttiger::unicode {

namespace {

using tokenizer::tables::CodepointMapping;
using tokenizer::tables::CodepointRange;

constexpr char32_t kReplacement = 0xFFFD;
constexpr char32_t kCapitalSigma = 0x03A3;
constexpr char32_t kFinalSigma = 0x03C2;

template <std::size_t N>
bool in_ranges(const std::array<CodepointRange, N>& ranges, char32_t c) noexcept {
    auto it = std::upper_bound(ranges.begin(), ranges.end(), c,
                               [](char32_t v, const CodepointRange& r) { return v < r.lo; });
    return it != ranges.begin() && c <= std::prev(it)->hi;
}

const CodepointMapping* find_lower(char32_t c) noexcept {
    const auto& table = tokenizer::tables::kLowercase;
    auto it = std::lower_bound(table.begin(), table.end(), c,
                               [](const CodepointMapping& m, char32_t v) { return m.codepoint < v; });
    return it != table.end() && it->codepoint == c ? &*it : nullptr;
}

// Approximates Unicode Case_Ignorable for the final-sigma context.
bool is_case_ignorable(char32_t c) noexcept {
    return c == U'\'' || c == U'.' || c == U':' || c == 0x00B7 || c == 0x2019 ||
           (c >= 0x0300 && c <= 0x036F);
}

bool is_final_sigma(const std::u32string& text, std::size_t pos) {
    std::size_t i = pos;
    bool cased_before = false;
    while (i > 0) {
        const char32_t c = text[--i];
        if (is_case_ignorable(c)) continue;
        cased_before = is_letter(c);
        break;
    }
    if (!cased_before) return false;
    for (std::size_t j = pos + 1; j < text.size(); ++j) {
        const char32_t c = text[j];
        if (is_case_ignorable(c)) continue;
        return !is_letter(c);
    }
    return true;
}

}  // namespace

std::u32string decode_utf8(std::string_view text) {
    std::u32string out;
    out.reserve(text.size());
    const auto* s = reinterpret_cast<const unsigned char*>(text.data());
    const std::size_t n = text.size();
    std::size_t i = 0;
    while (i < n) {
        const unsigned char b0 = s[i];
        if (b0 < 0x80) {
            out.push_back(b0);
            ++i;
            continue;
        }
        std::size_t len = 0;
        char32_t cp = 0;
        char32_t min = 0;
        if ((b0 & 0xE0) == 0xC0) {
            len = 2, cp = b0 & 0x1F, min = 0x80;
        } else if ((b0 & 0xF0) == 0xE0) {
            len = 3, cp = b0 & 0x0F, min = 0x800;
        } else if ((b0 & 0xF8) == 0xF0) {
            len = 4, cp = b0 & 0x07, min = 0x10000;
        }
        bool ok = len > 0 && i + len <= n;
        for (std::size_t k = 1; ok && k < len; ++k) {
            if ((s[i + k] & 0xC0) != 0x80) ok = false;
            cp = (cp << 6) | (s[i + k] & 0x3F);
        }
        if (ok && (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))) ok = false;
        if (ok) {
            out.push_back(cp);
            i += len;
        } else {
            out.push_back(kReplacement);
            ++i;
        }
    }
    return out;
}

void append_utf8(std::string& out, char32_t c) {
    if (c < 0x80) {
        out.push_back(static_cast<char>(c));
    } else if (c < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (c >> 6)));
        out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    } else if (c < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (c >> 12)));
        out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (c >> 18)));
        out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    }
}

std::string encode_utf8(std::u32string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char32_t c : text) append_utf8(out, c);
    return out;
}

bool is_letter(char32_t c) noexcept { return in_ranges(tokenizer::tables::kLetters, c); }
bool is_number(char32_t c) noexcept { return in_ranges(tokenizer::tables::kNumbers, c); }
bool is_regex_space(char32_t c) noexcept { return in_ranges(tokenizer::tables::kRegexWhitespace, c); }
bool is_split_space(char32_t c) noexcept { return in_ranges(tokenizer::tables::kSplitWhitespace, c); }

std::string to_lower(std::string_view text) {
    const auto cps = decode_utf8(text);
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < cps.size(); ++i) {
        const char32_t c = cps[i];
        if (c < 0x80) {
            out.push_back(static_cast<char>(c >= 'A' && c <= 'Z' ? c + ('a' - 'A') : c));
        } else if (c == kCapitalSigma && is_final_sigma(cps, i)) {
            append_utf8(out, kFinalSigma);
        } else if (const auto* m = find_lower(c)) {
            out += m->utf8;
        } else {
            append_utf8(out, c);
        }
    }
    return out;
}

}  // namespace texttiger::unicode
