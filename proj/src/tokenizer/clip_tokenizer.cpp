#include "texttiger/tokenizer/clip_tokenizer.hpp"

#include <algorithm>
#include <cstring>
#include <limits>

#include "texttiger/tokenizer/unicode.hpp"
#include "unicode_tables.hpp"

namespace texttiger::tokenizer {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

const tables::CodepointMapping* find_fix(char32_t c) noexcept {
    const auto& table = tables::kTextFixes;
    auto it = std::lower_bound(table.begin(), table.end(), c,
                               [](const tables::CodepointMapping& m, char32_t v) { return m.codepoint < v; });
    return it != table.end() && it->codepoint == c ? &*it : nullptr;
}

const char* find_entity(std::string_view name) noexcept {
    const auto& table = tables::kHtmlEntities;
    auto it = std::lower_bound(table.begin(), table.end(), name,
                               [](const tables::NamedEntity& e, std::string_view v) { return e.name < v; });
    return it != table.end() && it->name == name ? it->utf8 : nullptr;
}

std::u32string apply_text_fixes(std::u32string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char32_t c : text) {
        if (const auto* fix = find_fix(c)) {
            out += fix->utf8;
        } else {
            unicode::append_utf8(out, c);
        }
    }
    return unicode::decode_utf8(out);
}

// Replacements for numeric references that name C1 controls or NUL/CR.
std::optional<char32_t> invalid_charref(unsigned long n) {
    static constexpr char32_t kC1[32] = {
        0x20AC, 0x81,   0x201A, 0x0192, 0x201E, 0x2026, 0x2020, 0x2021, 0x02C6, 0x2030, 0x0160,
        0x2039, 0x0152, 0x8D,   0x017D, 0x8F,   0x90,   0x2018, 0x2019, 0x201C, 0x201D, 0x2022,
        0x2013, 0x2014, 0x02DC, 0x2122, 0x0161, 0x203A, 0x0153, 0x9D,   0x017E, 0x0178};
    if (n == 0) return kReplacement;
    if (n == 0x0D) return U'\r';
    if (n >= 0x80 && n <= 0x9F) return kC1[n - 0x80];
    return std::nullopt;
}

bool is_disallowed_codepoint(unsigned long n) {
    return (n >= 0x1 && n <= 0x8) || n == 0xB || (n >= 0xE && n <= 0x1F) || (n >= 0x7F && n <= 0x9F) ||
           (n >= 0xFDD0 && n <= 0xFDEF) || (n & 0xFFFE) == 0xFFFE;
}

bool is_ascii_digit(char32_t c) { return c >= U'0' && c <= U'9'; }
bool is_ascii_hex(char32_t c) {
    return is_ascii_digit(c) || (c >= U'a' && c <= U'f') || (c >= U'A' && c <= U'F');
}

// HTML5 character reference decoding with the recovery rules browsers use:
// numeric references without ';', legacy names without ';', longest-prefix names.
std::u32string html_unescape(const std::u32string& text) {
    if (text.find(U'&') == std::u32string::npos) return text;
    std::u32string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] != U'&' || i + 1 >= text.size()) {
            out.push_back(text[i++]);
            continue;
        }
        const std::size_t start = i + 1;
        if (text[start] == U'#') {
            std::size_t j = start + 1;
            const bool hex = j < text.size() && (text[j] == U'x' || text[j] == U'X');
            if (hex) ++j;
            const std::size_t digits_begin = j;
            unsigned long value = 0;
            bool overflow = false;
            while (j < text.size() && (hex ? is_ascii_hex(text[j]) : is_ascii_digit(text[j]))) {
                const char32_t c = text[j];
                const unsigned digit = is_ascii_digit(c) ? c - U'0' : (c | 0x20) - U'a' + 10;
                if (value > 0x10FFFF) {
                    overflow = true;
                } else {
                    value = value * (hex ? 16 : 10) + digit;
                }
                ++j;
            }
            if (j == digits_begin) {
                out.push_back(text[i++]);
                continue;
            }
            if (j < text.size() && text[j] == U';') ++j;
            if (!overflow) {
                if (auto r = invalid_charref(value)) {
                    out.push_back(*r);
                } else if ((value >= 0xD800 && value <= 0xDFFF) || value > 0x10FFFF) {
                    out.push_back(kReplacement);
                } else if (!is_disallowed_codepoint(value)) {
                    out.push_back(static_cast<char32_t>(value));
                }
            } else {
                out.push_back(kReplacement);
            }
            i = j;
            continue;
        }

        // Named: [^\t\n\f <&#;]{1,32};?
        std::size_t j = start;
        while (j < text.size() && j - start < 32) {
            const char32_t c = text[j];
            if (c == U'\t' || c == U'\n' || c == U'\f' || c == U' ' || c == U'<' || c == U'&' || c == U'#' ||
                c == U';') {
                break;
            }
            ++j;
        }
        if (j == start) {
            out.push_back(text[i++]);
            continue;
        }
        if (j < text.size() && text[j] == U';') ++j;
        const std::u32string_view name(text.data() + start, j - start);
        const std::string name_utf8 = unicode::encode_utf8(name);
        if (const char* value = find_entity(name_utf8)) {
            out += unicode::decode_utf8(value);
        } else {
            bool matched = false;
            for (std::size_t len = name.size() - 1; len > 1; --len) {
                if (const char* value = find_entity(unicode::encode_utf8(name.substr(0, len)))) {
                    out += unicode::decode_utf8(value);
                    out += name.substr(len);
                    matched = true;
                    break;
                }
            }
            if (!matched) {
                out.push_back(U'&');
                out += name;
            }
        }
        i = j;
    }
    return out;
}

std::u32string collapse_whitespace(const std::u32string& text) {
    std::u32string out;
    out.reserve(text.size());
    bool pending_space = false;
    for (char32_t c : text) {
        if (unicode::is_split_space(c)) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) out.push_back(U' ');
        pending_space = false;
        out.push_back(c);
    }
    return out;
}

bool starts_with_at(const std::u32string& text, std::size_t pos, std::u32string_view needle) {
    return text.size() - pos >= needle.size() && std::u32string_view(text).substr(pos, needle.size()) == needle;
}

// Ranked BPE over one pre-token; returns the symbols, the last one carrying "</w>".
std::vector<std::string> bpe_word(const std::string& proxied, const Vocabulary& vocab) {
    std::vector<std::string> word;
    const auto cps = unicode::decode_utf8(proxied);
    word.reserve(cps.size());
    for (char32_t c : cps) {
        std::string s;
        unicode::append_utf8(s, c);
        word.push_back(std::move(s));
    }
    if (word.empty()) return word;
    word.back() += kEndOfWord;

    while (word.size() > 1) {
        std::size_t best_rank = std::numeric_limits<std::size_t>::max();
        std::size_t best_pos = 0;
        for (std::size_t i = 0; i + 1 < word.size(); ++i) {
            if (auto rank = vocab.merge_rank(word[i], word[i + 1]); rank && *rank < best_rank) {
                best_rank = *rank;
                best_pos = i;
            }
        }
        if (best_rank == std::numeric_limits<std::size_t>::max()) break;

        // Merge every non-overlapping occurrence of the winning pair, left to right.
        const std::string first = word[best_pos];
        const std::string second = word[best_pos + 1];
        std::vector<std::string> merged;
        merged.reserve(word.size());
        for (std::size_t i = 0; i < word.size();) {
            if (i + 1 < word.size() && word[i] == first && word[i + 1] == second) {
                merged.push_back(first + second);
                i += 2;
            } else {
                merged.push_back(std::move(word[i]));
                ++i;
            }
        }
        word = std::move(merged);
    }
    return word;
}

}  // namespace

std::string normalize_text(std::string_view text) {
    auto cps = apply_text_fixes(unicode::decode_utf8(text));
    cps = html_unescape(html_unescape(cps));
    return unicode::to_lower(unicode::encode_utf8(collapse_whitespace(cps)));
}

std::vector<std::string> pre_tokenize(std::string_view normalized) {
    static constexpr std::u32string_view kSpecials[] = {U"<|startoftext|>", U"<|endoftext|>"};
    static constexpr std::u32string_view kContractions[] = {U"'s", U"'t", U"'re", U"'ve", U"'m", U"'ll", U"'d"};

    const auto text = unicode::decode_utf8(normalized);
    std::vector<std::string> pieces;
    std::size_t i = 0;
    auto emit = [&](std::size_t begin, std::size_t end) {
        pieces.push_back(unicode::encode_utf8(std::u32string_view(text).substr(begin, end - begin)));
        i = end;
    };
    while (i < text.size()) {
        const std::size_t begin = i;
        if (auto it = std::find_if(std::begin(kSpecials), std::end(kSpecials),
                                   [&](auto s) { return starts_with_at(text, i, s); });
            it != std::end(kSpecials)) {
            emit(begin, i + it->size());
            continue;
        }
        if (auto it = std::find_if(std::begin(kContractions), std::end(kContractions),
                                   [&](auto s) { return starts_with_at(text, i, s); });
            it != std::end(kContractions)) {
            emit(begin, i + it->size());
            continue;
        }
        const char32_t c = text[i];
        std::size_t end = i;
        if (unicode::is_letter(c)) {
            while (end < text.size() && unicode::is_letter(text[end])) ++end;
            emit(begin, end);
        } else if (unicode::is_number(c)) {
            emit(begin, i + 1);
        } else if (!unicode::is_regex_space(c)) {
            auto is_other = [](char32_t x) {
                return !unicode::is_regex_space(x) && !unicode::is_letter(x) && !unicode::is_number(x);
            };
            while (end < text.size() && is_other(text[end])) ++end;
            emit(begin, end);
        } else {
            ++i;
        }
    }
    return pieces;
}

std::vector<TokenId> encode(std::string_view text, const Vocabulary& vocab) {
    std::vector<TokenId> ids;
    for (const auto& piece : pre_tokenize(normalize_text(text))) {
        if (piece == kStartOfText || piece == kEndOfText) {
            if (auto id = vocab.id_of(piece)) ids.push_back(*id);
            continue;
        }
        for (const auto& symbol : bpe_word(vocab.byte_map().encode(piece), vocab)) {
            // Load-time validation guarantees every base and merged symbol has an id.
            ids.push_back(*vocab.id_of(symbol));
        }
    }
    return ids;
}

TokenCount count_tokens(std::string_view text, const Vocabulary& vocab) {
    return TokenCount{encode(text, vocab).size()};
}

std::string decode(const std::vector<TokenId>& ids, const Vocabulary& vocab) {
    std::string proxied;
    for (TokenId id : ids) {
        if (const auto* token = vocab.token_of(id)) proxied += *token;
    }
    std::string bytes;
    bytes.reserve(proxied.size());
    for (char32_t c : unicode::decode_utf8(proxied)) {
        std::string p;
        unicode::append_utf8(p, c);
        if (auto b = vocab.byte_map().byte_of(p)) bytes.push_back(static_cast<char>(*b));
    }
    std::string out;
    out.reserve(bytes.size());
    for (std::size_t pos = 0; pos < bytes.size();) {
        if (bytes.compare(pos, kEndOfWord.size(), kEndOfWord) == 0) {
            out.push_back(' ');
            pos += kEndOfWord.size();
        } else {
            out.push_back(bytes[pos++]);
        }
    }
    return out;
}

}  // namespace texttiger::tokenizer
