#pragma once

#include <array>

namespace texttiger::tokenizer::tables {

struct CodepointRange {
    char32_t lo;
    char32_t hi;
};

struct CodepointMapping {
    char32_t codepoint;
    const char* utf8;
};

struct NamedEntity {
    const char* name;  // without the leading '&'; may include the trailing ';'
    const char* utf8;
};

// Sorted by `lo` / `codepoint` / `name` (byte order).
extern const std::array<CodepointRange, 684> kLetters;
extern const std::array<CodepointRange, 146> kNumbers;
extern const std::array<CodepointRange, 10> kRegexWhitespace;
extern const std::array<CodepointRange, 10> kSplitWhitespace;
extern const std::array<CodepointMapping, 1393> kLowercase;
extern const std::array<CodepointMapping, 1447> kTextFixes;
extern const std::array<NamedEntity, 2231> kHtmlEntities;

}  // namespace texttiger::tokenizer::tables
