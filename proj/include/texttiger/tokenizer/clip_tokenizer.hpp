#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "texttiger/tokenizer/budget.hpp"
#include "texttiger/tokenizer/vocabulary.hpp"

namespace texttiger::tokenizer {

/// The CLIP cleaning pipeline: per-character text fixes, HTML entity
/// unescaping (applied twice), whitespace collapsing, lowercasing.
std::string normalize_text(std::string_view text);

/// Splits normalized text into pre-tokens: special tokens, the contractions
/// 's 't 're 've 'm 'll 'd, letter runs, single digits, and runs of anything else.
std::vector<std::string> pre_tokenize(std::string_view normalized);

/// Content token ids; no start/end tokens are added and nothing is truncated.
std::vector<TokenId> encode(std::string_view text, const Vocabulary& vocab);

TokenCount count_tokens(std::string_view text, const Vocabulary& vocab);

/// Inverse of encode up to normalization; "</w>" becomes a space.
std::string decode(const std::vector<TokenId>& ids, const Vocabulary& vocab);

}  // namespace texttiger::tokenizer
