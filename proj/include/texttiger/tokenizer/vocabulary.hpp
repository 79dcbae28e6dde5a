#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace texttiger::tokenizer {

using TokenId = std::int32_t;

inline constexpr std::string_view kEndOfWord = "</w>";
inline constexpr std::string_view kStartOfText = "<|startoftext|>";
inline constexpr std::string_view kEndOfText = "<|endoftext|>";

struct MergeRule {
    std::string left;
    std::string right;
};

/// Reversible mapping from raw bytes to printable code points, so that every
/// byte string has a whitespace-free textual form the merge table can act on.
class ByteMap {
public:
    ByteMap();

    /// UTF-8 encoding of the proxy character for byte `b`.
    const std::string& proxy(std::uint8_t b) const { return forward_[b]; }
    std::optional<std::uint8_t> byte_of(std::string_view proxy) const;

    /// Concatenated proxies for every byte of `raw`.
    std::string encode(std::string_view raw) const;

private:
    std::array<std::string, 256> forward_;
    std::unordered_map<std::string, std::uint8_t> backward_;
};

/// Token encoder plus ranked merge table. Immutable once loaded.
class Vocabulary {
public:
    /// Reads a token->id JSON object and a merges file (one "left right" pair
    /// per line, optional leading "#version" header). Merge rank is file order.
    /// An empty vocabulary source derives ids the way the CLIP release does:
    /// byte proxies, byte proxies + "</w>", one token per merge, then the two
    /// special tokens. Throws ParseError on malformed input.
    static Vocabulary load(std::istream& vocab_json, std::istream& merges);
    static Vocabulary load(std::string_view vocab_json, std::string_view merges);
    static Vocabulary load_files(const std::filesystem::path& vocab_json,
                                 const std::filesystem::path& merges);
    /// vocab.json + merges.txt inside `dir`.
    static Vocabulary load_directory(const std::filesystem::path& dir);

    std::optional<TokenId> id_of(std::string_view token) const;
    const std::string* token_of(TokenId id) const;
    /// Rank of merging (left, right), or nullopt when the pair never merges.
    std::optional<std::size_t> merge_rank(std::string_view left, std::string_view right) const;

    std::size_t size() const noexcept { return encoder_.size(); }
    const std::vector<MergeRule>& merges() const noexcept { return merges_; }
    const ByteMap& byte_map() const noexcept { return byte_map_; }

private:
    Vocabulary() = default;
    void index_merges();

    std::unordered_map<std::string, TokenId> encoder_;
    std::unordered_map<TokenId, std::string> decoder_;
    std::vector<MergeRule> merges_;
    std::unordered_map<std::string, std::size_t> merge_ranks_;  // key: left + ' ' + right
    ByteMap byte_map_;
};

}  // namespace texttiger::tokenizer
