#include "texttiger/tokenizer/vocabulary.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "texttiger/common/error.hpp"
#include "texttiger/tokenizer/unicode.hpp"

namespace texttiger::tokenizer {

namespace {

std::string read_all(std::istream& in) {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

bool is_blank(std::string_view s) {
    return s.find_first_not_of(" \t\r\n") == std::string_view::npos;
}

std::vector<MergeRule> parse_merges(std::string_view text) {
    std::vector<MergeRule> merges;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (number == 1 && line.starts_with("#")) continue;
        if (is_blank(line)) continue;
        std::istringstream fields(line);
        MergeRule rule;
        std::string extra;
        if (!(fields >> rule.left >> rule.right) || (fields >> extra)) {
            throw ParseError("merge rule must have exactly two symbols: '" + line + "'", number);
        }
        merges.push_back(std::move(rule));
    }
    return merges;
}

}  // namespace

ByteMap::ByteMap() {
    // Printable Latin-1 bytes map to themselves; the rest are shifted to U+0100+.
    std::array<bool, 256> printable{};
    for (int b = '!'; b <= '~'; ++b) printable[b] = true;
    for (int b = 0xA1; b <= 0xAC; ++b) printable[b] = true;
    for (int b = 0xAE; b <= 0xFF; ++b) printable[b] = true;
    char32_t shifted = 256;
    for (int b = 0; b < 256; ++b) {
        const char32_t cp = printable[b] ? static_cast<char32_t>(b) : shifted++;
        std::string utf8;
        unicode::append_utf8(utf8, cp);
        forward_[b] = utf8;
        backward_.emplace(std::move(utf8), static_cast<std::uint8_t>(b));
    }
}

std::optional<std::uint8_t> ByteMap::byte_of(std::string_view proxy) const {
    auto it = backward_.find(std::string(proxy));
    if (it == backward_.end()) return std::nullopt;
    return it->second;
}

std::string ByteMap::encode(std::string_view raw) const {
    std::string out;
    out.reserve(raw.size() * 2);
    for (unsigned char b : raw) out += forward_[b];
    return out;
}

Vocabulary Vocabulary::load(std::string_view vocab_json, std::string_view merges_text) {
    Vocabulary vocab;
    vocab.merges_ = parse_merges(merges_text);

    // Every merge must combine symbols that already exist: base bytes (with or
    // without the end-of-word marker) or the output of an earlier merge.
    std::unordered_set<std::string> symbols;
    for (int b = 0; b < 256; ++b) {
        const auto& p = vocab.byte_map_.proxy(static_cast<std::uint8_t>(b));
        symbols.insert(p);
        symbols.insert(p + std::string(kEndOfWord));
    }
    {
        // Recompute line numbers for diagnostics: header and blank lines are skipped.
        std::istringstream in{std::string(merges_text)};
        std::string line;
        std::size_t number = 0;
        std::size_t index = 0;
        while (std::getline(in, line) && index < vocab.merges_.size()) {
            ++number;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if ((number == 1 && line.starts_with("#")) || is_blank(line)) continue;
            const auto& rule = vocab.merges_[index++];
            if (!symbols.contains(rule.left) || !symbols.contains(rule.right)) {
                throw ParseError("merge '" + rule.left + " " + rule.right +
                                     "' uses a symbol no earlier merge produces", number);
            }
            symbols.insert(rule.left + rule.right);
        }
    }

    if (is_blank(vocab_json)) {
        TokenId next = 0;
        auto add = [&](const std::string& token) {
            if (vocab.encoder_.emplace(token, next).second) ++next;
        };
        // Base tokens are ordered by proxy code point: printable bytes first, then the shifted ones.
        std::vector<std::string> proxies;
        for (int b = 0; b < 256; ++b) proxies.push_back(vocab.byte_map_.proxy(static_cast<std::uint8_t>(b)));
        std::sort(proxies.begin(), proxies.end(), [](const std::string& a, const std::string& b) {
            return unicode::decode_utf8(a) < unicode::decode_utf8(b);
        });
        for (const auto& p : proxies) add(p);
        for (const auto& p : proxies) add(p + std::string(kEndOfWord));
        for (const auto& rule : vocab.merges_) add(rule.left + rule.right);
        add(std::string(kStartOfText));
        add(std::string(kEndOfText));
    } else {
        std::unordered_set<std::string> seen;
        std::optional<std::string> duplicate;
        nlohmann::json::parser_callback_t on_event =
            [&](int depth, nlohmann::json::parse_event_t event, nlohmann::json& parsed) {
                if (event == nlohmann::json::parse_event_t::key && depth == 1 && !duplicate) {
                    auto key = parsed.get<std::string>();
                    if (!seen.insert(key).second) duplicate = std::move(key);
                }
                return true;
            };
        nlohmann::json root;
        try {
            root = nlohmann::json::parse(vocab_json, on_event);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(std::string("vocabulary is not valid JSON: ") + e.what(), 0);
        }
        if (duplicate) throw ParseError("duplicate token in vocabulary: '" + *duplicate + "'", 0);
        if (!root.is_object()) throw ParseError("vocabulary must be a JSON object", 0);
        std::unordered_set<TokenId> ids;
        for (const auto& [token, id] : root.items()) {
            if (!id.is_number_integer()) throw ParseError("non-integer id for token '" + token + "'", 0);
            const auto value = id.get<TokenId>();
            if (!ids.insert(value).second) {
                throw ParseError("duplicate id " + std::to_string(value) + " for token '" + token + "'", 0);
            }
            vocab.encoder_.emplace(token, value);
        }
        for (int b = 0; b < 256; ++b) {
            const auto& p = vocab.byte_map_.proxy(static_cast<std::uint8_t>(b));
            if (!vocab.encoder_.contains(p) || !vocab.encoder_.contains(p + std::string(kEndOfWord))) {
                throw ParseError("vocabulary lacks the base token for byte " + std::to_string(b), 0);
            }
        }
        for (const auto& rule : vocab.merges_) {
            if (!vocab.encoder_.contains(rule.left + rule.right)) {
                throw ParseError("merge result '" + rule.left + rule.right + "' has no id", 0);
            }
        }
    }

    for (const auto& [token, id] : vocab.encoder_) vocab.decoder_.emplace(id, token);
    vocab.index_merges();
    return vocab;
}

Vocabulary Vocabulary::load(std::istream& vocab_json, std::istream& merges) {
    const auto v = read_all(vocab_json);
    const auto m = read_all(merges);
    return load(std::string_view(v), std::string_view(m));
}

Vocabulary Vocabulary::load_files(const std::filesystem::path& vocab_json,
                                  const std::filesystem::path& merges) {
    std::ifstream v(vocab_json, std::ios::binary);
    if (!v) throw Error("cannot open vocabulary file " + vocab_json.string());
    std::ifstream m(merges, std::ios::binary);
    if (!m) throw Error("cannot open merges file " + merges.string());
    return load(v, m);
}

Vocabulary Vocabulary::load_directory(const std::filesystem::path& dir) {
    return load_files(dir / "vocab.json", dir / "merges.txt");
}

void Vocabulary::index_merges() {
    merge_ranks_.reserve(merges_.size());
    for (std::size_t rank = 0; rank < merges_.size(); ++rank) {
        // Duplicate pairs keep their first (lowest) rank.
        merge_ranks_.emplace(merges_[rank].left + ' ' + merges_[rank].right, rank);
    }
}

std::optional<TokenId> Vocabulary::id_of(std::string_view token) const {
    auto it = encoder_.find(std::string(token));
    if (it == encoder_.end()) return std::nullopt;
    return it->second;
}

const std::string* Vocabulary::token_of(TokenId id) const {
    auto it = decoder_.find(id);
    return it == decoder_.end() ? nullptr : &it->second;
}

std::optional<std::size_t> Vocabulary::merge_rank(std::string_view left, std::string_view right) const {
    std::string key;
    key.reserve(left.size() + right.size() + 1);
    key.append(left).push_back(' ');
    key.append(right);
    auto it = merge_ranks_.find(key);
    if (it == merge_ranks_.end()) return std::nullopt;
    return it->second;
}

}  // namespace texttiger::tokenizer
