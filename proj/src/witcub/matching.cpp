#include "texttiger/witcub/matching.hpp"

#include <algorithm>
#include <optional>
#include <unordered_set>

#include "texttiger/tokenizer/unicode.hpp"

namespace texttiger::witcub {

namespace {

bool is_word_char(char32_t c) { return unicode::is_letter(c) || unicode::is_number(c); }

std::optional<std::size_t> first_whole_phrase(const std::u32string& haystack, const std::u32string& needle) {
    for (std::size_t pos = haystack.find(needle); pos != std::u32string::npos;
         pos = haystack.find(needle, pos + 1)) {
        const bool left_ok = pos == 0 || !is_word_char(haystack[pos - 1]);
        const std::size_t end = pos + needle.size();
        const bool right_ok = end == haystack.size() || !is_word_char(haystack[end]);
        if (left_ok && right_ok) return pos;
    }
    return std::nullopt;
}

}  // namespace

std::vector<EntityEntry> match_entities(std::string_view caption, std::span<const EntityEntry> entities) {
    if (caption.empty()) return {};
    const auto lowered_caption = unicode::decode_utf8(unicode::to_lower(caption));

    struct Hit {
        std::size_t position;
        std::size_t index;
    };
    std::vector<Hit> hits;
    std::unordered_set<std::u32string> seen;
    for (std::size_t i = 0; i < entities.size(); ++i) {
        auto name = unicode::decode_utf8(unicode::to_lower(entities[i].name));
        if (name.empty() || seen.contains(name)) continue;
        if (auto pos = first_whole_phrase(lowered_caption, name)) {
            seen.insert(std::move(name));
            hits.push_back({*pos, i});
        }
    }
    std::stable_sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) { return a.position < b.position; });

    std::vector<EntityEntry> out;
    out.reserve(hits.size());
    for (const auto& hit : hits) out.push_back(entities[hit.index]);
    return out;
}

}  // namespace texttiger::witcub
