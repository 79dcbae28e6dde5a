#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>

namespace texttiger::tokenizer {

/// Number of content tokens in a text. Begin/end special tokens are never counted.
struct TokenCount {
    std::size_t content_tokens = 0;

    auto operator<=>(const TokenCount&) const = default;
};

/// Length limits every prompt decision is made against.
/// clip_limit is the CLIP text-encoder context, t5_limit the T5 encoder window,
/// and summary_budget what remains for a summary after an average caption.
struct TokenBudget {
    std::size_t clip_limit = 77;
    std::size_t t5_limit = 256;
    std::size_t summary_budget = 180;

    /// Throws std::invalid_argument if a limit is zero or summary_budget >= t5_limit.
    void validate() const {
        if (clip_limit == 0 || t5_limit == 0 || summary_budget == 0) {
            throw std::invalid_argument("token limits must be positive");
        }
        if (summary_budget >= t5_limit) {
            throw std::invalid_argument("summary budget must be smaller than the T5 limit");
        }
    }

    bool operator==(const TokenBudget&) const = default;
};

struct BudgetStatus {
    std::size_t exceeded_by = 0;

    bool within() const noexcept { return exceeded_by == 0; }
    static BudgetStatus Within() noexcept { return {}; }
    static BudgetStatus ExceededBy(std::size_t n) noexcept { return {n}; }
    bool operator==(const BudgetStatus&) const = default;
};

/// Within when count <= limit (inclusive), else ExceededBy(count - limit).
inline BudgetStatus check_budget(TokenCount count, std::size_t limit) {
    if (limit == 0) throw std::invalid_argument("token limit must be positive");
    return count.content_tokens <= limit ? BudgetStatus::Within()
                                         : BudgetStatus::ExceededBy(count.content_tokens - limit);
}

}  // namespace texttiger::tokenizer
