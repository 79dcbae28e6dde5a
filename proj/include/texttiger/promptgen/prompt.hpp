#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "texttiger/common/error.hpp"
#include "texttiger/refine/augment.hpp"
#include "texttiger/refine/summarize.hpp"
#include "texttiger/tokenizer/budget.hpp"
#include "texttiger/tokenizer/vocabulary.hpp"

namespace texttiger::promptgen {

enum class PromptMethod {
    CapOnly,             // caption alone
    CapAugOnly,          // caption + raw entity descriptions as bullets
    TextTigerWoLen,      // caption + summary, no length hint
    TextTiger,           // caption + summary with the current count
    IterativeTextTiger,  // caption + summary refined up to three rounds
};

inline constexpr PromptMethod kAllMethods[] = {PromptMethod::CapOnly, PromptMethod::CapAugOnly,
                                               PromptMethod::TextTigerWoLen, PromptMethod::TextTiger,
                                               PromptMethod::IterativeTextTiger};

/// "cap-only", "cap-aug-only", "texttiger-wo-len", "texttiger", "iterative-texttiger".
std::string_view to_string(PromptMethod method);
/// Throws ConfigError for unknown names.
PromptMethod parse_prompt_method(std::string_view name);

/// The summarization variant behind a method; none for CapOnly and CapAugOnly.
std::optional<refine::SummaryMethod> summary_method_for(PromptMethod method);

class MissingDescription : public Error {
public:
    using Error::Error;
};

struct AssembledPrompt {
    PromptMethod method = PromptMethod::CapOnly;
    std::string text;
    /// Caption tokens plus description tokens. The fixed "Caption:" and
    /// "Note:" labels are template overhead and are not budgeted.
    tokenizer::TokenCount token_count;
    tokenizer::TokenCount text_token_count;  // the whole text, labels included
    bool truncated_at_t5 = false;
    bool truncated_at_clip = false;

    bool operator==(const AssembledPrompt&) const = default;
};

/// Nothing, a finished description (summary or pre-rendered text), or the
/// per-entity list CapAugOnly renders as bullets.
using PromptDescription = std::variant<std::monostate, std::string, std::vector<refine::EntityDescription>>;

/// "- {entity}: {description}" one per line.
std::string render_bullets(const std::vector<refine::EntityDescription>& entities);

/// CapOnly gives "Caption: {caption}"; every other method gives
/// "Caption: {caption}\n\nNote: {description}". A CapOnly description is ignored.
/// Throws std::invalid_argument for an empty caption and MissingDescription
/// when a method needs a description and none (or an empty one) is given.
AssembledPrompt assemble_prompt(PromptMethod method, std::string_view caption, const PromptDescription& description,
                                const tokenizer::Vocabulary& vocab, const tokenizer::TokenBudget& budget = {});

/// Flags are pure functions of the count and the budget.
void set_truncation_flags(AssembledPrompt& prompt, const tokenizer::TokenBudget& budget);

}  // namespace texttiger::promptgen
