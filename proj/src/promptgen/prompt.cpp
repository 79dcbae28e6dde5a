#include "texttiger/promptgen/prompt.hpp"

#include <stdexcept>

#include "texttiger/tokenizer/clip_tokenizer.hpp"

namespace texttiger::promptgen {

std::string_view to_string(PromptMethod method) {
    switch (method) {
        case PromptMethod::CapOnly: return "cap-only";
        case PromptMethod::CapAugOnly: return "cap-aug-only";
        case PromptMethod::TextTigerWoLen: return "texttiger-wo-len";
        case PromptMethod::TextTiger: return "texttiger";
        case PromptMethod::IterativeTextTiger: return "iterative-texttiger";
    }
    return "unknown";
}

PromptMethod parse_prompt_method(std::string_view name) {
    for (auto m : kAllMethods) {
        if (to_string(m) == name) return m;
    }
    throw ConfigError("unknown prompt method: " + std::string(name));
}

std::optional<refine::SummaryMethod> summary_method_for(PromptMethod method) {
    switch (method) {
        case PromptMethod::TextTigerWoLen: return refine::SummaryMethod::WithoutLength;
        case PromptMethod::TextTiger: return refine::SummaryMethod::WithLength;
        case PromptMethod::IterativeTextTiger: return refine::SummaryMethod::Iterative;
        default: return std::nullopt;
    }
}

std::string render_bullets(const std::vector<refine::EntityDescription>& entities) {
    std::string out;
    for (std::size_t i = 0; i < entities.size(); ++i) {
        if (i > 0) out += '\n';
        out += "- " + entities[i].name + ": " + entities[i].description;
    }
    return out;
}

void set_truncation_flags(AssembledPrompt& prompt, const tokenizer::TokenBudget& budget) {
    prompt.truncated_at_t5 = prompt.token_count.content_tokens > budget.t5_limit;
    prompt.truncated_at_clip = prompt.token_count.content_tokens > budget.clip_limit;
}

AssembledPrompt assemble_prompt(PromptMethod method, std::string_view caption, const PromptDescription& description,
                                const tokenizer::Vocabulary& vocab, const tokenizer::TokenBudget& budget) {
    if (caption.empty()) throw std::invalid_argument("caption must not be empty");

    AssembledPrompt out;
    out.method = method;
    out.text = "Caption: ";
    out.text += caption;
    std::size_t content = tokenizer::count_tokens(caption, vocab).content_tokens;

    if (method != PromptMethod::CapOnly) {
        std::string note;
        if (const auto* text = std::get_if<std::string>(&description)) {
            note = *text;
        } else if (const auto* list = std::get_if<std::vector<refine::EntityDescription>>(&description)) {
            if (method != PromptMethod::CapAugOnly) {
                throw MissingDescription(std::string(to_string(method)) + " needs a summary, not an entity list");
            }
            note = render_bullets(*list);
        }
        if (note.empty()) throw MissingDescription(std::string(to_string(method)) + " needs a description");
        out.text += "\n\nNote: ";
        out.text += note;
        content += tokenizer::count_tokens(note, vocab).content_tokens;
    }

    out.token_count = {content};
    out.text_token_count = tokenizer::count_tokens(out.text, vocab);
    set_truncation_flags(out, budget);
    return out;
}

}  // namespace texttiger::promptgen
