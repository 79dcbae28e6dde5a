#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "texttiger/common/error.hpp"
#include "texttiger/refine/llm_client.hpp"
#include "texttiger/tokenizer/budget.hpp"
#include "texttiger/tokenizer/vocabulary.hpp"

namespace texttiger::refine {

enum class SummaryMethod {
    WithoutLength,  // no current-count sentence
    WithLength,     // "The current tokens are N tokens."
    Iterative,      // WithLength, then "are still N tokens." until within budget
};

std::string_view to_string(SummaryMethod method);
/// Accepts "without-length", "with-length", "iterative". Throws ConfigError otherwise.
SummaryMethod parse_summary_method(std::string_view name);

inline constexpr std::string_view kSummaryStart = "SummaryStart:";
inline constexpr std::string_view kSummaryEnd = "<SummaryEnd>";

class MalformedSummary : public Error {
public:
    using Error::Error;
};

class MissingTokenCount : public Error {
public:
    using Error::Error;
};

struct LlmParams {
    std::string model_name;
    int seed = 0;
    int max_output_tokens = 180;
    double temperature = 0.0;

    /// 512 output tokens without a length hint, 180 otherwise; seed 0, temperature 0.
    static LlmParams defaults_for(SummaryMethod method, std::string model_name = {});
};

struct SummarizeConfig {
    SummaryMethod method = SummaryMethod::WithLength;
    tokenizer::TokenBudget budget;
    int max_iterations = 3;
    LlmParams llm;

    /// Throws ConfigError on max_iterations < 1, max_output_tokens <= 0 or an invalid budget.
    void validate() const;
};

struct SummaryResult {
    std::string text;
    tokenizer::TokenCount token_count;
    int iterations_used = 0;
    bool compliant = false;
    std::vector<std::string> raw_outputs;

    bool operator==(const SummaryResult&) const = default;
};

/// Every round produced output without a usable summary.
class SummaryError : public Error {
public:
    SummaryError(const std::string& message, std::vector<std::string> raw_outputs)
        : Error(message), raw_outputs_(std::move(raw_outputs)) {}
    const std::vector<std::string>& raw_outputs() const noexcept { return raw_outputs_; }

private:
    std::vector<std::string> raw_outputs_;
};

/// The summarization instruction for `method`. WithLength and Iterative need
/// `current_tokens` (MissingTokenCount otherwise). The prompt ends with the
/// primed "SummaryStart:" and no trailing newline.
std::string render_summary_prompt(SummaryMethod method, std::string_view description,
                                  std::optional<tokenizer::TokenCount> current_tokens,
                                  std::size_t summary_budget = 180);

/// Text between the first "SummaryStart:" and the first following
/// "<SummaryEnd>", trimmed. Output whose first "<SummaryEnd>" comes before
/// any "SummaryStart:" is read from offset 0, since the prompt already primed
/// the marker. Throws MalformedSummary when no end marker exists or the
/// enclosed text is blank.
std::string extract_summary(std::string_view llm_output);

/// STEP 2. WithoutLength and WithLength make exactly one call. Iterative
/// starts like WithLength and re-asks with the previous summary while it is
/// over budget, up to max_iterations rounds. The result is returned whether
/// or not it is compliant.
SummaryResult summarize(std::string_view description, const SummarizeConfig& config, const CompletionClient& llm,
                        const tokenizer::Vocabulary& vocab);

}  // namespace texttiger::refine
