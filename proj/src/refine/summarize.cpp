#include "texttiger/refine/summarize.hpp"

#include <stdexcept>

#include "texttiger/tokenizer/clip_tokenizer.hpp"

namespace texttiger::refine {

std::string_view to_string(SummaryMethod method) {
    switch (method) {
        case SummaryMethod::WithoutLength: return "without-length";
        case SummaryMethod::WithLength: return "with-length";
        case SummaryMethod::Iterative: return "iterative";
    }
    return "unknown";
}

SummaryMethod parse_summary_method(std::string_view name) {
    for (auto m : {SummaryMethod::WithoutLength, SummaryMethod::WithLength, SummaryMethod::Iterative}) {
        if (to_string(m) == name) return m;
    }
    throw ConfigError("unknown summary method: " + std::string(name));
}

LlmParams LlmParams::defaults_for(SummaryMethod method, std::string model_name) {
    LlmParams p;
    p.model_name = std::move(model_name);
    p.max_output_tokens = method == SummaryMethod::WithoutLength ? 512 : 180;
    return p;
}

void SummarizeConfig::validate() const {
    if (max_iterations < 1) throw ConfigError("max_iterations must be at least 1");
    if (llm.max_output_tokens <= 0) throw ConfigError("max_output_tokens must be positive");
    try {
        budget.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

std::string render_summary_prompt(SummaryMethod method, std::string_view description,
                                  std::optional<tokenizer::TokenCount> current_tokens,
                                  std::size_t summary_budget) {
    if (description.empty()) throw std::invalid_argument("description must not be empty");
    std::string out;
    if (method != SummaryMethod::WithoutLength) {
        if (!current_tokens) throw MissingTokenCount("current token count is required for this method");
        out += method == SummaryMethod::Iterative ? "The current tokens are still " : "The current tokens are ";
        out += std::to_string(current_tokens->content_tokens);
        out += " tokens.\n";
    }
    out += "Please generate a summary so that there are " + std::to_string(summary_budget) + " tokens.\n";
    out += "However, please do not delete proper nouns or other important information.\n";
    out += "Please begin the output with SummaryStart: and write the summary of the text.\n";
    out += "Please end the output with <SummaryEnd> as the last token.\n\n";
    out += "Example:\n";
    out += "SummaryStart: The summary of the text is as follows. The text is about the ";
    out += method == SummaryMethod::WithoutLength ? "summary" : "prompt";
    out += " of the text. <SummaryEnd>\n\n";
    out += "Complement:\n";
    out += description;
    out += "\n\nSummaryStart:";
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    constexpr std::string_view ws = " \t\r\n\f\v";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

}  // namespace

std::string extract_summary(std::string_view llm_output) {
    const auto first_end = llm_output.find(kSummaryEnd);
    if (first_end == std::string_view::npos) throw MalformedSummary("output has no <SummaryEnd> marker");
    std::size_t begin = 0;
    const auto start = llm_output.find(kSummaryStart);
    if (start != std::string_view::npos && start < first_end) begin = start + kSummaryStart.size();
    const auto end = llm_output.find(kSummaryEnd, begin);
    std::string_view body = trim(llm_output.substr(begin, end - begin));
    if (body.empty()) throw MalformedSummary("summary between markers is empty");
    return std::string(body);
}

SummaryResult summarize(std::string_view description, const SummarizeConfig& config, const CompletionClient& llm,
                        const tokenizer::Vocabulary& vocab) {
    if (description.empty()) throw std::invalid_argument("description must not be empty");
    config.validate();

    const int rounds = config.method == SummaryMethod::Iterative ? config.max_iterations : 1;
    const std::size_t budget = config.budget.summary_budget;

    SummaryResult result;
    std::string source(description);
    bool have_summary = false;

    for (int round = 1; round <= rounds; ++round) {
        SummaryMethod template_method = config.method;
        if (config.method == SummaryMethod::Iterative && round == 1) template_method = SummaryMethod::WithLength;

        std::optional<tokenizer::TokenCount> current;
        if (template_method != SummaryMethod::WithoutLength) current = tokenizer::count_tokens(source, vocab);

        CompletionRequest request;
        request.model = config.llm.model_name;
        request.messages.push_back({"user", render_summary_prompt(template_method, source, current, budget)});
        request.max_output_tokens = config.llm.max_output_tokens;
        request.seed = config.llm.seed;
        request.temperature = config.llm.temperature;

        std::string raw = llm.complete(request);
        result.raw_outputs.push_back(raw);
        result.iterations_used = round;

        try {
            std::string text = extract_summary(raw);
            result.token_count = tokenizer::count_tokens(text, vocab);
            result.text = std::move(text);
            result.compliant = result.token_count.content_tokens <= budget;
            have_summary = true;
        } catch (const MalformedSummary&) {
            // keep the last usable summary; the next round re-asks from it
        }
        if (have_summary) {
            if (result.compliant) break;
            source = result.text;
        }
    }
    if (!have_summary) {
        throw SummaryError("no round produced a delimited summary", std::move(result.raw_outputs));
    }
    return result;
}

}  // namespace texttiger::refine
