#include <gtest/gtest.h>

#include <fstream>
#include <mutex>
#include <sstream>

#include "stub_servers.hpp"
#include "texttiger/common/io.hpp"
#include "texttiger/refine/augment.hpp"
#include "texttiger/refine/summarize.hpp"
#include "texttiger/tokenizer/clip_tokenizer.hpp"

using namespace texttiger;
using namespace texttiger::refine;
using nlohmann::json;

namespace {

const tokenizer::Vocabulary& clip_vocab() {
    static const auto vocab = tokenizer::Vocabulary::load_directory(std::string(TEXTTIGER_DATA_DIR) + "/clip");
    return vocab;
}

std::string golden(const std::string& name) {
    return io::read_file(std::string(TEXTTIGER_FIXTURE_DIR) + "/golden/" + name);
}

const std::string kDavenport = "Davenport is a city in and the county seat of Scott County, Iowa, United States.";

// "city city ... city" with exactly n content tokens.
std::string text_of_tokens(std::size_t n) {
    std::string out;
    for (std::size_t i = 0; i < n; ++i) out += i == 0 ? "city" : " city";
    return out;
}

std::string wrapped(const std::string& body) { return " " + body + " <SummaryEnd>"; }

// Replays scripted outputs in order and records every request.
class ScriptedLlm : public CompletionClient {
public:
    explicit ScriptedLlm(std::vector<std::string> outputs) : outputs_(std::move(outputs)) {}

    std::string complete(const CompletionRequest& request) const override {
        std::lock_guard lock(mutex_);
        requests_.push_back(request);
        if (next_ >= outputs_.size()) throw LlmError("script exhausted", 0);
        return outputs_[next_++];
    }

    const std::vector<CompletionRequest>& requests() const { return requests_; }

private:
    std::vector<std::string> outputs_;
    mutable std::mutex mutex_;
    mutable std::size_t next_ = 0;
    mutable std::vector<CompletionRequest> requests_;
};

SummarizeConfig config_for(SummaryMethod method) {
    SummarizeConfig config;
    config.method = method;
    config.llm = LlmParams::defaults_for(method, "test-model");
    return config;
}

}  // namespace

TEST(TokenHelper, ProducesRequestedCounts) {
    for (std::size_t n : {1u, 2u, 150u, 170u, 200u, 300u}) {
        EXPECT_EQ(tokenizer::count_tokens(text_of_tokens(n), clip_vocab()).content_tokens, n) << n;
    }
}

TEST(Augment, JoinsMatchedDescriptionsInCaptionOrder) {
    witcub::WitCubInstance inst;
    inst.caption = "Credit Island near Davenport";
    inst.entities = {{"Davenport", kDavenport, "u1"}, {"Credit Island", "Credit Island is an island.", "u2"}};
    const auto aug = build_augmentation(inst);
    ASSERT_EQ(aug.per_entity.size(), 2u);
    EXPECT_EQ(aug.per_entity[0].name, "Credit Island");
    EXPECT_EQ(aug.joined_text, "Credit Island is an island.\n\n" + kDavenport);
    EXPECT_NE(aug.joined_text.find("Davenport is a city in and the county seat of"), std::string::npos);
}

TEST(Augment, NoEntitiesGivesEmptyText) {
    witcub::WitCubInstance inst;
    inst.caption = "A quiet street";
    EXPECT_EQ(build_augmentation(inst).joined_text, "");
}

TEST(Augment, JoinRuleOracle) {
    std::vector<EntityDescription> two{{"A", "alpha"}, {"B", "beta"}};
    EXPECT_EQ(join_descriptions(two), "alpha" + std::string("\n\n") + "beta");
    EXPECT_EQ(join_descriptions({{"A", "alpha"}}), "alpha");
}

TEST(SummaryPrompt, MatchesGoldenTemplates) {
    EXPECT_EQ(render_summary_prompt(SummaryMethod::WithoutLength, kDavenport, std::nullopt),
              golden("summary_prompt_without_length.txt"));
    EXPECT_EQ(render_summary_prompt(SummaryMethod::WithLength, kDavenport, tokenizer::TokenCount{300}),
              golden("summary_prompt_with_length.txt"));
    EXPECT_EQ(render_summary_prompt(SummaryMethod::Iterative, kDavenport, tokenizer::TokenCount{210}),
              golden("summary_prompt_iterative.txt"));
}

TEST(SummaryPrompt, WithoutLengthHasNoCountSentence) {
    const auto p = render_summary_prompt(SummaryMethod::WithoutLength, "d", tokenizer::TokenCount{5});
    EXPECT_EQ(p.find("The current tokens"), std::string::npos);
    EXPECT_NE(p.find("do not delete proper nouns"), std::string::npos);
    EXPECT_TRUE(p.ends_with("SummaryStart:"));
}

TEST(SummaryPrompt, MissingCountThrows) {
    EXPECT_THROW(render_summary_prompt(SummaryMethod::WithLength, "d", std::nullopt), MissingTokenCount);
    EXPECT_THROW(render_summary_prompt(SummaryMethod::Iterative, "d", std::nullopt), MissingTokenCount);
    EXPECT_THROW(render_summary_prompt(SummaryMethod::WithLength, "", tokenizer::TokenCount{1}),
                 std::invalid_argument);
}

TEST(ExtractSummary, ExplicitAndImplicitStart) {
    EXPECT_EQ(extract_summary("SummaryStart: A river city. <SummaryEnd>"), "A river city.");
    EXPECT_EQ(extract_summary(" A river city. <SummaryEnd> trailing"), "A river city.");
    EXPECT_EQ(extract_summary("SummaryStart: The summary of the text is as follows. The text is about the prompt "
                              "of the text. <SummaryEnd>"),
              "The summary of the text is as follows. The text is about the prompt of the text.");
    EXPECT_EQ(extract_summary("noise SummaryStart:\nOne. <SummaryEnd> Two. <SummaryEnd>"), "One.");
}

TEST(ExtractSummary, MissingEndMarkerIsMalformed) {
    EXPECT_THROW(extract_summary("A river city with no end marker"), MalformedSummary);
    EXPECT_THROW(extract_summary("SummaryStart: text"), MalformedSummary);
    EXPECT_THROW(extract_summary("SummaryStart:   <SummaryEnd>"), MalformedSummary);
}

TEST(ExtractSummary, DelimiterScanOracle) {
    const std::vector<std::string> bodies{"x", "a b c", "SummaryStart: nested", "tail\n"};
    for (const auto& body : bodies) {
        for (const std::string prefix : {"", "SummaryStart:", "pre SummaryStart: "}) {
            const std::string out = prefix + body + "<SummaryEnd>junk<SummaryEnd>";
            const auto got = extract_summary(out);
            EXPECT_EQ(got.find("<SummaryEnd>"), std::string::npos);
            // oracle: strip a leading "...SummaryStart:" only when it precedes the first end marker
            std::string expect = out.substr(0, out.find("<SummaryEnd>"));
            const auto s = expect.find("SummaryStart:");
            if (s != std::string::npos) expect = expect.substr(s + 13);
            while (!expect.empty() && std::isspace(static_cast<unsigned char>(expect.front()))) expect.erase(0, 1);
            while (!expect.empty() && std::isspace(static_cast<unsigned char>(expect.back()))) expect.pop_back();
            EXPECT_EQ(got, expect) << out;
        }
    }
}

TEST(Summarize, FirstShotCompliance) {
    ScriptedLlm llm({wrapped(text_of_tokens(150))});
    const auto r = summarize(kDavenport, config_for(SummaryMethod::WithLength), llm, clip_vocab());
    EXPECT_EQ(r.iterations_used, 1);
    EXPECT_TRUE(r.compliant);
    EXPECT_EQ(r.token_count.content_tokens, 150u);
    ASSERT_EQ(llm.requests().size(), 1u);
    EXPECT_EQ(llm.requests()[0].max_output_tokens, 180);
    EXPECT_EQ(llm.requests()[0].seed, 0);
}

TEST(Summarize, WithoutLengthUsesLargerOutputCap) {
    ScriptedLlm llm({wrapped(text_of_tokens(250))});
    const auto r = summarize(kDavenport, config_for(SummaryMethod::WithoutLength), llm, clip_vocab());
    EXPECT_EQ(r.iterations_used, 1);
    EXPECT_FALSE(r.compliant);
    EXPECT_EQ(llm.requests()[0].max_output_tokens, 512);
    EXPECT_EQ(llm.requests()[0].messages[0].content.find("The current tokens"), std::string::npos);
}

TEST(Summarize, IterativeEscalationReachesCompliance) {
    const std::string s300 = text_of_tokens(300), s200 = text_of_tokens(200), s170 = text_of_tokens(170);
    ScriptedLlm llm({wrapped(s300), wrapped(s200), wrapped(s170)});
    const std::string source = text_of_tokens(400);
    const auto r = summarize(source, config_for(SummaryMethod::Iterative), llm, clip_vocab());
    EXPECT_EQ(r.iterations_used, 3);
    EXPECT_TRUE(r.compliant);
    EXPECT_EQ(r.token_count.content_tokens, 170u);
    EXPECT_EQ(r.raw_outputs.size(), 3u);

    const auto& reqs = llm.requests();
    ASSERT_EQ(reqs.size(), 3u);
    EXPECT_EQ(reqs[0].messages[0].content, render_summary_prompt(SummaryMethod::WithLength, source,
                                                                 tokenizer::TokenCount{400}));
    EXPECT_EQ(reqs[1].messages[0].content, render_summary_prompt(SummaryMethod::Iterative, s300,
                                                                 tokenizer::TokenCount{300}));
    EXPECT_EQ(reqs[2].messages[0].content, render_summary_prompt(SummaryMethod::Iterative, s200,
                                                                 tokenizer::TokenCount{200}));
}

TEST(Summarize, IterativeStopsEarly) {
    ScriptedLlm llm({wrapped(text_of_tokens(300)), wrapped(text_of_tokens(100)), wrapped(text_of_tokens(50))});
    const auto r = summarize(kDavenport, config_for(SummaryMethod::Iterative), llm, clip_vocab());
    EXPECT_EQ(r.iterations_used, 2);
    EXPECT_TRUE(r.compliant);
}

TEST(Summarize, IterativeGivesUpAfterThreeRounds) {
    const std::string s300 = wrapped(text_of_tokens(300));
    ScriptedLlm llm({s300, s300, s300, s300});
    const auto r = summarize(kDavenport, config_for(SummaryMethod::Iterative), llm, clip_vocab());
    EXPECT_EQ(r.iterations_used, 3);
    EXPECT_FALSE(r.compliant);
    EXPECT_EQ(r.token_count.content_tokens, 300u);
    EXPECT_EQ(llm.requests().size(), 3u);
}

TEST(Summarize, MalformedEveryRoundIsSummaryError) {
    ScriptedLlm llm({"no marker", "still none", "nothing"});
    try {
        summarize(kDavenport, config_for(SummaryMethod::Iterative), llm, clip_vocab());
        FAIL() << "expected SummaryError";
    } catch (const SummaryError& e) {
        EXPECT_EQ(e.raw_outputs(), (std::vector<std::string>{"no marker", "still none", "nothing"}));
    }
    ScriptedLlm single({"no marker"});
    EXPECT_THROW(summarize(kDavenport, config_for(SummaryMethod::WithLength), single, clip_vocab()), SummaryError);
    EXPECT_EQ(single.requests().size(), 1u);
}

TEST(Summarize, MalformedMiddleRoundKeepsEarlierSummary) {
    ScriptedLlm llm({wrapped(text_of_tokens(300)), "broken", wrapped(text_of_tokens(120))});
    const auto r = summarize(kDavenport, config_for(SummaryMethod::Iterative), llm, clip_vocab());
    EXPECT_EQ(r.iterations_used, 3);
    EXPECT_TRUE(r.compliant);
    EXPECT_EQ(r.raw_outputs[1], "broken");
}

TEST(Summarize, ComplianceSoundnessAndBounds) {
    for (std::size_t n : {10u, 179u, 180u, 181u, 400u}) {
        for (auto method : {SummaryMethod::WithoutLength, SummaryMethod::WithLength, SummaryMethod::Iterative}) {
            ScriptedLlm llm({wrapped(text_of_tokens(n)), wrapped(text_of_tokens(n)), wrapped(text_of_tokens(n))});
            const auto cfg = config_for(method);
            const auto r = summarize(kDavenport, cfg, llm, clip_vocab());
            EXPECT_GE(r.iterations_used, 1);
            EXPECT_LE(r.iterations_used, cfg.max_iterations);
            EXPECT_EQ(r.raw_outputs.size(), static_cast<std::size_t>(r.iterations_used));
            EXPECT_EQ(r.compliant, tokenizer::count_tokens(r.text, clip_vocab()).content_tokens <= 180);
        }
    }
}

TEST(Summarize, DeterministicForDeterministicClient) {
    const std::vector<std::string> script{wrapped(text_of_tokens(300)), wrapped(text_of_tokens(170))};
    ScriptedLlm a(script), b(script);
    const auto cfg = config_for(SummaryMethod::Iterative);
    EXPECT_EQ(summarize(kDavenport, cfg, a, clip_vocab()), summarize(kDavenport, cfg, b, clip_vocab()));
}

TEST(Summarize, RejectsBadConfig) {
    ScriptedLlm llm({});
    auto cfg = config_for(SummaryMethod::Iterative);
    cfg.max_iterations = 0;
    EXPECT_THROW(summarize(kDavenport, cfg, llm, clip_vocab()), ConfigError);
    EXPECT_THROW(summarize("", config_for(SummaryMethod::WithLength), llm, clip_vocab()), std::invalid_argument);
}

TEST(LlmClient, RequestSerializationMatchesGolden) {
    CompletionRequest req;
    req.model = "llama-3.3-70b-instruct";
    req.messages = {{"user", "Summarize this."}};
    req.max_output_tokens = 180;
    req.seed = 0;
    req.temperature = 0.0;
    EXPECT_EQ(to_json(req), json::parse(golden("llm_request_seed0_max180.json")));
}

TEST(LlmClient, StubRoundTrip) {
    stubs::LlmStub stub([](const json&) { return stubs::LlmReply{200, "SummaryStart: ok <SummaryEnd>"}; });
    ChatCompletionClient client({stub.endpoint(), "secret", std::chrono::milliseconds(2000), 1,
                                 std::chrono::milliseconds(1)});
    CompletionRequest req;
    req.model = "m";
    req.messages = {{"user", "hi"}};
    EXPECT_EQ(llm_complete(req, client), "SummaryStart: ok <SummaryEnd>");
    ASSERT_EQ(stub.requests().size(), 1u);
    EXPECT_EQ(stub.requests()[0]["seed"], 0);
    EXPECT_EQ(stub.requests()[0]["max_tokens"], 180);
}

TEST(LlmClient, ServerErrorAfterOneRetry) {
    stubs::LlmStub stub([](const json&) { return stubs::LlmReply{500, ""}; });
    ChatCompletionClient client({stub.endpoint(), std::nullopt, std::chrono::milliseconds(2000), 1,
                                 std::chrono::milliseconds(1)});
    try {
        client.complete({"m", {{"user", "hi"}}, 180, 0, 0.0});
        FAIL() << "expected LlmError";
    } catch (const LlmError& e) {
        EXPECT_EQ(e.status(), 500);
    }
    EXPECT_EQ(stub.requests().size(), 2u);
}

TEST(LlmClient, RetrySucceedsOnSecondAttempt) {
    int calls = 0;
    stubs::LlmStub stub([&](const json&) {
        return ++calls == 1 ? stubs::LlmReply{503, ""} : stubs::LlmReply{200, "fine"};
    });
    ChatCompletionClient client({stub.endpoint(), std::nullopt, std::chrono::milliseconds(2000), 1,
                                 std::chrono::milliseconds(1)});
    EXPECT_EQ(client.complete({"m", {{"user", "hi"}}, 180, 0, 0.0}), "fine");
}

TEST(LlmClient, UnreachableEndpoint) {
    int port = 0;
    {
        stubs::LlmStub stub([](const json&) { return stubs::LlmReply{}; });
        port = stub.port();
    }
    ChatCompletionClient client({"http://127.0.0.1:" + std::to_string(port) + "/v1/chat/completions", std::nullopt,
                                 std::chrono::milliseconds(500), 1, std::chrono::milliseconds(1)});
    try {
        client.complete({"m", {{"user", "hi"}}, 180, 0, 0.0});
        FAIL() << "expected LlmError";
    } catch (const LlmError& e) {
        EXPECT_EQ(e.status(), 0);
    }
    EXPECT_THROW(ChatCompletionClient({}), ConfigError);
}

TEST(LlmClient, SummarizeThroughStub) {
    stubs::LlmStub stub([](const json&) {
        return stubs::LlmReply{200, " Davenport is a city in Iowa. <SummaryEnd>"};
    });
    ChatCompletionClient client({stub.endpoint(), std::nullopt, std::chrono::milliseconds(2000), 1,
                                 std::chrono::milliseconds(1)});
    const auto r = summarize(kDavenport, config_for(SummaryMethod::Iterative), client, clip_vocab());
    EXPECT_EQ(r.text, "Davenport is a city in Iowa.");
    EXPECT_TRUE(r.compliant);
    EXPECT_EQ(stubs::user_message(stub.requests()[0]), render_summary_prompt(SummaryMethod::WithLength, kDavenport,
                                                                       tokenizer::count_tokens(kDavenport, clip_vocab())));
}
