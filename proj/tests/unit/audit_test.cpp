#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "texttiger/audit/audit.hpp"

using namespace texttiger;
using namespace texttiger::audit;
using promptgen::AssembledPrompt;
using promptgen::PromptMethod;

namespace {

AssembledPrompt prompt(PromptMethod m, std::size_t tokens) {
    AssembledPrompt p;
    p.method = m;
    p.token_count = {tokens};
    return p;
}

}  // namespace

TEST(Audit, MeanAndNoViolations) {
    std::vector<AssembledPrompt> ps{prompt(PromptMethod::TextTiger, 10), prompt(PromptMethod::TextTiger, 20),
                                    prompt(PromptMethod::TextTiger, 30)};
    const auto r = audit_prompts(ps);
    const auto& m = r.per_method.at(PromptMethod::TextTiger);
    EXPECT_EQ(m.mean_tokens, 20.0);
    EXPECT_EQ(m.violations, 0u);
    EXPECT_EQ(m.n, 3u);
    EXPECT_EQ(r.limit, 256u);
}

TEST(Audit, ThresholdIsStrict) {
    std::vector<AssembledPrompt> ps{prompt(PromptMethod::CapAugOnly, 250), prompt(PromptMethod::CapAugOnly, 300),
                                    prompt(PromptMethod::CapAugOnly, 256)};
    EXPECT_EQ(audit_prompts(ps).per_method.at(PromptMethod::CapAugOnly).violations, 1u);
}

TEST(Audit, GroupsByMethodAndOptionalClipColumn) {
    std::vector<AssembledPrompt> ps{prompt(PromptMethod::CapOnly, 12), prompt(PromptMethod::CapAugOnly, 400),
                                    prompt(PromptMethod::CapOnly, 80)};
    const auto r = audit_prompts(ps, {256, 77});
    ASSERT_EQ(r.per_method.size(), 2u);
    EXPECT_EQ(r.per_method.at(PromptMethod::CapOnly).clip_violations, 1u);
    EXPECT_EQ(r.per_method.at(PromptMethod::CapAugOnly).violations, 1u);
    const auto table = to_table(r);
    EXPECT_NE(table.find("cap-aug-only"), std::string::npos);
    EXPECT_NE(table.find("CLIP violations (>77)"), std::string::npos);
    const auto j = to_json(r);
    EXPECT_EQ(j["per_method"].size(), 2u);
    EXPECT_EQ(j["per_method"][0]["method"], "cap-only");
    EXPECT_EQ(j["per_method"][0]["mean_tokens"], 46.0);
    EXPECT_FALSE(to_json(audit_prompts(ps))["per_method"][0].contains("clip_violations"));
}

TEST(Audit, Errors) {
    EXPECT_THROW(audit_prompts({}), EmptyAudit);
    std::vector<AssembledPrompt> ps{prompt(PromptMethod::CapOnly, 1)};
    EXPECT_THROW(audit_prompts(ps, {0, std::nullopt}), std::invalid_argument);
}

TEST(Audit, OrderIndependentAndMonotoneInLimit) {
    std::mt19937 rng(3);
    std::vector<AssembledPrompt> ps;
    for (int i = 0; i < 200; ++i) ps.push_back(prompt(promptgen::kAllMethods[rng() % 5], rng() % 500));
    const auto base = audit_prompts(ps);
    for (int trial = 0; trial < 5; ++trial) {
        std::shuffle(ps.begin(), ps.end(), rng);
        EXPECT_EQ(audit_prompts(ps), base);
    }
    std::map<PromptMethod, std::size_t> previous;
    for (std::size_t limit = 1; limit < 520; limit += 7) {
        const auto r = audit_prompts(ps, {limit, std::nullopt});
        for (const auto& [m, a] : r.per_method) {
            EXPECT_LE(a.violations, a.n);
            if (previous.contains(m)) EXPECT_LE(a.violations, previous[m]);
            previous[m] = a.violations;
        }
    }
}
