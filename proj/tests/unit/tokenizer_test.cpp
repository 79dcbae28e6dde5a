#include <gtest/gtest.h>

#include <fstream>
#include <random>

#include <json.hpp>

#include "texttiger/common/error.hpp"
#include "texttiger/tokenizer/clip_tokenizer.hpp"
#include "texttiger/tokenizer/unicode.hpp"

using namespace texttiger;
using namespace texttiger::tokenizer;

namespace {

const Vocabulary& clip_vocab() {
    static const Vocabulary vocab = Vocabulary::load_directory(std::string(TEXTTIGER_DATA_DIR) + "/clip");
    return vocab;
}

struct FixtureCase {
    std::string text;
    std::vector<TokenId> ids;
};

std::vector<FixtureCase> reference_cases() {
    std::ifstream in(std::string(TEXTTIGER_FIXTURE_DIR) + "/clip_tokenizer_reference.jsonl");
    std::vector<FixtureCase> cases;
    std::string line;
    while (std::getline(in, line)) {
        auto j = nlohmann::json::parse(line);
        cases.push_back({j.at("text").get<std::string>(), j.at("ids").get<std::vector<TokenId>>()});
    }
    return cases;
}

std::string random_text(std::mt19937_64& rng) {
    static const std::vector<std::string> words = {
        "River", "nore", "KILKENNY", "Phahurat", "road's", "don't", "2,500", "3.02", "café", "Zürich",
        "ΑΘΗΝΑΣ", "Москва", "東京", "🙂", "&amp;", "—", "(bracket)", "e-mail", "x²", "it’s", "ﬁnal"};
    static const std::vector<std::string> gaps = {" ", "  ", "\t", "\n", " \r\n "};
    std::uniform_int_distribution<std::size_t> nwords(0, 12);
    std::uniform_int_distribution<std::size_t> pick_word(0, words.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_gap(0, gaps.size() - 1);
    std::string out;
    const auto n = nwords(rng);
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0 || rng() % 3 == 0) out += gaps[pick_gap(rng)];
        out += words[pick_word(rng)];
    }
    return out;
}

}  // namespace

TEST(Vocabulary, PublishedFilesHaveExpectedSizes) {
    EXPECT_EQ(clip_vocab().merges().size(), 48894u);
    EXPECT_EQ(clip_vocab().size(), 49408u);
    EXPECT_EQ(clip_vocab().id_of(kStartOfText), 49406);
    EXPECT_EQ(clip_vocab().id_of(kEndOfText), 49407);
}

TEST(Vocabulary, MergesRankedByFileOrder) {
    const auto& merges = clip_vocab().merges();
    EXPECT_EQ(clip_vocab().merge_rank(merges.front().left, merges.front().right), 0u);
    EXPECT_EQ(clip_vocab().merge_rank(merges.back().left, merges.back().right), merges.size() - 1);
    EXPECT_FALSE(clip_vocab().merge_rank("zz", "qq").has_value());
}

TEST(Vocabulary, EmptyMergesGiveBaseAlphabetOnly) {
    auto vocab = Vocabulary::load("", "");
    EXPECT_TRUE(vocab.merges().empty());
    // 256 byte proxies, 256 end-of-word variants, begin/end specials.
    EXPECT_EQ(vocab.size(), 514u);
    for (int b = 0; b < 256; ++b) {
        const auto& proxy = vocab.byte_map().proxy(static_cast<std::uint8_t>(b));
        const auto id = vocab.id_of(proxy);
        ASSERT_TRUE(id.has_value());
        EXPECT_LT(*id, 256);
        EXPECT_EQ(vocab.id_of(proxy + "</w>"), *id + 256);
    }
    // Without merges every byte is its own token.
    EXPECT_EQ(encode("abc", vocab), (std::vector<TokenId>{'a' - 33, 'b' - 33, 'c' - 33 + 256}));
}

TEST(Vocabulary, DerivedIdsMatchPublishedJson) {
    std::ifstream merges(std::string(TEXTTIGER_DATA_DIR) + "/clip/merges.txt");
    std::istringstream empty;
    auto derived = Vocabulary::load(empty, merges);
    ASSERT_EQ(derived.size(), clip_vocab().size());
    for (TokenId id : {0, 255, 256, 511, 512, 3306, 49405, 49406, 49407}) {
        EXPECT_EQ(*derived.token_of(id), *clip_vocab().token_of(id)) << id;
    }
}

TEST(Vocabulary, OneSymbolMergeLineIsParseErrorWithLine) {
    try {
        Vocabulary::load("", "#version: 0.2\ni n\na\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
    try {
        Vocabulary::load("", "a");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 1u);
    }
}

TEST(Vocabulary, MergeOfUnknownSymbolIsRejected) {
    EXPECT_THROW(Vocabulary::load("", "#version: 0.2\nin g\n"), ParseError);
}

TEST(Vocabulary, DuplicateTokenIsParseError) {
    EXPECT_THROW(Vocabulary::load(R"({"a": 1, "b": 2, "a": 3})", ""), ParseError);
}

TEST(Vocabulary, DuplicateIdIsParseError) {
    std::string json = "{";
    auto base = Vocabulary::load("", "");
    for (TokenId id = 0; id < 514; ++id) {
        json += nlohmann::json(*base.token_of(id)).dump() + ":" + std::to_string(id) + ",";
    }
    json += R"("extra":0})";
    EXPECT_THROW(Vocabulary::load(json, ""), ParseError);
}

TEST(Vocabulary, MissingBaseTokenIsParseError) {
    EXPECT_THROW(Vocabulary::load(R"({"a": 0})", ""), ParseError);
}

TEST(Encode, EmptyInput) {
    EXPECT_TRUE(encode("", clip_vocab()).empty());
    EXPECT_EQ(count_tokens("", clip_vocab()).content_tokens, 0u);
    EXPECT_TRUE(encode(" \t\n ", clip_vocab()).empty());
}

TEST(Encode, KnownIds) {
    EXPECT_EQ(encode("hello world", clip_vocab()), (std::vector<TokenId>{3306, 1002}));
}

TEST(Encode, CaseInsensitive) {
    EXPECT_EQ(encode("HELLO", clip_vocab()), encode("hello", clip_vocab()));
}

TEST(Encode, MatchesReferenceFixtureExactly) {
    const auto cases = reference_cases();
    ASSERT_EQ(cases.size(), 100u);
    for (const auto& c : cases) {
        EXPECT_EQ(encode(c.text, clip_vocab()), c.ids) << "text: " << c.text;
        EXPECT_EQ(count_tokens(c.text, clip_vocab()).content_tokens, c.ids.size());
    }
}

TEST(Encode, DecodeRecoversNormalizedText) {
    const auto ids = encode("The River Nore at Kilkenny", clip_vocab());
    EXPECT_EQ(decode(ids, clip_vocab()), "the river nore at kilkenny ");
}

TEST(Normalize, CleaningSteps) {
    EXPECT_EQ(normalize_text("  A\t\tB \n C  "), "a b c");
    EXPECT_EQ(normalize_text("fish &amp; chips"), "fish & chips");
    EXPECT_EQ(normalize_text("&amp;amp;"), "&");
    EXPECT_EQ(normalize_text("&#39;x&#x27;"), "'x'");
    EXPECT_EQ(normalize_text("&notit;"), "¬it;");
    EXPECT_EQ(normalize_text("&bogus;"), "&bogus;");
    EXPECT_EQ(normalize_text("“q” it’s"), "\"q\" it's");
    EXPECT_EQ(normalize_text("ΑΘΗΝΑΣ ΣΑ"), "αθηνας σα");
}

TEST(PreTokenize, SplitsLikeReferencePattern) {
    EXPECT_EQ(pre_tokenize("don't stop 2,500!!"),
              (std::vector<std::string>{"don", "'t", "stop", "2", ",", "5", "0", "0", "!!"}));
    EXPECT_EQ(pre_tokenize("a<|endoftext|>b"), (std::vector<std::string>{"a", "<|endoftext|>", "b"}));
}

TEST(Budget, CheckBudget) {
    EXPECT_EQ(check_budget(TokenCount{180}, 180), BudgetStatus::Within());
    EXPECT_EQ(check_budget(TokenCount{181}, 180), BudgetStatus::ExceededBy(1));
    EXPECT_EQ(check_budget(TokenCount{487}, 256), BudgetStatus::ExceededBy(231));
    EXPECT_TRUE(check_budget(TokenCount{0}, 1).within());
    EXPECT_THROW(check_budget(TokenCount{1}, 0), std::invalid_argument);
}

TEST(Budget, DefaultsAndValidation) {
    TokenBudget budget;
    EXPECT_EQ(budget.clip_limit, 77u);
    EXPECT_EQ(budget.t5_limit, 256u);
    EXPECT_EQ(budget.summary_budget, 180u);
    EXPECT_NO_THROW(budget.validate());
    budget.summary_budget = 256;
    EXPECT_THROW(budget.validate(), std::invalid_argument);
    budget = TokenBudget{0, 256, 180};
    EXPECT_THROW(budget.validate(), std::invalid_argument);
}

TEST(TokenizerProperties, DeterministicAndCountConsistent) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        const auto text = random_text(rng);
        const auto first = encode(text, clip_vocab());
        EXPECT_EQ(encode(text, clip_vocab()), first);
        EXPECT_EQ(count_tokens(text, clip_vocab()).content_tokens, first.size());
    }
}

TEST(TokenizerProperties, AppendingAWordAddsTokens) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        const auto text = random_text(rng);
        auto word = random_text(rng);
        if (word.find_first_not_of(" \t\r\n") == std::string::npos) word = "x";
        const auto before = count_tokens(text, clip_vocab()).content_tokens;
        const auto after = count_tokens(text + " " + word, clip_vocab()).content_tokens;
        EXPECT_GE(after, before + 1) << text << " + " << word;
    }
}

TEST(TokenizerProperties, NormalizationIdempotent) {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 300; ++i) {
        const auto text = random_text(rng);
        const auto lowered = unicode::to_lower(text);
        EXPECT_EQ(count_tokens(text, clip_vocab()), count_tokens(lowered, clip_vocab())) << text;
        EXPECT_EQ(count_tokens(text, clip_vocab()), count_tokens(normalize_text(text), clip_vocab())) << text;
    }
}
