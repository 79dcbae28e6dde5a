#include <gtest/gtest.h>

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>

#include "stub_servers.hpp"
#include "texttiger/common/http.hpp"
#include "texttiger/tokenizer/clip_tokenizer.hpp"
#include "texttiger/witcub/builder.hpp"
#include "texttiger/witcub/matching.hpp"

using namespace texttiger;
using namespace texttiger::witcub;

namespace {

const tokenizer::Vocabulary& clip_vocab() {
    static const auto vocab = tokenizer::Vocabulary::load_directory(std::string(TEXTTIGER_DATA_DIR) + "/clip");
    return vocab;
}

std::string recorded_path() { return std::string(TEXTTIGER_FIXTURE_DIR) + "/wikipedia_recorded.json"; }

WikipediaConfig stub_config(const stubs::WikipediaStub& stub) {
    WikipediaConfig config;
    config.endpoint = stub.api_url();
    config.initial_backoff = std::chrono::milliseconds(1);
    config.politeness_delay = std::chrono::milliseconds(0);
    config.timeout = std::chrono::milliseconds(2000);
    return config;
}

EntityEntry entity(std::string name) {
    return {name, "About " + name + ".", "https://en.wikipedia.org/wiki/" + name};
}

WitCubInstance instance(std::string id, std::string caption, std::vector<EntityEntry> entities) {
    WitCubInstance inst{std::move(id), caption, "https://example.org/a.jpg", std::move(entities), {}};
    inst.caption_token_count = tokenizer::count_tokens(caption, clip_vocab());
    return inst;
}

// Serves canned entries; remembers nothing, so it is safe to share across threads.
class FakeEntities : public EntitySource {
public:
    EntityEntry fetch(std::string_view url) const override {
        const auto title = title_from_url(url);
        if (title.starts_with("missing")) throw NotFound("no article " + title);
        return {title, "Description of " + title + ".", std::string(url)};
    }
};

class FakeImages : public ImageProbe {
public:
    bool accessible(const std::string& ref) const override { return ref.find("dead") == std::string::npos; }
};

}  // namespace

TEST(TitleFromUrl, HandlesArticleUrlsAndTitles) {
    EXPECT_EQ(title_from_url("https://en.wikipedia.org/wiki/Phahurat_Road"), "Phahurat Road");
    EXPECT_EQ(title_from_url("https://en.wikipedia.org/wiki/Davenport,_Iowa#History"), "Davenport, Iowa");
    EXPECT_EQ(title_from_url("https://en.wikipedia.org/wiki/Caf%C3%A9"), "Café");
    EXPECT_EQ(title_from_url("https://en.wikipedia.org/w/index.php?title=River_Nore&oldid=1"), "River Nore");
    EXPECT_EQ(title_from_url("Credit_Island"), "Credit Island");
}

TEST(WikipediaClient, FetchesLeadExtract) {
    stubs::WikipediaStub stub(recorded_path());
    WikipediaClient client(stub_config(stub));
    const auto phahurat = fetch_entity_description("Phahurat Road", client);
    EXPECT_TRUE(phahurat.description.starts_with(
        "Phahurat or Pahurat sometimes described as Thailand's Little India"));
    EXPECT_EQ(phahurat.name, "Phahurat");
    EXPECT_TRUE(http::Url::is_absolute(phahurat.source_url));

    const auto court = fetch_entity_description("https://en.wikipedia.org/wiki/Constitutional_Court", client);
    EXPECT_TRUE(court.description.starts_with("A constitutional court is a high court"));
}

TEST(WikipediaClient, FollowsRedirectTitle) {
    stubs::WikipediaStub stub(recorded_path());
    WikipediaClient client(stub_config(stub));
    EXPECT_EQ(client.fetch("Nore").name, "River Nore");
}

TEST(WikipediaClient, MissingPageIsNotFound) {
    stubs::WikipediaStub stub(recorded_path());
    WikipediaClient client(stub_config(stub));
    EXPECT_THROW(client.fetch("zzqq-not-a-page"), NotFound);
    EXPECT_EQ(stub.request_count(), 1u);
}

TEST(WikipediaClient, EmptyExtractIsEmptyDescription) {
    stubs::WikipediaStub stub(recorded_path());
    WikipediaClient client(stub_config(stub));
    EXPECT_THROW(client.fetch("Blank Article"), EmptyDescription);
}

TEST(WikipediaClient, RetriesServerErrorsThenSucceeds) {
    stubs::WikipediaStub stub(recorded_path());
    WikipediaClient client(stub_config(stub));
    stub.fail_next(2, 503);
    EXPECT_EQ(client.fetch("Kilkenny").name, "Kilkenny");
    EXPECT_EQ(stub.request_count(), 3u);
}

TEST(WikipediaClient, GivesUpAfterThreeAttempts) {
    stubs::WikipediaStub stub(recorded_path());
    WikipediaClient client(stub_config(stub));
    stub.fail_next(10, 502);
    try {
        client.fetch("Kilkenny");
        FAIL() << "expected FetchError";
    } catch (const FetchError& e) {
        EXPECT_EQ(e.status(), 502);
    }
    EXPECT_EQ(stub.request_count(), 3u);
}

TEST(WikipediaClient, ClientErrorsAreNotRetried) {
    stubs::WikipediaStub stub(recorded_path());
    WikipediaClient client(stub_config(stub));
    stub.fail_next(1, 403);
    EXPECT_THROW(client.fetch("Kilkenny"), FetchError);
    EXPECT_EQ(stub.request_count(), 1u);
}

TEST(WikipediaClient, UnreachableEndpointIsFetchError) {
    WikipediaConfig config;
    config.endpoint = "http://127.0.0.1:1/w/api.php";
    config.initial_backoff = std::chrono::milliseconds(1);
    config.politeness_delay = std::chrono::milliseconds(0);
    WikipediaClient client(config);
    try {
        client.fetch("Kilkenny");
        FAIL() << "expected FetchError";
    } catch (const FetchError& e) {
        EXPECT_EQ(e.status(), 0);
    }
}

TEST(BuildDataset, DropsRowWithDeadImage) {
    stubs::WikipediaStub stub(recorded_path());
    WikipediaClient client(stub_config(stub));
    HttpImageProbe probe;
    const std::vector<WitRow> rows = {
        {"a", "The River Nore at Kilkenny", stub.image_url("nore.jpg"),
         {"https://en.wikipedia.org/wiki/River_Nore", "https://en.wikipedia.org/wiki/Kilkenny"}},
        {"b", "Phahurat Road", stub.image_url("dead-link.jpg"), {"https://en.wikipedia.org/wiki/Phahurat_Road"}},
        {"c", "Davenport as viewed from Credit Island", stub.image_url("davenport.jpg"),
         {"https://en.wikipedia.org/wiki/Davenport,_Iowa", "https://en.wikipedia.org/wiki/Credit_Island"}},
    };
    std::vector<DroppedRow> dropped;
    BuildOptions options;
    options.on_drop = [&](const DroppedRow& d) { dropped.push_back(d); };
    const auto ds = build_dataset(rows, client, probe, clip_vocab(), options);
    ASSERT_EQ(ds.instances.size(), 2u);
    EXPECT_EQ(ds.instances[0].id, "a");
    EXPECT_EQ(ds.instances[1].id, "c");
    ASSERT_EQ(dropped.size(), 1u);
    EXPECT_EQ(dropped[0].id, "b");
    EXPECT_NE(dropped[0].reason.find("image"), std::string::npos);
    EXPECT_EQ(ds.stats, compute_stats(ds.instances));
    EXPECT_EQ(ds.instances[0].caption_token_count,
              tokenizer::count_tokens("The River Nore at Kilkenny", clip_vocab()));
}

TEST(BuildDataset, HeadRefusedFallsBackToGet) {
    stubs::WikipediaStub stub(recorded_path());
    stub.refuse_head(true);
    HttpImageProbe probe;
    EXPECT_TRUE(probe.accessible(stub.image_url("ok.jpg")));
    EXPECT_FALSE(probe.accessible(stub.image_url("dead.jpg")));
    EXPECT_FALSE(probe.accessible("/definitely/not/here.jpg"));
}

TEST(BuildDataset, DropsRowWithFailedEntityFetch) {
    stubs::WikipediaStub stub(recorded_path());
    WikipediaClient client(stub_config(stub));
    FakeImages images;
    const std::vector<WitRow> rows = {
        {"ok", "Kilkenny castle", "https://img/ok.jpg", {"https://en.wikipedia.org/wiki/Kilkenny"}},
        {"bad", "Somewhere", "https://img/ok2.jpg", {"https://en.wikipedia.org/wiki/Zzqq_not_a_page"}},
        {"blank", "Blank", "https://img/ok3.jpg", {"https://en.wikipedia.org/wiki/Blank_Article"}},
    };
    BuildOptions options;
    options.on_drop = [](const DroppedRow&) {};
    const auto ds = build_dataset(rows, client, images, clip_vocab(), options);
    ASSERT_EQ(ds.instances.size(), 1u);
    for (const auto& inst : ds.instances) {
        for (const auto& e : inst.entities) EXPECT_FALSE(e.description.empty());
    }
}

TEST(BuildDataset, DeduplicatesEntityUrlsWithinRow) {
    FakeEntities entities;
    FakeImages images;
    const std::vector<WitRow> rows = {{"", "Nore and Nore again", "x.jpg",
                                       {"https://en.wikipedia.org/wiki/Nore", "https://en.wikipedia.org/wiki/Kilkenny",
                                        "https://en.wikipedia.org/wiki/Nore"}}};
    const auto ds = build_dataset(rows, entities, images, clip_vocab());
    ASSERT_EQ(ds.instances.size(), 1u);
    EXPECT_EQ(ds.instances[0].id, "wit-0");
    // Set semantics: distinct URLs in first-seen order.
    std::vector<std::string> urls;
    for (const auto& e : ds.instances[0].entities) urls.push_back(e.source_url);
    EXPECT_EQ(urls, (std::vector<std::string>{"https://en.wikipedia.org/wiki/Nore",
                                              "https://en.wikipedia.org/wiki/Kilkenny"}));
}

TEST(BuildDataset, AllRowsDroppedIsEmptyDataset) {
    FakeEntities entities;
    FakeImages images;
    const std::vector<WitRow> rows = {{"", "c", "dead.jpg", {}}, {"", "d", "ok.jpg", {"missing_page"}}};
    BuildOptions options;
    options.on_drop = [](const DroppedRow&) {};
    EXPECT_THROW(build_dataset(rows, entities, images, clip_vocab(), options), EmptyDataset);
    EXPECT_THROW(build_dataset({}, entities, images, clip_vocab(), options), EmptyDataset);
}

TEST(BuildDataset, OutputIndependentOfParallelism) {
    FakeEntities entities;
    FakeImages images;
    std::vector<WitRow> rows;
    for (int i = 0; i < 40; ++i) {
        rows.push_back({"", "Caption number " + std::to_string(i), i % 7 == 0 ? "dead.jpg" : "ok.jpg",
                        {"https://en.wikipedia.org/wiki/Entity_" + std::to_string(i % 5)}});
    }
    BuildOptions serial;
    serial.parallel = 1;
    serial.on_drop = [](const DroppedRow&) {};
    BuildOptions parallel = serial;
    parallel.parallel = 8;
    EXPECT_EQ(build_dataset(rows, entities, images, clip_vocab(), serial),
              build_dataset(rows, entities, images, clip_vocab(), parallel));
}

TEST(MatchEntities, SpecExamples) {
    const std::vector<EntityEntry> list = {entity("Nore"), entity("Kilkenny"), entity("Danube")};
    const auto matched = match_entities("The River Nore at Kilkenny", list);
    ASSERT_EQ(matched.size(), 2u);
    EXPECT_EQ(matched[0].name, "Nore");
    EXPECT_EQ(matched[1].name, "Kilkenny");
    EXPECT_TRUE(match_entities("", list).empty());

    const std::vector<EntityEntry> davenport = {entity("Davenport")};
    EXPECT_EQ(match_entities("Davenport, Iowa: downtown Davenport at dusk", davenport).size(), 1u);
}

TEST(MatchEntities, CaptionOrderCaseAndBoundaries) {
    const std::vector<EntityEntry> list = {entity("Kilkenny"), entity("nore"), entity("Ken")};
    const auto matched = match_entities("the NORE flows past kilkenny", list);
    ASSERT_EQ(matched.size(), 2u);
    EXPECT_EQ(matched[0].name, "nore");
    EXPECT_EQ(matched[1].name, "Kilkenny");
    // "Ken" occurs only inside "kilkenny": not a whole phrase.
    EXPECT_TRUE(match_entities("Kilkenny", std::vector<EntityEntry>{entity("Ken")}).empty());
    EXPECT_EQ(match_entities("Zürich lake", std::vector<EntityEntry>{entity("ZÜRICH")}).size(), 1u);
}

namespace {

// Independent oracle: ASCII-only, character-by-character scan.
std::vector<std::string> brute_force_match(const std::string& caption, const std::vector<EntityEntry>& list) {
    auto lower = [](std::string s) {
        for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        return s;
    };
    auto word = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; };
    const auto text = lower(caption);
    std::vector<std::pair<std::size_t, std::size_t>> found;  // (position, list index)
    std::vector<std::string> names_seen;
    for (std::size_t k = 0; k < list.size(); ++k) {
        const auto name = lower(list[k].name);
        if (std::find(names_seen.begin(), names_seen.end(), name) != names_seen.end()) continue;
        for (std::size_t p = 0; p + name.size() <= text.size(); ++p) {
            bool eq = true;
            for (std::size_t q = 0; q < name.size(); ++q) eq = eq && text[p + q] == name[q];
            const bool left = p == 0 || !word(text[p - 1]);
            const bool right = p + name.size() == text.size() || !word(text[p + name.size()]);
            if (eq && left && right) {
                found.push_back({p, k});
                names_seen.push_back(name);
                break;
            }
        }
    }
    std::stable_sort(found.begin(), found.end(), [](auto a, auto b) { return a.first < b.first; });
    std::vector<std::string> out;
    for (auto [p, k] : found) out.push_back(list[k].name);
    return out;
}

}  // namespace

TEST(MatchEntities, AgreesWithBruteForceOracle) {
    std::mt19937_64 rng(5);
    const std::vector<std::string> words = {"river", "Nore", "at", "Kilkenny", "castle", "new", "york", "New York",
                                            "York", "bridge", "st.", "Mary's", "cathedral", "nor", "Kilk"};
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    for (int trial = 0; trial < 500; ++trial) {
        std::string caption;
        const auto n = rng() % 10;
        for (std::size_t i = 0; i < n; ++i) caption += (i ? (rng() % 4 == 0 ? ", " : " ") : "") + words[pick(rng)];
        std::vector<EntityEntry> list;
        const auto m = rng() % 6;
        for (std::size_t i = 0; i < m; ++i) list.push_back(entity(words[pick(rng)]));

        std::vector<std::string> got;
        for (const auto& e : match_entities(caption, list)) got.push_back(e.name);
        ASSERT_EQ(got, brute_force_match(caption, list)) << "caption: " << caption;
    }
}

TEST(DatasetIo, RoundTripIsIdentity) {
    const auto ds = make_dataset({
        instance("a", "The River Nore at Kilkenny", {entity("Nore"), entity("Kilkenny")}),
        instance("b", "Phra Nakhon — ภูเขาทอง, Bangkok", {}),
    });
    std::stringstream buffer;
    save_dataset(ds, buffer);
    EXPECT_EQ(load_dataset(buffer), ds);
}

TEST(DatasetIo, NonAsciiCaptionIsByteIdentical) {
    const std::string caption = "Phra Nakhon district, Bangkok · กรุงเทพมหานคร · Zürich";
    const auto ds = make_dataset({instance("x", caption, {entity("Phra Nakhon")})});
    std::stringstream buffer;
    save_dataset(ds, buffer);
    const auto loaded = load_dataset(buffer);
    EXPECT_EQ(loaded.instances.at(0).caption, caption);
}

TEST(DatasetIo, TruncatedFileIsParseError) {
    const auto ds = make_dataset({instance("a", "one", {}), instance("b", "two", {}), instance("c", "three", {})});
    std::stringstream buffer;
    save_dataset(ds, buffer);
    const auto text = buffer.str();

    // Cut mid-record.
    std::istringstream mid(text.substr(0, text.size() - 10));
    EXPECT_THROW(load_dataset(mid), ParseError);
    // Cut on a record boundary.
    const auto last_line = text.rfind('\n', text.size() - 2);
    std::istringstream boundary(text.substr(0, last_line + 1));
    EXPECT_THROW(load_dataset(boundary), ParseError);
    std::istringstream empty("");
    EXPECT_THROW(load_dataset(empty), ParseError);
}

TEST(DatasetIo, MalformedRecordReportsLine) {
    std::istringstream in(
        R"({"format":"witcub","version":1,"stats":{"instance_count":1,"mean_entities_per_instance":0.0,"mean_caption_tokens":1.0}})"
        "\n{\"id\":\"a\",\"caption\":\"x\"\n");
    try {
        load_dataset(in);
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
    }
}

TEST(DatasetIo, VersionMismatch) {
    std::istringstream newer(R"({"format":"witcub","version":2,"stats":{}})"
                             "\n");
    EXPECT_THROW(load_dataset(newer), VersionError);
    std::istringstream foreign(R"({"format":"other","version":1})"
                               "\n");
    EXPECT_THROW(load_dataset(foreign), VersionError);
}

TEST(DatasetIo, TamperedStatsRejected) {
    auto ds = make_dataset({instance("a", "one two", {entity("One")})});
    ds.stats.mean_entities_per_instance = 2.0;
    std::stringstream buffer;
    save_dataset(ds, buffer);
    EXPECT_THROW(load_dataset(buffer), ParseError);
}

TEST(DatasetProperties, StatsRecomputeExactly) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<WitCubInstance> instances;
        const auto n = 1 + rng() % 30;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<EntityEntry> es;
            for (std::size_t k = 0; k < rng() % 5; ++k) es.push_back(entity("E" + std::to_string(k)));
            WitCubInstance inst{"id" + std::to_string(i), "caption", "img", es, {rng() % 80}};
            instances.push_back(inst);
        }
        auto ds = make_dataset(instances);
        std::shuffle(instances.begin(), instances.end(), rng);
        EXPECT_EQ(compute_stats(instances), ds.stats);
        std::stringstream buffer;
        save_dataset(ds, buffer);
        EXPECT_EQ(load_dataset(buffer), ds);
    }
}
