#include <gtest/gtest.h>

#include <sstream>

#include "pipeline_fixture.hpp"
#include "stub_servers.hpp"
#include "texttiger/cli/cli.hpp"
#include "texttiger/cli/commands.hpp"
#include "texttiger/cli/manifest.hpp"
#include "texttiger/common/io.hpp"
#include "texttiger/witcub/dataset.hpp"

using namespace texttiger;
using namespace texttiger::cli;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string recorded_path() { return std::string(TEXTTIGER_FIXTURE_DIR) + "/wikipedia_recorded.json"; }

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("texttiger_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }

    RunResult run_cli(std::vector<std::string> args) {
        args.insert(args.begin(), {"--out-dir", dir_.string(), "--vocab-dir", std::string(TEXTTIGER_DATA_DIR) + "/clip"});
        // subcommand goes first so the global flags above fall through
        std::rotate(args.begin(), args.begin() + 4, args.begin() + 5);
        std::ostringstream out, err;
        const int code = run(args, out, err, [this](const char* name) -> std::optional<std::string> {
            const auto it = env_.find(name);
            return it == env_.end() ? std::nullopt : std::optional(it->second);
        });
        return {code, out.str(), err.str()};
    }

    RunResult build(const stubs::WikipediaStub& wiki) {
        const auto rows = stubs::write_wit_rows(wiki, dir_);
        return run_cli({"build-dataset", "--wit-rows", rows.string(), "--wiki-endpoint", wiki.api_url()});
    }

    std::vector<json> manifests(const std::string& command) {
        std::vector<json> out;
        if (!fs::exists(dir_ / "manifests")) return out;
        for (const auto& e : fs::directory_iterator(dir_ / "manifests")) {
            if (e.path().filename().string().starts_with(command + "-")) {
                out.push_back(json::parse(io::read_file(e.path())));
            }
        }
        return out;
    }

    fs::path dir_;
    std::map<std::string, std::string> env_;
};

}  // namespace

TEST_F(CliTest, BuildDatasetFiltersAndIsIdempotent) {
    stubs::WikipediaStub wiki(recorded_path());
    auto r = build(wiki);
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("instances: 4"), std::string::npos);
    EXPECT_NE(r.err.find("dead-image"), std::string::npos);
    const auto ds = witcub::load_dataset(dir_ / "dataset.jsonl");
    EXPECT_EQ(ds.instances.size(), stubs::kUsableWitRows);
    const std::string first = io::read_file(dir_ / "dataset.jsonl");
    const auto m1 = manifests("build-dataset");
    ASSERT_EQ(m1.size(), 1u);

    r = build(wiki);
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(io::read_file(dir_ / "dataset.jsonl"), first);
    const auto m2 = manifests("build-dataset");
    ASSERT_EQ(m2.size(), 1u);
    json a = m1[0], b = m2[0];
    a.erase("run");
    b.erase("run");
    EXPECT_EQ(a, b);
    EXPECT_TRUE(m2[0]["run"].contains("started"));
    EXPECT_EQ(m2[0]["outputs"][0]["path"], "dataset.jsonl");
}

TEST_F(CliTest, SummarizeNeedsEndpoint) {
    stubs::WikipediaStub wiki(recorded_path());
    ASSERT_EQ(build(wiki).code, 0);
    const auto r = run_cli({"summarize", "--dataset", (dir_ / "dataset.jsonl").string(), "--method", "texttiger"});
    EXPECT_EQ(r.code, kExitConfig);
    EXPECT_NE(r.err.find("LLM endpoint"), std::string::npos);
}

TEST_F(CliTest, SummarizeIterativeRecordsRounds) {
    stubs::WikipediaStub wiki(recorded_path());
    ASSERT_EQ(build(wiki).code, 0);
    stubs::LlmStub llm(stubs::escalating_summarizer(400, 20));
    env_[kEnvLlmEndpoint] = llm.endpoint();
    const auto r = run_cli({"summarize", "--dataset", (dir_ / "dataset.jsonl").string(), "--method",
                            "iterative-texttiger"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto records = io::read_jsonl(dir_ / "summaries.iterative-texttiger.jsonl");
    ASSERT_EQ(records.size(), stubs::kUsableWitRows);
    for (const auto& rec : records) {
        EXPECT_EQ(rec["status"], "ok");
        EXPECT_EQ(rec["iterations_used"], 2);
        EXPECT_EQ(rec["raw_outputs"].size(), 2u);
        EXPECT_TRUE(rec["compliant"].get<bool>());
    }
    EXPECT_EQ(llm.requests().size(), 2 * stubs::kUsableWitRows);
}

TEST_F(CliTest, FullPipelineWithConfigFile) {
    stubs::WikipediaStub wiki(recorded_path());
    stubs::LlmStub llm(stubs::truncating_summarizer(60));
    stubs::ImageBackendStub images;
    const auto features = stubs::write_closed_form_features(dir_ / "features");

    const auto rows = stubs::write_wit_rows(wiki, dir_);
    json config{{"wit_rows", rows.string()},
                {"dataset_path", (dir_ / "dataset.jsonl").string()},
                {"methods", {"cap-only", "cap-aug-only", "texttiger-wo-len", "texttiger", "iterative-texttiger"}},
                {"summarizer", {{"endpoint", llm.endpoint()}, {"model", "stub-llm"}}},
                {"backend", {{"endpoint", images.endpoint()}}},
                {"wikipedia", {{"endpoint", wiki.api_url()}, {"politeness_ms", 0}}},
                {"features",
                 {{"label_dists", features.label_dists.string()},
                  {"real", features.real.string()},
                  {"gen", features.gen.string()},
                  {"clip_img", features.clip_img.string()},
                  {"clip_txt", features.clip_txt.string()},
                  {"clip_ref_img", features.clip_ref_img.string()}}}};
    const auto config_path = dir_ / "run.json";
    io::write_file(config_path, config.dump(2));
    const std::string cfg = config_path.string();

    for (const char* cmd : {"build-dataset", "summarize", "assemble", "generate", "audit", "evaluate"}) {
        const auto r = run_cli({cmd, "--config", cfg});
        ASSERT_EQ(r.code, 0) << cmd << ": " << r.err;
    }

    const auto prompts = io::read_jsonl(dir_ / "prompts.jsonl");
    EXPECT_EQ(prompts.size(), 5 * stubs::kUsableWitRows);
    for (const auto& p : prompts) {
        EXPECT_TRUE(p["text"].get<std::string>().starts_with("Caption: "));
        EXPECT_EQ(p["text"].get<std::string>().find("Note:") != std::string::npos, p["method"] != "cap-only");
    }

    const auto audit = json::parse(io::read_file(dir_ / "audit.json"));
    EXPECT_EQ(audit["limit"], 256);
    ASSERT_EQ(audit["per_method"].size(), 5u);
    for (const auto& m : audit["per_method"]) EXPECT_EQ(m["violations"], 0);
    EXPECT_NE(io::read_file(dir_ / "audit.txt").find("Avg. tokens"), std::string::npos);

    const auto metrics = json::parse(io::read_file(dir_ / "metrics.json"));
    EXPECT_NEAR(metrics["fid"].get<double>(), 2.0, 1e-9);
    EXPECT_NEAR(metrics["is_mean"].get<double>(), 2.0, 1e-12);
    EXPECT_NEAR(metrics["clip_txt_img_mean"].get<double>(), 0.96, 1e-6);
    EXPECT_NEAR(metrics["clip_img_img_mean"].get<double>(), 1.0, 1e-12);

    const auto index = io::read_jsonl(dir_ / "images.black-forest-labs_FLUX.1-dev.jsonl");
    EXPECT_EQ(index.size(), prompts.size());
    for (const auto& rec : index) EXPECT_TRUE(fs::exists(rec["location"].get<std::string>()));

    for (const char* cmd : {"build-dataset", "summarize", "assemble", "generate", "audit", "evaluate"}) {
        EXPECT_EQ(manifests(cmd).size(), 1u) << cmd;
    }

    // rerun: byte-identical primary outputs, no new generation requests
    std::map<std::string, std::string> before;
    for (const char* f : {"dataset.jsonl", "summaries.texttiger.jsonl", "prompts.jsonl", "audit.json", "metrics.json",
                          "images.black-forest-labs_FLUX.1-dev.jsonl"}) {
        before[f] = io::read_file(dir_ / f);
    }
    const std::size_t generated = images.requests().size();
    for (const char* cmd : {"build-dataset", "summarize", "assemble", "generate", "audit", "evaluate"}) {
        ASSERT_EQ(run_cli({cmd, "--config", cfg}).code, 0) << cmd;
    }
    for (const auto& [f, contents] : before) EXPECT_EQ(io::read_file(dir_ / f), contents) << f;
    EXPECT_EQ(images.requests().size(), generated);

    // every output file belongs to exactly one manifest
    std::map<std::string, int> owners;
    for (const auto& e : fs::directory_iterator(dir_ / "manifests")) {
        for (const auto& o : json::parse(io::read_file(e.path()))["outputs"]) ++owners[o["path"].get<std::string>()];
    }
    for (const auto& [path, n] : owners) EXPECT_EQ(n, 1) << path;
}

TEST_F(CliTest, FlagsOverrideConfig) {
    RunConfig c = default_config([](const char*) { return std::nullopt; });
    merge_config(c, json{{"splits", 3}, {"audit", {{"limit", 100}}}});
    EXPECT_EQ(c.splits, 3u);
    EXPECT_EQ(c.audit_limit, 100u);

    stubs::ImageBackendStub images;
    io::write_file(dir_ / "run.json", json{{"audit", {{"limit", 10}}}}.dump());
    std::vector<json> prompts{
        prompt_record("a", {promptgen::PromptMethod::TextTiger, "Caption: a", {50}, {52}, false, false}, true)};
    io::write_file(dir_ / "prompts.jsonl", io::to_jsonl(prompts));

    auto r = run_cli({"audit", "--config", (dir_ / "run.json").string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json::parse(io::read_file(dir_ / "audit.json"))["per_method"][0]["violations"], 1);
    r = run_cli({"audit", "--config", (dir_ / "run.json").string(), "--limit", "60", "--clip-limit", "40"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto audit = json::parse(io::read_file(dir_ / "audit.json"));
    EXPECT_EQ(audit["limit"], 60);
    EXPECT_EQ(audit["per_method"][0]["violations"], 0);
    EXPECT_EQ(audit["per_method"][0]["clip_violations"], 1);
}

TEST_F(CliTest, ConfigRoundTripAndValidation) {
    RunConfig c = default_config([](const char* name) -> std::optional<std::string> {
        if (std::string(name) == kEnvLlmApiKey) return "secret";
        if (std::string(name) == kEnvLlmEndpoint) return "http://llm.local/v1/chat/completions";
        return std::nullopt;
    });
    c.methods = {promptgen::PromptMethod::TextTiger};
    c.audit_clip_limit = 77;
    const json j = to_json(c);
    EXPECT_EQ(j.dump().find("secret"), std::string::npos);
    RunConfig back = default_config([](const char*) { return std::nullopt; });
    merge_config(back, j);
    EXPECT_EQ(to_json(back), j);

    EXPECT_THROW(merge_config(back, json{{"no_such_key", 1}}), ConfigError);
    EXPECT_THROW(merge_config(back, json{{"budget", {{"t5", 1}}}}), ConfigError);
    EXPECT_THROW(merge_config(back, json{{"splits", "ten"}}), ConfigError);
    EXPECT_THROW(merge_config(back, json{{"methods", {"cap-everything"}}}), ConfigError);
}

TEST_F(CliTest, UsageAndInputErrors) {
    EXPECT_EQ(run_cli({"audit", "--prompts", (dir_ / "missing.jsonl").string()}).code, kExitConfig);
    EXPECT_EQ(run_cli({"evaluate"}).code, kExitConfig);
    EXPECT_EQ(run_cli({"assemble", "--method", "nonsense"}).code, kExitConfig);
    std::ostringstream out, err;
    EXPECT_EQ(run({}, out, err), kExitConfig);
    EXPECT_EQ(run({"--help"}, out, err), kExitOk);
}

TEST_F(CliTest, EvaluateClosedForms) {
    const auto f = stubs::write_closed_form_features(dir_);
    const auto r = run_cli({"evaluate", "--real-features", f.real.string(), "--gen-features", f.gen.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(json::parse(io::read_file(dir_ / "metrics.json"))["fid"].get<double>(), 2.0, 1e-9);
    EXPECT_NE(r.out.find("2.00"), std::string::npos);
    // a pool-feature file passed where label distributions are expected
    EXPECT_EQ(run_cli({"evaluate", "--label-dists", f.real.string()}).code, kExitFailure);
}
