#include "texttiger/cli/run_config.hpp"

#include <set>

#include "texttiger/common/io.hpp"

#ifndef TEXTTIGER_DEFAULT_VOCAB_DIR
#define TEXTTIGER_DEFAULT_VOCAB_DIR "data/clip"
#endif

namespace texttiger::cli {

using nlohmann::json;
namespace fs = std::filesystem;

std::optional<std::string> process_env(const char* name) {
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0') return std::nullopt;
    return std::string(v);
}

fs::path default_vocab_dir() { return TEXTTIGER_DEFAULT_VOCAB_DIR; }

RunConfig default_config(const EnvLookup& env) {
    RunConfig c;
    c.vocab_dir = env(kEnvVocabDir).value_or(default_vocab_dir().string());
    if (auto v = env(kEnvLlmEndpoint)) c.summarizer.endpoint = *v;
    c.summarizer.api_key = env(kEnvLlmApiKey);
    if (auto v = env(kEnvImageBackend)) c.backend.endpoint = *v;
    if (auto v = env(kEnvWikiEndpoint)) c.wikipedia.endpoint = *v;
    return c;
}

namespace {

// Reads typed values out of one JSON object and rejects keys nobody asked for.
class Section {
public:
    Section(const json& j, std::string where) : j_(j), where_(std::move(where)) {
        if (!j_.is_object()) throw ConfigError(where_ + " must be a JSON object");
    }
    void done() const {
        for (const auto& [key, _] : j_.items()) {
            if (!seen_.contains(key)) throw ConfigError("unknown config key " + where_ + "." + key);
        }
    }

    template <typename T>
    void read(const char* key, T& target) {
        seen_.insert(key);
        if (!j_.contains(key)) return;
        try {
            target = j_.at(key).get<T>();
        } catch (const json::exception&) {
            throw ConfigError("config key " + where_ + "." + key + " has the wrong type");
        }
    }

    template <typename T>
    void read(const char* key, std::optional<T>& target) {
        seen_.insert(key);
        if (!j_.contains(key)) return;
        if (j_.at(key).is_null()) {
            target.reset();
            return;
        }
        T value{};
        read(key, value);
        target = std::move(value);
    }

    void read_path(const char* key, fs::path& target) {
        std::string s;
        read(key, s);
        if (j_.contains(key)) target = s;
    }

    void read_path(const char* key, std::optional<fs::path>& target) {
        std::optional<std::string> s = target ? std::optional(target->string()) : std::nullopt;
        read(key, s);
        target = s ? std::optional<fs::path>(*s) : std::nullopt;
    }

    std::optional<Section> sub(const char* key) {
        seen_.insert(key);
        if (!j_.contains(key)) return std::nullopt;
        return std::optional<Section>(std::in_place, j_.at(key), where_ + "." + key);
    }

private:
    const json& j_;
    std::string where_;
    std::set<std::string> seen_;
};

json opt_path(const std::optional<fs::path>& p) { return p ? json(p->string()) : json(nullptr); }

}  // namespace

void merge_config(RunConfig& c, const json& j) {
    Section root(j, "config");
    root.read_path("wit_rows", c.wit_rows);
    root.read_path("dataset_path", c.dataset_path);
    root.read_path("prompts_path", c.prompts_path);
    root.read_path("out", c.out);
    root.read_path("output_dir", c.output_dir);
    root.read_path("vocab_dir", c.vocab_dir);
    root.read("parallel", c.parallel);
    root.read("splits", c.splits);

    std::optional<std::vector<std::string>> summaries;
    root.read("summaries", summaries);
    if (summaries) c.summaries.assign(summaries->begin(), summaries->end());

    std::optional<std::vector<std::string>> methods;
    root.read("methods", methods);
    if (methods) {
        c.methods.clear();
        for (const auto& m : *methods) c.methods.push_back(promptgen::parse_prompt_method(m));
    }

    if (auto b = root.sub("budget")) {
        b->read("clip_limit", c.budget.clip_limit);
        b->read("t5_limit", c.budget.t5_limit);
        b->read("summary_budget", c.budget.summary_budget);
        b->done();
    }
    if (auto s = root.sub("summarizer")) {
        s->read("endpoint", c.summarizer.endpoint);
        s->read("model", c.summarizer.model);
        s->read("seed", c.summarizer.seed);
        s->read("max_output_tokens", c.summarizer.max_output_tokens);
        s->read("temperature", c.summarizer.temperature);
        s->read("max_iterations", c.summarizer.max_iterations);
        s->read("timeout_ms", c.summarizer.timeout_ms);
        s->done();
    }
    if (auto b = root.sub("backend")) {
        b->read("endpoint", c.backend.endpoint);
        b->read("model", c.backend.model);
        b->read("seed", c.backend.defaults.seed);
        b->read("guidance_scale", c.backend.defaults.guidance_scale);
        b->read("num_steps", c.backend.defaults.steps);
        b->read("width", c.backend.defaults.width);
        b->read("height", c.backend.defaults.height);
        b->read("max_sequence_length", c.backend.defaults.max_sequence_length);
        b->read("timeout_ms", c.backend.timeout_ms);
        b->done();
    }
    if (auto w = root.sub("wikipedia")) {
        w->read("endpoint", c.wikipedia.endpoint);
        w->read("user_agent", c.wikipedia.user_agent);
        w->read("politeness_ms", c.wikipedia.politeness_ms);
        w->done();
    }
    if (auto f = root.sub("features")) {
        f->read_path("label_dists", c.features.label_dists);
        f->read_path("real", c.features.real);
        f->read_path("gen", c.features.gen);
        f->read_path("clip_img", c.features.clip_img);
        f->read_path("clip_txt", c.features.clip_txt);
        f->read_path("clip_ref_img", c.features.clip_ref_img);
        f->done();
    }
    if (auto a = root.sub("audit")) {
        a->read("limit", c.audit_limit);
        a->read("clip_limit", c.audit_clip_limit);
        a->done();
    }
    root.done();
}

void merge_config_file(RunConfig& config, const fs::path& path) {
    json j = json::parse(io::read_file(path), nullptr, false);
    if (j.is_discarded()) throw ConfigError(path.string() + " is not valid JSON");
    merge_config(config, j);
}

json to_json(const RunConfig& c) {
    json methods = json::array();
    for (auto m : c.methods) methods.push_back(promptgen::to_string(m));
    json summaries = json::array();
    for (const auto& s : c.summaries) summaries.push_back(s.string());
    return json{
        {"wit_rows", opt_path(c.wit_rows)},
        {"dataset_path", opt_path(c.dataset_path)},
        {"summaries", summaries},
        {"prompts_path", opt_path(c.prompts_path)},
        {"out", opt_path(c.out)},
        {"methods", methods},
        {"output_dir", c.output_dir.string()},
        {"vocab_dir", c.vocab_dir.string()},
        {"parallel", c.parallel},
        {"splits", c.splits},
        {"budget",
         {{"clip_limit", c.budget.clip_limit},
          {"t5_limit", c.budget.t5_limit},
          {"summary_budget", c.budget.summary_budget}}},
        {"summarizer",
         {{"endpoint", c.summarizer.endpoint},
          {"model", c.summarizer.model},
          {"seed", c.summarizer.seed},
          {"max_output_tokens", c.summarizer.max_output_tokens ? json(*c.summarizer.max_output_tokens) : json()},
          {"temperature", c.summarizer.temperature},
          {"max_iterations", c.summarizer.max_iterations},
          {"timeout_ms", c.summarizer.timeout_ms}}},
        {"backend",
         {{"endpoint", c.backend.endpoint},
          {"model", c.backend.model},
          {"seed", c.backend.defaults.seed},
          {"guidance_scale", c.backend.defaults.guidance_scale},
          {"num_steps", c.backend.defaults.steps},
          {"width", c.backend.defaults.width},
          {"height", c.backend.defaults.height},
          {"max_sequence_length", c.backend.defaults.max_sequence_length},
          {"timeout_ms", c.backend.timeout_ms}}},
        {"wikipedia",
         {{"endpoint", c.wikipedia.endpoint},
          {"user_agent", c.wikipedia.user_agent},
          {"politeness_ms", c.wikipedia.politeness_ms}}},
        {"features",
         {{"label_dists", opt_path(c.features.label_dists)},
          {"real", opt_path(c.features.real)},
          {"gen", opt_path(c.features.gen)},
          {"clip_img", opt_path(c.features.clip_img)},
          {"clip_txt", opt_path(c.features.clip_txt)},
          {"clip_ref_img", opt_path(c.features.clip_ref_img)}}},
        {"audit",
         {{"limit", c.audit_limit}, {"clip_limit", c.audit_clip_limit ? json(*c.audit_clip_limit) : json()}}},
    };
}

}  // namespace texttiger::cli
