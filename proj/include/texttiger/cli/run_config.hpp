#pragma once

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "texttiger/promptgen/image_gen.hpp"
#include "texttiger/promptgen/prompt.hpp"
#include "texttiger/tokenizer/budget.hpp"

namespace texttiger::cli {

inline constexpr const char* kEnvLlmEndpoint = "TEXTTIGER_LLM_ENDPOINT";
inline constexpr const char* kEnvLlmApiKey = "TEXTTIGER_LLM_API_KEY";
inline constexpr const char* kEnvImageBackend = "TEXTTIGER_IMAGE_BACKEND";
inline constexpr const char* kEnvWikiEndpoint = "TEXTTIGER_WIKI_ENDPOINT";
inline constexpr const char* kEnvVocabDir = "TEXTTIGER_VOCAB_DIR";

struct SummarizerSettings {
    std::string endpoint;
    std::optional<std::string> api_key;  // never serialized
    std::string model = "llama-3.3-70b-instruct";
    int seed = 0;
    std::optional<int> max_output_tokens;  // method default when unset
    double temperature = 0.0;
    int max_iterations = 3;
    int timeout_ms = 120000;
};

struct BackendSettings {
    std::string endpoint;
    std::string model = promptgen::kDefaultImageModel;
    promptgen::ImageGenRequest defaults;  // prompt unused
    int timeout_ms = 600000;
};

struct WikipediaSettings {
    std::string endpoint = "https://en.wikipedia.org/w/api.php";
    std::string user_agent = "texttiger/1.0 (dataset builder)";
    int politeness_ms = 100;
};

struct FeaturePaths {
    std::optional<std::filesystem::path> label_dists;
    std::optional<std::filesystem::path> real;
    std::optional<std::filesystem::path> gen;
    std::optional<std::filesystem::path> clip_img;
    std::optional<std::filesystem::path> clip_txt;
    std::optional<std::filesystem::path> clip_ref_img;
};

/// Everything a command needs. Resolved from defaults, then environment,
/// then the JSON config file, then flags.
struct RunConfig {
    std::optional<std::filesystem::path> wit_rows;
    std::optional<std::filesystem::path> dataset_path;
    std::vector<std::filesystem::path> summaries;
    std::optional<std::filesystem::path> prompts_path;
    std::optional<std::filesystem::path> out;  // explicit primary output
    std::vector<promptgen::PromptMethod> methods;
    std::filesystem::path output_dir = ".";
    std::filesystem::path vocab_dir;
    std::size_t parallel = 4;
    tokenizer::TokenBudget budget;
    SummarizerSettings summarizer;
    BackendSettings backend;
    WikipediaSettings wikipedia;
    FeaturePaths features;
    std::size_t splits = 1;
    std::size_t audit_limit = 256;
    std::optional<std::size_t> audit_clip_limit;
};

using EnvLookup = std::function<std::optional<std::string>(const char*)>;
std::optional<std::string> process_env(const char* name);

/// Compile-time vocabulary location.
std::filesystem::path default_vocab_dir();

RunConfig default_config(const EnvLookup& env = process_env);

/// Overlays the keys present in `j`. Unknown keys and wrong types raise ConfigError.
void merge_config(RunConfig& config, const nlohmann::json& j);
void merge_config_file(RunConfig& config, const std::filesystem::path& path);

/// Canonical form used for the manifest hash. The API key is left out.
nlohmann::json to_json(const RunConfig& config);

}  // namespace texttiger::cli
