#include "texttiger/cli/manifest.hpp"

#include <chrono>
#include <ctime>

#include "texttiger/common/io.hpp"
#include "texttiger/metrics/features.hpp"
#include "texttiger/witcub/dataset.hpp"

namespace texttiger::cli {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string utc_now() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json versions() {
    return json{{"texttiger", kToolVersion},
                {"dataset_format", witcub::kDatasetFormatVersion},
                {"feature_format", std::string(metrics::kTfv1Magic)}};
}

}  // namespace

Manifest::Manifest(std::string command, const json& config, fs::path output_dir)
    : command_(std::move(command)),
      config_(config),
      config_hash_(io::sha256_hex(config.dump())),
      output_dir_(std::move(output_dir)),
      started_(utc_now()) {}

json Manifest::file_entry(const fs::path& path) const {
    std::string shown = path.lexically_normal().string();
    const auto rel = path.lexically_proximate(output_dir_);
    if (!rel.empty() && !rel.string().starts_with("..")) shown = rel.string();
    return json{{"path", shown}, {"sha256", io::sha256_hex(io::read_file(path))}};
}

void Manifest::add_input(const fs::path& path) { inputs_.push_back(file_entry(path)); }
void Manifest::add_output(const fs::path& path) { outputs_.push_back(file_entry(path)); }

json Manifest::stable_json() const {
    return json{{"command", command_},
                {"config_hash", config_hash_},
                {"config", config_},
                {"versions", versions()},
                {"inputs", inputs_},
                {"outputs", outputs_},
                {"summary", summary_}};
}

json Manifest::to_json() const {
    json j = stable_json();
    j["run"] = {{"started", started_}};
    return j;
}

fs::path Manifest::path() const {
    return output_dir_ / "manifests" / (command_ + "-" + config_hash_.substr(0, 12) + ".json");
}

fs::path Manifest::write() const {
    const auto p = path();
    fs::create_directories(p.parent_path());
    io::write_file(p, to_json().dump(2) + "\n");
    return p;
}

}  // namespace texttiger::cli
