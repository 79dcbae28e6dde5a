#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace texttiger::cli {

inline constexpr const char* kToolVersion = "0.1.0";

/// Provenance for one command invocation. Everything except run.started is a
/// pure function of config and inputs, so reruns differ only in that field.
class Manifest {
public:
    Manifest(std::string command, const nlohmann::json& config, std::filesystem::path output_dir);

    void add_input(const std::filesystem::path& path);
    void add_output(const std::filesystem::path& path);
    void set_summary(nlohmann::json summary) { summary_ = std::move(summary); }

    const std::string& config_hash() const noexcept { return config_hash_; }
    nlohmann::json to_json() const;
    /// The same document with run.started removed, for comparisons.
    nlohmann::json stable_json() const;

    /// <output_dir>/manifests/<command>-<hash prefix>.json
    std::filesystem::path path() const;
    std::filesystem::path write() const;

private:
    nlohmann::json file_entry(const std::filesystem::path& path) const;

    std::string command_;
    nlohmann::json config_;
    std::string config_hash_;
    std::filesystem::path output_dir_;
    std::vector<nlohmann::json> inputs_;
    std::vector<nlohmann::json> outputs_;
    nlohmann::json summary_ = nlohmann::json::object();
    std::string started_;
};

}  // namespace texttiger::cli
