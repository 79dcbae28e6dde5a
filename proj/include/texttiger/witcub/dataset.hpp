#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "texttiger/common/error.hpp"
#include "texttiger/tokenizer/budget.hpp"

namespace texttiger::witcub {

/// One entity of a caption with its Wikipedia lead-section extract.
struct EntityEntry {
    std::string name;
    std::string description;
    std::string source_url;

    bool operator==(const EntityEntry&) const = default;
};

struct WitCubInstance {
    std::string id;
    std::string caption;
    std::string image_ref;  // URL or local path
    std::vector<EntityEntry> entities;
    tokenizer::TokenCount caption_token_count;

    bool operator==(const WitCubInstance&) const = default;
};

struct DatasetStats {
    std::size_t instance_count = 0;
    double mean_entities_per_instance = 0.0;
    double mean_caption_tokens = 0.0;

    bool operator==(const DatasetStats&) const = default;
};

struct Dataset {
    std::vector<WitCubInstance> instances;
    DatasetStats stats;

    bool operator==(const Dataset&) const = default;
};

/// Means are computed from integer totals, so the result does not depend on
/// instance order and is reproducible bit for bit.
DatasetStats compute_stats(std::span<const WitCubInstance> instances);

/// Wraps instances and fills in their stats.
Dataset make_dataset(std::vector<WitCubInstance> instances);

inline constexpr int kDatasetFormatVersion = 1;
inline constexpr const char* kDatasetFormatName = "witcub";

/// JSON-lines: a header {"format":"witcub","version":1,"stats":{...}} followed
/// by one instance per line.
void save_dataset(const Dataset& ds, std::ostream& out);
void save_dataset(const Dataset& ds, const std::filesystem::path& path);

/// Throws VersionError for a foreign or newer header, ParseError(line) for
/// malformed records, a missing header, truncation, or stats that do not
/// match the instances.
Dataset load_dataset(std::istream& in);
Dataset load_dataset(const std::filesystem::path& path);

}  // namespace texttiger::witcub
