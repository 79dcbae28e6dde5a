#include "texttiger/witcub/dataset.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "texttiger/common/io.hpp"

namespace texttiger::witcub {

using nlohmann::json;

namespace {

json to_json(const EntityEntry& e) {
    return json{{"name", e.name}, {"description", e.description}, {"source_url", e.source_url}};
}

json to_json(const WitCubInstance& inst) {
    json entities = json::array();
    for (const auto& e : inst.entities) entities.push_back(to_json(e));
    return json{{"id", inst.id},
                {"caption", inst.caption},
                {"image_ref", inst.image_ref},
                {"caption_token_count", inst.caption_token_count.content_tokens},
                {"entities", std::move(entities)}};
}

json to_json(const DatasetStats& s) {
    return json{{"instance_count", s.instance_count},
                {"mean_entities_per_instance", s.mean_entities_per_instance},
                {"mean_caption_tokens", s.mean_caption_tokens}};
}

template <typename T>
T field(const json& record, const char* name, std::size_t line) {
    auto it = record.find(name);
    if (it == record.end()) throw ParseError(std::string("missing field '") + name + "'", line);
    try {
        return it->get<T>();
    } catch (const json::exception&) {
        throw ParseError(std::string("field '") + name + "' has the wrong type", line);
    }
}

WitCubInstance instance_from_json(const json& record, std::size_t line) {
    if (!record.is_object()) throw ParseError("instance record must be an object", line);
    WitCubInstance inst;
    inst.id = field<std::string>(record, "id", line);
    inst.caption = field<std::string>(record, "caption", line);
    inst.image_ref = field<std::string>(record, "image_ref", line);
    inst.caption_token_count.content_tokens = field<std::size_t>(record, "caption_token_count", line);
    if (inst.caption.empty()) throw ParseError("caption is empty", line);
    const auto entities = field<json>(record, "entities", line);
    if (!entities.is_array()) throw ParseError("'entities' must be an array", line);
    for (const auto& e : entities) {
        if (!e.is_object()) throw ParseError("entity must be an object", line);
        inst.entities.push_back({field<std::string>(e, "name", line), field<std::string>(e, "description", line),
                                 field<std::string>(e, "source_url", line)});
    }
    return inst;
}

}  // namespace

DatasetStats compute_stats(std::span<const WitCubInstance> instances) {
    DatasetStats stats;
    stats.instance_count = instances.size();
    if (instances.empty()) return stats;
    std::size_t entities = 0;
    std::size_t tokens = 0;
    for (const auto& inst : instances) {
        entities += inst.entities.size();
        tokens += inst.caption_token_count.content_tokens;
    }
    const auto n = static_cast<double>(instances.size());
    stats.mean_entities_per_instance = static_cast<double>(entities) / n;
    stats.mean_caption_tokens = static_cast<double>(tokens) / n;
    return stats;
}

Dataset make_dataset(std::vector<WitCubInstance> instances) {
    Dataset ds;
    ds.instances = std::move(instances);
    ds.stats = compute_stats(ds.instances);
    return ds;
}

void save_dataset(const Dataset& ds, std::ostream& out) {
    json header{{"format", kDatasetFormatName}, {"version", kDatasetFormatVersion}, {"stats", to_json(ds.stats)}};
    out << header.dump() << '\n';
    for (const auto& inst : ds.instances) out << to_json(inst).dump() << '\n';
}

void save_dataset(const Dataset& ds, const std::filesystem::path& path) {
    std::ostringstream buffer;
    save_dataset(ds, buffer);
    io::write_file(path, buffer.str());
}

Dataset load_dataset(std::istream& in) {
    Dataset ds;
    bool have_header = false;
    std::size_t last_line = 0;
    io::for_each_jsonl(in, [&](const json& record, std::size_t line) {
        last_line = line;
        if (!have_header) {
            if (!record.is_object() || !record.contains("format")) {
                throw ParseError("first record must be the dataset header", line);
            }
            if (record.at("format") != kDatasetFormatName) {
                throw VersionError("not a witcub dataset (format " + record.at("format").dump() + ")");
            }
            const auto version = field<int>(record, "version", line);
            if (version != kDatasetFormatVersion) {
                throw VersionError("unsupported witcub dataset version " + std::to_string(version));
            }
            const auto stats = field<json>(record, "stats", line);
            ds.stats.instance_count = field<std::size_t>(stats, "instance_count", line);
            ds.stats.mean_entities_per_instance = field<double>(stats, "mean_entities_per_instance", line);
            ds.stats.mean_caption_tokens = field<double>(stats, "mean_caption_tokens", line);
            have_header = true;
            return;
        }
        ds.instances.push_back(instance_from_json(record, line));
    });
    if (!have_header) throw ParseError("empty dataset file: no header", 1);
    if (ds.instances.size() != ds.stats.instance_count) {
        throw ParseError("truncated dataset: header announces " + std::to_string(ds.stats.instance_count) +
                             " instances, found " + std::to_string(ds.instances.size()),
                         last_line + 1);
    }
    if (compute_stats(ds.instances) != ds.stats) {
        throw ParseError("stored stats do not match the instances", 1);
    }
    return ds;
}

Dataset load_dataset(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open dataset " + path.string());
    return load_dataset(in);
}

}  // namespace texttiger::witcub
