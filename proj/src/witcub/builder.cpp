#include "texttiger/witcub/builder.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <unordered_set>

#include <json.hpp>

#include "texttiger/common/http.hpp"
#include "texttiger/common/io.hpp"
#include "texttiger/common/parallel.hpp"
#include "texttiger/tokenizer/clip_tokenizer.hpp"

namespace texttiger::witcub {

using nlohmann::json;

std::vector<WitRow> read_wit_rows(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::vector<WitRow> rows;
    io::for_each_jsonl(in, [&](const json& record, std::size_t line) {
        if (!record.is_object()) throw ParseError("row must be a JSON object", line);
        WitRow row;
        try {
            row.id = record.value("id", std::string{});
            row.caption = record.at("caption").get<std::string>();
            row.image_ref = record.contains("image_ref") ? record.at("image_ref").get<std::string>()
                                                         : record.at("image_url").get<std::string>();
            row.entity_urls = record.value("entity_urls", std::vector<std::string>{});
        } catch (const json::exception& e) {
            throw ParseError(std::string("bad WiT row: ") + e.what(), line);
        }
        rows.push_back(std::move(row));
    });
    return rows;
}

HttpImageProbe::HttpImageProbe(std::string user_agent, std::chrono::milliseconds timeout)
    : user_agent_(std::move(user_agent)), timeout_(timeout) {}

bool HttpImageProbe::accessible(const std::string& image_ref) const {
    if (!http::Url::is_absolute(image_ref)) {
        std::error_code ec;
        return std::filesystem::is_regular_file(image_ref, ec);
    }
    http::ClientOptions options;
    options.user_agent = user_agent_;
    options.connect_timeout = timeout_;
    options.read_timeout = timeout_;
    try {
        const auto url = http::Url::parse(image_ref);
        const auto response = http::head(url, options);
        if (http::is_success(response.status)) return true;
        // Some hosts refuse HEAD outright.
        if (response.status == 405 || response.status == 403 || response.status == 501) {
            return http::is_success(http::get(url, options).status);
        }
        return false;
    } catch (const Error&) {
        return false;
    }
}

Dataset build_dataset(const std::vector<WitRow>& rows, const EntitySource& entities, const ImageProbe& images,
                      const tokenizer::Vocabulary& vocab, const BuildOptions& options) {
    struct Outcome {
        std::optional<WitCubInstance> instance;
        std::string drop_reason;
    };
    std::vector<Outcome> outcomes(rows.size());

    parallel_for_index(rows.size(), options.parallel, [&](std::size_t i) {
        const auto& row = rows[i];
        auto& outcome = outcomes[i];
        if (row.caption.empty()) {
            outcome.drop_reason = "empty caption";
            return;
        }
        if (!images.accessible(row.image_ref)) {
            outcome.drop_reason = "image not accessible: " + row.image_ref;
            return;
        }
        WitCubInstance inst;
        inst.id = row.id.empty() ? "wit-" + std::to_string(i) : row.id;
        inst.caption = row.caption;
        inst.image_ref = row.image_ref;
        std::unordered_set<std::string> seen_urls;
        for (const auto& url : row.entity_urls) {
            if (!seen_urls.insert(url).second) continue;
            try {
                inst.entities.push_back(entities.fetch(url));
            } catch (const Error& e) {
                outcome.drop_reason = "entity fetch failed for " + url + ": " + e.what();
                return;
            }
        }
        inst.caption_token_count = tokenizer::count_tokens(inst.caption, vocab);
        outcome.instance = std::move(inst);
    });

    std::vector<WitCubInstance> kept;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        if (outcomes[i].instance) {
            kept.push_back(std::move(*outcomes[i].instance));
            continue;
        }
        DroppedRow dropped{i, rows[i].id.empty() ? "wit-" + std::to_string(i) : rows[i].id,
                           outcomes[i].drop_reason};
        if (options.on_drop) {
            options.on_drop(dropped);
        } else {
            std::clog << "dropped row " << dropped.row_index << " (" << dropped.id << "): " << dropped.reason << '\n';
        }
    }
    if (kept.empty()) throw EmptyDataset("no valid rows: every row was dropped");
    return make_dataset(std::move(kept));
}

}  // namespace texttiger::witcub
