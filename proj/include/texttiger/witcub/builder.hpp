#pragma once

#include <chrono>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "texttiger/tokenizer/vocabulary.hpp"
#include "texttiger/witcub/dataset.hpp"
#include "texttiger/witcub/wikipedia.hpp"

namespace texttiger::witcub {

class EmptyDataset : public Error {
public:
    using Error::Error;
};

/// One row of WiT metadata: a caption, its image and the linked entity pages.
struct WitRow {
    std::string id;  // optional; defaults to "wit-<row index>"
    std::string caption;
    std::string image_ref;
    std::vector<std::string> entity_urls;
};

/// {"id"?, "caption", "image_ref" | "image_url", "entity_urls": [...]} per line.
std::vector<WitRow> read_wit_rows(const std::filesystem::path& path);

class ImageProbe {
public:
    virtual ~ImageProbe() = default;
    virtual bool accessible(const std::string& image_ref) const = 0;
};

/// URLs: HEAD, falling back to GET when HEAD is refused; any 2xx is accessible.
/// Anything else is treated as a local path and must exist.
class HttpImageProbe : public ImageProbe {
public:
    explicit HttpImageProbe(std::string user_agent = "texttiger/1.0",
                            std::chrono::milliseconds timeout = std::chrono::seconds(20));
    bool accessible(const std::string& image_ref) const override;

private:
    std::string user_agent_;
    std::chrono::milliseconds timeout_;
};

struct DroppedRow {
    std::size_t row_index;
    std::string id;
    std::string reason;
};

struct BuildOptions {
    std::size_t parallel = 4;
    /// Called once per dropped row, in row order, after all fetches finish.
    std::function<void(const DroppedRow&)> on_drop;
};

/// Keeps rows whose image is accessible and whose every entity resolves.
/// Entity URLs are deduplicated within a row. Output order is input order
/// regardless of fetch completion order. Throws EmptyDataset when nothing survives.
Dataset build_dataset(const std::vector<WitRow>& rows, const EntitySource& entities, const ImageProbe& images,
                      const tokenizer::Vocabulary& vocab, const BuildOptions& options = {});

}  // namespace texttiger::witcub
