#pragma once

#include <chrono>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "texttiger/common/error.hpp"

namespace texttiger::promptgen {

class GenError : public Error {
public:
    GenError(const std::string& message, int status) : Error(message), status_(status) {}
    int status() const noexcept { return status_; }

private:
    int status_;
};

class GenTimeout : public GenError {
public:
    explicit GenTimeout(const std::string& message) : GenError(message, 0) {}
};

inline constexpr const char* kDefaultImageModel = "black-forest-labs/FLUX.1-dev";

struct ImageGenRequest {
    std::string prompt;
    int seed = 42;
    double guidance_scale = 3.5;
    int steps = 50;
    int width = 1024;
    int height = 1024;
    int max_sequence_length = 512;

    /// Throws std::invalid_argument on non-positive steps, size or sequence length.
    void validate() const;
};

/// {prompt, seed, guidance_scale, num_steps, width, height, max_sequence_length, model}
nlohmann::json to_json(const ImageGenRequest& request, const std::string& model);

struct ImageBackendConfig {
    std::string endpoint;
    std::string model = kDefaultImageModel;
    std::chrono::milliseconds timeout{600000};
};

struct GeneratedImageRef {
    std::string location;  // local path or URL
    std::string sha256;    // of the stored bytes; empty when the backend returned a location
    nlohmann::json request;
};

/// POSTs the request and resolves the reply's "image" field. A URL or an
/// existing path is returned as given; anything else is read as base64 image
/// bytes (an optional data: prefix is allowed) and stored at
/// `out_dir/<stem>.<ext>`, with the extension taken from the file signature.
/// Throws GenError(status) on HTTP failure or an unusable reply, GenTimeout on timeout.
GeneratedImageRef generate_image(const ImageGenRequest& request, const ImageBackendConfig& backend,
                                 const std::filesystem::path& out_dir, const std::string& stem);

}  // namespace texttiger::promptgen
