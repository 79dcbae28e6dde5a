#include "texttiger/promptgen/image_gen.hpp"

#include <stdexcept>

#include "texttiger/common/http.hpp"
#include "texttiger/common/io.hpp"

namespace texttiger::promptgen {

using nlohmann::json;

void ImageGenRequest::validate() const {
    if (steps <= 0) throw std::invalid_argument("steps must be positive");
    if (width <= 0 || height <= 0) throw std::invalid_argument("image size must be positive");
    if (max_sequence_length <= 0) throw std::invalid_argument("max_sequence_length must be positive");
}

json to_json(const ImageGenRequest& request, const std::string& model) {
    return json{{"prompt", request.prompt},
                {"seed", request.seed},
                {"guidance_scale", request.guidance_scale},
                {"num_steps", request.steps},
                {"width", request.width},
                {"height", request.height},
                {"max_sequence_length", request.max_sequence_length},
                {"model", model}};
}

namespace {

std::string extension_for(std::string_view bytes) {
    if (bytes.starts_with("\x89PNG\r\n\x1a\n")) return ".png";
    if (bytes.starts_with("\xff\xd8\xff")) return ".jpg";
    if (bytes.size() >= 12 && bytes.substr(0, 4) == "RIFF" && bytes.substr(8, 4) == "WEBP") return ".webp";
    return ".bin";
}

}  // namespace

GeneratedImageRef generate_image(const ImageGenRequest& request, const ImageBackendConfig& backend,
                                 const std::filesystem::path& out_dir, const std::string& stem) {
    request.validate();
    if (backend.endpoint.empty()) throw ConfigError("image backend endpoint is not configured");

    GeneratedImageRef ref;
    ref.request = to_json(request, backend.model);

    http::ClientOptions options;
    options.read_timeout = backend.timeout;
    http::Response response;
    try {
        response = http::post_json(http::Url::parse(backend.endpoint), ref.request.dump(), options);
    } catch (const http::TransportError& e) {
        if (e.timed_out()) throw GenTimeout(std::string("image backend timed out: ") + e.what());
        throw GenError(std::string("image backend unreachable: ") + e.what(), 0);
    }
    if (!http::is_success(response.status)) {
        throw GenError("image backend answered HTTP " + std::to_string(response.status), response.status);
    }

    const json reply = json::parse(response.body, nullptr, false);
    if (reply.is_discarded() || !reply.contains("image") || !reply["image"].is_string()) {
        throw GenError("image backend reply has no image field", response.status);
    }
    std::string image = reply["image"].get<std::string>();

    if (http::Url::is_absolute(image)) {
        ref.location = image;
        return ref;
    }
    std::error_code ec;
    if (!image.empty() && image.size() < 4096 && std::filesystem::exists(image, ec)) {
        ref.location = image;
        return ref;
    }

    if (image.starts_with("data:")) {
        const auto comma = image.find(',');
        image = comma == std::string::npos ? std::string() : image.substr(comma + 1);
    }
    std::string bytes;
    try {
        bytes = io::base64_decode(image);
    } catch (const std::exception& e) {
        throw GenError(std::string("image field is neither a location nor base64: ") + e.what(), response.status);
    }
    if (bytes.empty()) throw GenError("image backend returned an empty image", response.status);

    std::filesystem::create_directories(out_dir);
    const auto path = out_dir / (stem + extension_for(bytes));
    io::write_file(path, bytes);
    ref.location = path.string();
    ref.sha256 = io::sha256_hex(bytes);
    return ref;
}

}  // namespace texttiger::promptgen
