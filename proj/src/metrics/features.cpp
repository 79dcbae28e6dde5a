#include "texttiger/metrics/features.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "texttiger/common/io.hpp"

namespace texttiger::metrics {

using nlohmann::json;

namespace {

constexpr std::array<std::pair<FeatureKind, std::string_view>, 4> kKindNames{{
    {FeatureKind::LabelDist, "label_dist"},
    {FeatureKind::PoolFeatures, "pool_features"},
    {FeatureKind::ClipImg, "clip_img"},
    {FeatureKind::ClipTxt, "clip_txt"},
}};

void put_u32(std::ostream& out, std::uint32_t v) {
    const char bytes[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
                           static_cast<char>((v >> 16) & 0xff), static_cast<char>((v >> 24) & 0xff)};
    out.write(bytes, 4);
}

std::uint32_t get_u32(const unsigned char* p) {
    return static_cast<std::uint32_t>(p[0]) | static_cast<std::uint32_t>(p[1]) << 8 |
           static_cast<std::uint32_t>(p[2]) << 16 | static_cast<std::uint32_t>(p[3]) << 24;
}

}  // namespace

std::string_view to_string(FeatureKind kind) {
    for (const auto& [k, name] : kKindNames) {
        if (k == kind) return name;
    }
    return "unknown";
}

FeatureKind parse_feature_kind(std::string_view name) {
    for (const auto& [k, n] : kKindNames) {
        if (n == name) return k;
    }
    throw FeatureFormatError("unknown feature kind: " + std::string(name));
}

json to_json(const FeatureSidecar& sidecar) {
    json j = sidecar.extra.is_object() ? sidecar.extra : json::object();
    j["kind"] = to_string(sidecar.kind);
    j["source"] = sidecar.source;
    j["model"] = sidecar.model;
    j["created"] = sidecar.created;
    return j;
}

FeatureSidecar sidecar_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        throw FeatureFormatError("feature sidecar needs a string \"kind\"");
    }
    FeatureSidecar s;
    s.kind = parse_feature_kind(j["kind"].get<std::string>());
    s.source = j.value("source", "");
    s.model = j.value("model", "");
    s.created = j.value("created", "");
    for (const auto& [key, value] : j.items()) {
        if (key != "kind" && key != "source" && key != "model" && key != "created") s.extra[key] = value;
    }
    return s;
}

std::filesystem::path sidecar_path_for(const std::filesystem::path& features) {
    auto p = features;
    p += ".json";
    return p;
}

Eigen::MatrixXd read_tfv1(std::istream& in) {
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (data.size() < 12 || std::string_view(data).substr(0, 4) != kTfv1Magic) {
        throw FeatureFormatError("not a TFV1 feature file");
    }
    const auto* bytes = reinterpret_cast<const unsigned char*>(data.data());
    const std::uint64_t rows = get_u32(bytes + 4);
    const std::uint64_t cols = get_u32(bytes + 8);
    const std::uint64_t expected = 12 + rows * cols * 4;
    if (data.size() < expected) {
        throw FeatureFormatError("TFV1 payload is truncated: " + std::to_string(data.size()) + " of " +
                                 std::to_string(expected) + " bytes");
    }
    if (data.size() > expected) throw FeatureFormatError("TFV1 file has trailing bytes");

    Eigen::MatrixXd m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    const unsigned char* p = bytes + 12;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c, p += 4) {
            m(r, c) = static_cast<double>(std::bit_cast<float>(get_u32(p)));
        }
    }
    return m;
}

Eigen::MatrixXd read_tfv1(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    return read_tfv1(in);
}

void write_tfv1(const Eigen::MatrixXd& values, std::ostream& out) {
    if (values.rows() > UINT32_MAX || values.cols() > UINT32_MAX) throw FeatureFormatError("matrix too large for TFV1");
    out.write(kTfv1Magic.data(), 4);
    put_u32(out, static_cast<std::uint32_t>(values.rows()));
    put_u32(out, static_cast<std::uint32_t>(values.cols()));
    for (Eigen::Index r = 0; r < values.rows(); ++r) {
        for (Eigen::Index c = 0; c < values.cols(); ++c) {
            put_u32(out, std::bit_cast<std::uint32_t>(static_cast<float>(values(r, c))));
        }
    }
}

void write_tfv1(const Eigen::MatrixXd& values, const std::filesystem::path& path) {
    std::ostringstream out;
    write_tfv1(values, out);
    io::write_file(path, out.str());
}

FeatureFile load_features(const std::filesystem::path& path, std::optional<FeatureKind> expected) {
    FeatureFile f;
    f.values = read_tfv1(path);
    const auto side = sidecar_path_for(path);
    if (std::filesystem::exists(side)) {
        json j = json::parse(io::read_file(side), nullptr, false);
        if (j.is_discarded()) throw FeatureFormatError(side.string() + " is not JSON");
        f.sidecar = sidecar_from_json(j);
        if (expected && f.sidecar->kind != *expected) {
            throw FeatureFormatError(path.string() + " holds " + std::string(to_string(f.sidecar->kind)) +
                                     ", expected " + std::string(to_string(*expected)));
        }
    }
    return f;
}

void save_features(const std::filesystem::path& path, const Eigen::MatrixXd& values, const FeatureSidecar& sidecar) {
    write_tfv1(values, path);
    io::write_file(sidecar_path_for(path), to_json(sidecar).dump(2) + "\n");
}

}  // namespace texttiger::metrics
