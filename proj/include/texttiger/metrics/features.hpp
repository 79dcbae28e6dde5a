#pragma once

#include <filesystem>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <Eigen/Dense>
#include <json.hpp>

#include "texttiger/common/error.hpp"

namespace texttiger::metrics {

// TFV1: "TFV1", u32 LE rows, u32 LE cols, rows*cols f32 LE, row-major.
inline constexpr std::string_view kTfv1Magic = "TFV1";

class FeatureFormatError : public Error {
public:
    using Error::Error;
};

enum class FeatureKind { LabelDist, PoolFeatures, ClipImg, ClipTxt };

/// "label_dist", "pool_features", "clip_img", "clip_txt".
std::string_view to_string(FeatureKind kind);
/// Throws FeatureFormatError for unknown names.
FeatureKind parse_feature_kind(std::string_view name);

struct FeatureSidecar {
    FeatureKind kind = FeatureKind::PoolFeatures;
    std::string source;
    std::string model;
    std::string created;
    nlohmann::json extra = nlohmann::json::object();  // any other keys, kept verbatim
};

nlohmann::json to_json(const FeatureSidecar& sidecar);
FeatureSidecar sidecar_from_json(const nlohmann::json& j);

/// "<features>.json" next to the feature file.
std::filesystem::path sidecar_path_for(const std::filesystem::path& features);

/// Values are widened to double. Throws FeatureFormatError on a bad magic,
/// a short payload or trailing bytes.
Eigen::MatrixXd read_tfv1(std::istream& in);
Eigen::MatrixXd read_tfv1(const std::filesystem::path& path);

/// Values are narrowed to float32.
void write_tfv1(const Eigen::MatrixXd& values, std::ostream& out);
void write_tfv1(const Eigen::MatrixXd& values, const std::filesystem::path& path);

struct FeatureFile {
    Eigen::MatrixXd values;
    std::optional<FeatureSidecar> sidecar;
};

/// Reads the matrix and, when present, its sidecar. A sidecar whose kind
/// differs from `expected` raises FeatureFormatError.
FeatureFile load_features(const std::filesystem::path& path, std::optional<FeatureKind> expected = std::nullopt);
void save_features(const std::filesystem::path& path, const Eigen::MatrixXd& values, const FeatureSidecar& sidecar);

}  // namespace texttiger::metrics
